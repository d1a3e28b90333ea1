#pragma once

#include "dyqg/intertwine/intertwiner.hpp"

namespace dyqg::intertwine {

// diag(z^{out}) C diag(z^{-in}) at z = e^{2 pi i u}.
struct GradedOperator {
  Mat C;
  Vec out, in;
  Mat at(cplx u) const;
};

// X: flattened truncated Verma M_{nu, l}; V = C^2 with twist on the affine node.

// J_{V,X}(z) on V (x) X, index j dim(X) + xi, built from M_{lambda,k} -> M_{lambda-nu_x, k-l} (x) X.
GradedOperator fusion_VX(const Params& p, const TargetSpace& X, VermaCache* cache = nullptr);

// J*_{X,V}(z) on X (x) V, index 2 xi + j, built from M_{lambda,k} -> M_{lambda-mu_j, k} (x) V(z)
// with the middle truncated at F-length mid_depth.
GradedOperator fusion_XV(const Params& p, const TargetSpace& X, int mid_depth,
                         VermaCache* cache = nullptr);

// Degree-zero part of the braiding X (x) V(z) -> V(z q^{-l}) (x) X: the constant
// matrix q^{-l G_T} T(1) q^{l G_w} S(1)^{-1}, rows V (x) X, columns X (x) V.
Mat braid_constant(const Params& p, const TargetSpace& X);

// Permutation with P[2 xi + j, j dim(X) + xi] = 1.
Mat swap_VX(Eigen::Index dimX);

}  // namespace dyqg::intertwine
