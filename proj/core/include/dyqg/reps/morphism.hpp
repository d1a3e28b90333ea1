#pragma once

#include "dyqg/reps/bounded.hpp"

namespace dyqg::reps {

// phi(m): V -> W, dim W x dim V.
using RepMorphism = std::function<Mat(cplx m)>;

struct MorphismReport {
  std::vector<real> residuals;
  real tol = 0;
  real worst() const;
  bool pass() const { return worst() < tol; }
};

// L_W(u, m) phi_2(m - h^{(1)}) = phi_2(m) L_V(u, m) on the reliable part of V, at seeded u.
MorphismReport check_morphism(const RepMorphism& phi, const BoundedRepresentation& V,
                              const BoundedRepresentation& W, cplx m, cplx k, int samples,
                              std::uint64_t seed, real tol);

}  // namespace dyqg::reps
