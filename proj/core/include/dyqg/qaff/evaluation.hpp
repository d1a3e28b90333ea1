#pragma once

#include "dyqg/qaff/presentation.hpp"

namespace dyqg::qaff {

// Vector representation C^n with the twist D_z on the affine node.
// E_i = E_{i,i+1}, F_i = E_{i+1,i} for i >= 1; E_0 = z E_{n,1}, F_0 = z^{-1} E_{1,n}.
struct EvaluationModule {
  int n = 2;
  GeneratorTable untwisted;                // z = 1
  std::vector<int> e_twist, f_twist;       // power of z carried by E_i, F_i
  std::vector<std::vector<cplx>> weights;  // fundamental coordinates of e_1..e_n

  static EvaluationModule vector(const Params& p);

  GeneratorTable at(cplx z) const;
  // lambda(h_1) of basis vector j for n = 2: +1, -1.
  cplx h1(int j) const { return weights[j][0]; }
};

}  // namespace dyqg::qaff
