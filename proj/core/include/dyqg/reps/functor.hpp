#pragma once

#include "dyqg/exchange/exchange.hpp"
#include "dyqg/reps/bounded.hpp"

namespace dyqg::reps {

// Finite object: X = C^2 with L = R_{C^2,C^2}.
BoundedRepresentation functor_F(std::shared_ptr<const exchange::FiniteExchange> R);

struct FunctorOptions {
  int depth = 5;     // working truncation of X
  int safe = 1;      // exact window
  int mid_depth = -1;  // middle truncation in J*; defaults to depth
  real s = -1;
  int margin = -1;   // headroom above the safe window; -1 picks required_margin(p)
};

// Truncating X drops intermediate states whose contribution falls by about |p|
// per imaginary root (two levels), so the headroom is 2j + 1 with the smallest
// j such that 10 |p|^j < 1e-9.
int required_margin(const Params& p);

// X = M_{nu, l} truncated at the working depth; L = R~_{C^2, X}(u, m, k).
// Throws when depth < safe + margin, naming the depth required.
BoundedRepresentation functor_Fl(const Params& p, cplx nu, cplx l, const FunctorOptions& opt,
                                 std::shared_ptr<intertwine::VermaCache> cache = nullptr);

// Rebuilds an object from its recipe (kinds vector, verma, unit, tensor).
BoundedRepresentation from_recipe(const json& recipe,
                                  std::shared_ptr<intertwine::VermaCache> cache = nullptr);

}  // namespace dyqg::reps
