#pragma once

#include <map>
#include <memory>
#include <string>

#include "dyqg/core/json_io.hpp"
#include "dyqg/exchange/mixed_exchange.hpp"
#include "dyqg/exchange/qdybe.hpp"

namespace dyqg::reps {

// A graded, bounded-above space with an L-operator on C^2 (x) V and central charge l.
// L(u, m, k) = diag(z^{out}) C(m, k) diag(z^{-in}) whenever a graded form is available.
struct BoundedRepresentation {
  exchange::LOperator L;
  std::vector<int> degree;   // d-eigenvalue shift of each basis vector (<= 0)
  std::vector<int> length;   // F-word length, for the safe window
  int safe = 0;              // vectors with length <= safe are exact
  real s = -1;               // parameter domain Re k > s
  json recipe;               // enough to rebuild the object

  // Graded form, when L comes from a single mixed exchange.
  std::function<const intertwine::GradedOperator&(cplx m, cplx k)> graded;

  Eigen::Index dim() const { return L.dim; }
  cplx level() const { return L.level; }
  std::map<int, int> graded_dims() const;
  void check_domain(cplx k) const;
};

// Checks of the four definitional clauses on the stored window.
struct ClauseReport {
  real weight_zero = 0;     // off-weight part of each coefficient, relative
  real homogeneity = 0;     // spread of the z-offset within each (slot, weight) class
  int lower_violations = 0; // entries below the per-vector bound
  int lower_bound_max = 0;  // largest per-vector bound, reported for the block
  real rll = 0;
  real smooth_h = 0, smooth_h2 = 0;  // second differences in m at steps h and h/2
  real tol = 1e-8L;
  bool smooth_ok() const;
  bool pass() const;
};

ClauseReport check_clauses(const BoundedRepresentation& rep, const exchange::RFunction& R, cplx m,
                           cplx k, int samples, std::uint64_t seed, real tol);

json graded_dims_json(const BoundedRepresentation& rep);

}  // namespace dyqg::reps
