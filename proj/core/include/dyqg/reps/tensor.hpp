#pragma once

#include "dyqg/reps/bounded.hpp"

namespace dyqg::reps {

// (A (x) B, L^{12}_A(u, m - h^{(3)}, k - l_B) L^{13}_B(u, m, k)), central charge l_A + l_B.
// Index xa dim(B) + xb.
BoundedRepresentation tensor_product(const BoundedRepresentation& A, const BoundedRepresentation& B);

// One-dimensional trivial object with L = 1.
BoundedRepresentation unit_object();

}  // namespace dyqg::reps
