#pragma once

#include <string>
#include <vector>

#include "dyqg/qaff/presentation.hpp"

namespace dyqg::qaff {

struct RelationResidual {
  std::string name;
  real residual = 0;  // max entry of the residual over the admissible columns, relative to term scale
};

struct RelationReport {
  std::vector<RelationResidual> entries;
  real tol = 0;
  bool pass() const;
  real worst() const;
};

// Checks the defining relations on every column whose source vector leaves
// enough room below the truncation for all F-letters of the relation.
RelationReport check_relations(const GeneratorTable& t, const AlgebraPresentation& pres, cplx q,
                               real tol);

// [m choose r]_q with symmetric q-integers.
cplx qbinomial(cplx q, int m, int r);

}  // namespace dyqg::qaff
