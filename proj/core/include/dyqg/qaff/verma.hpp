#pragma once

#include <map>
#include <optional>
#include <vector>

#include "dyqg/qaff/presentation.hpp"

namespace dyqg::qaff {

// Letter counts (c_0, ..., c_{n-1}) of an F-word; labels a weight block.
using Counts = std::vector<int>;

struct VermaBlock {
  Counts counts;
  std::vector<std::vector<int>> words;  // outermost letter first
  Mat gram;                             // contravariant form on the chosen words
  std::vector<Mat> F;                   // F[i]: block(counts - e_i) -> this block
  std::vector<Mat> E;                   // E[i]: this block -> block(counts - e_i)
  real gram_cond = 1;                   // condition number of the equilibrated Gram

  Eigen::Index dim() const { return static_cast<Eigen::Index>(words.size()); }
  int length() const;
};

class VermaError : public Error {
 public:
  VermaError(const std::string& w, Counts c, real cond) : Error(w), counts(std::move(c)), cond(cond) {}
  Counts counts;
  real cond;
};

struct VermaOptions {
  int depth = 0;                    // maximal F-word length
  std::optional<Counts> cap;        // build only blocks with counts <= cap componentwise
  bool check_kostant = true;        // compare block ranks with partition counts
};

// Flattened truncation with block bookkeeping.
struct FlatVerma {
  GeneratorTable table;
  std::vector<Counts> counts;                  // per basis vector
  std::vector<std::vector<cplx>> weights;      // finite weight per basis vector
  std::vector<std::pair<Eigen::Index, Eigen::Index>> spans;  // per block: offset, dim
  std::map<Counts, std::size_t> block_of;      // counts -> index into spans
};

class TruncatedVermaModule {
 public:
  TruncatedVermaModule(const Params& p, std::vector<cplx> lambda, cplx k, const VermaOptions& opt);

  const Params& params() const { return p_; }
  const std::vector<cplx>& lambda() const { return lambda_; }
  cplx level() const { return k_; }
  int depth() const { return opt_.depth; }
  int n() const { return p_.n; }

  const VermaBlock* block(const Counts& c) const;
  const std::vector<Counts>& order() const { return order_; }  // by length, then counts
  const std::map<Counts, VermaBlock>& blocks() const { return blocks_; }

  // Exponent of K_i on the block: lambda(h_i) - sum_j a_ij c_j.
  cplx hexp(const Counts& c, int i) const;
  std::vector<cplx> weight(const Counts& c) const;
  cplx conformal_weight() const { return delta_; }
  cplx d_eigen(const Counts& c) const { return -delta_ - cplx(c[0]); }

  FlatVerma flatten() const;

 private:
  void build_block(const Counts& c);

  Params p_;
  AlgebraPresentation pres_;
  std::vector<cplx> lambda_;
  cplx k_;
  VermaOptions opt_;
  cplx delta_;
  std::map<Counts, VermaBlock> blocks_;
  std::vector<Counts> order_;
};

TruncatedVermaModule build_verma(const Params& p, int depth);

// Delta_k(lambda) = (lambda, lambda + 2 rho) / (2 (k + n)); throws at the critical level.
cplx delta_k(const std::vector<cplx>& lambda, cplx k, int n);
inline cplx delta_k(cplx m, cplx k) { return delta_k(std::vector<cplx>{m}, k, 2); }

// Coefficient of the highest weight vector in a flattened vector.
cplx dual_pairing(const FlatVerma& module, const Vec& x);

// Number of ways to write sum c_i alpha_i as a sum of positive affine roots
// (real roots with multiplicity 1, imaginary roots with multiplicity n-1).
long long kostant_count(int n, const Counts& c);

}  // namespace dyqg::qaff
