#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include <Eigen/Sparse>

#include "dyqg/qaff/evaluation.hpp"
#include "dyqg/qaff/verma.hpp"

namespace dyqg::intertwine {

using qaff::Counts;

// The space Y in M_{lambda,k} -> M_{mu,k-l} (x) Y, untwisted (z = 1).
struct TargetSpace {
  qaff::GeneratorTable table;
  std::vector<std::vector<cplx>> weights;  // finite weight per basis vector
  std::vector<Counts> counts;              // letter counts per basis vector (Verma only)
  std::vector<int> grade;                  // number of F_0 letters (0 for evaluation modules)
  std::vector<std::vector<int>> words;     // F-word of each basis vector (Verma only)
  cplx level{};                            // l
  cplx top_h1{};                           // nu(h_1) of the highest vector (Verma only)
  bool is_verma = false;
  // Sparse copies of A_i = -K_i^{-1} E_i and F_i for word actions.
  std::vector<Eigen::SparseMatrix<cplx>> A, F;

  Eigen::Index dim() const { return table.dim; }
  void finalize();
  static TargetSpace evaluation(const qaff::EvaluationModule& v);
  // Twisted by D_z: E_0, F_0 carry z, z^{-1}.
  static TargetSpace evaluation(const qaff::EvaluationModule& v, cplx z);
  static TargetSpace verma(const qaff::TruncatedVermaModule& x);
};

// Shared truncated Vermas keyed by (lambda, k, depth, cap).
class VermaCache {
 public:
  std::shared_ptr<const qaff::TruncatedVermaModule> get(const Params& p,
                                                        const std::vector<cplx>& lambda, cplx k,
                                                        int depth, const std::optional<Counts>& cap);
  std::size_t size() const;

 private:
  mutable std::mutex mu_;
  std::map<std::vector<real>, std::shared_ptr<const qaff::TruncatedVermaModule>> map_;
};

struct Intertwiner {
  std::vector<cplx> source;
  cplx source_level{};
  std::vector<cplx> target;
  cplx target_level{};
  Vec leading;                                      // <Phi> = y
  std::shared_ptr<const qaff::TruncatedVermaModule> target_module;
  std::map<Counts, Mat> coeff;                      // block dim x dim Y
  cplx exponent{};                                  // Delta_k(lambda) - Delta_{k-l}(mu)
  int N = 0;                                        // highest stored F_0 grade
  real gram_cond_max = 1;
};

// Weight of a homogeneous vector; throws if y mixes weights.
std::vector<cplx> vector_weight(const TargetSpace& y_space, const Vec& y);

// Coefficients of Phi(x_lambda) in every target block with at most N letters F_0,
// from the Gram solve against the words A_{i1}...A_{ir} y, A_i = -K_i^{-1} E_i on Y.
Intertwiner solve_intertwiner(const Params& p, const std::vector<cplx>& lambda, cplx k,
                              const TargetSpace& Y, const Vec& y, int N,
                              VermaCache* cache = nullptr, int max_length = -1);

// max over i and stored target blocks of |Delta(E_i) Phi(x_lambda)|, relative to the coefficient scale.
real annihilation_residual(const Intertwiner& phi, const TargetSpace& Y, const Params& p);

// Top-component contraction of an outer intertwiner against the inner one:
// sum_B sum_y g(y) (x) w_B[y] grouped by the F_0-count of B, with
// g(y) = prod q^{-ev_{y_i}} F_{y_1}...F_{y_r} v on the outer space.
// Output index: outer basis * dim(inner Y) + inner basis.
std::map<int, Vec> contract_top(const Params& p, const Intertwiner& inner, const TargetSpace& outer,
                                const Vec& v, const std::vector<cplx>& outer_target_labels);

}  // namespace dyqg::intertwine
