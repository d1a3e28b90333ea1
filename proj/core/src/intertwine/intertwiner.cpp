#include "dyqg/intertwine/intertwiner.hpp"

#include <sstream>

#include "dyqg/core/weight.hpp"

namespace dyqg::intertwine {

TargetSpace TargetSpace::evaluation(const qaff::EvaluationModule& v) {
  TargetSpace t;
  t.table = v.untwisted;
  t.weights = v.weights;
  t.grade.assign(v.n, 0);
  t.finalize();
  return t;
}

TargetSpace TargetSpace::evaluation(const qaff::EvaluationModule& v, cplx z) {
  TargetSpace t = evaluation(v);
  t.table = v.at(z);
  t.finalize();
  return t;
}

TargetSpace TargetSpace::verma(const qaff::TruncatedVermaModule& m) {
  auto x = m.flatten();
  TargetSpace t;
  t.table = x.table;
  t.weights = x.weights;
  t.counts = x.counts;
  for (const auto& c : m.order())
    for (const auto& w : m.block(c)->words) t.words.push_back(w);
  for (const auto& c : x.counts) t.grade.push_back(c[0]);
  t.level = m.level();
  t.top_h1 = m.lambda()[0];
  t.is_verma = true;
  t.finalize();
  return t;
}

void TargetSpace::finalize() {
  A.clear();
  F.clear();
  for (int i = 0; i < table.n; ++i) {
    Mat a = -(table.K[i].cwiseInverse().asDiagonal() * table.E[i]);
    A.push_back(a.sparseView());
    F.push_back(table.F[i].sparseView());
  }
}

std::shared_ptr<const qaff::TruncatedVermaModule> VermaCache::get(const Params& p,
                                                                  const std::vector<cplx>& lambda,
                                                                  cplx k, int depth,
                                                                  const std::optional<Counts>& cap) {
  std::vector<real> key;
  for (auto z : lambda) {
    key.push_back(z.real());
    key.push_back(z.imag());
  }
  key.push_back(k.real());
  key.push_back(k.imag());
  key.push_back(p.q.real());
  key.push_back(p.q.imag());
  key.push_back(depth);
  if (cap)
    for (int c : *cap) key.push_back(c);
  {
    std::lock_guard lk(mu_);
    auto it = map_.find(key);
    if (it != map_.end()) return it->second;
  }
  qaff::VermaOptions o;
  o.depth = depth;
  o.cap = cap;
  auto v = std::make_shared<const qaff::TruncatedVermaModule>(p, lambda, k, o);
  std::lock_guard lk(mu_);
  return map_.emplace(key, v).first->second;
}

std::size_t VermaCache::size() const {
  std::lock_guard lk(mu_);
  return map_.size();
}

std::vector<cplx> vector_weight(const TargetSpace& Y, const Vec& y) {
  std::optional<std::vector<cplx>> w;
  real scale = y.cwiseAbs().maxCoeff();
  for (Eigen::Index i = 0; i < y.size(); ++i) {
    if (std::abs(y(i)) <= 1e-14L * scale) continue;
    if (!w) {
      w = Y.weights[i];
    } else {
      for (std::size_t t = 0; t < w->size(); ++t)
        if (std::abs((*w)[t] - Y.weights[i][t]) > 1e-12L) throw Error("leading vector is not a weight vector");
    }
  }
  if (!w) throw Error("leading vector is zero");
  return *w;
}

namespace {

std::optional<Counts> vector_counts(const TargetSpace& Y, const Vec& y) {
  if (!Y.is_verma) return std::nullopt;
  std::optional<Counts> c;
  real scale = y.cwiseAbs().maxCoeff();
  for (Eigen::Index i = 0; i < y.size(); ++i) {
    if (std::abs(y(i)) <= 1e-14L * scale) continue;
    if (!c) c = Y.counts[i];
    else if (*c != Y.counts[i]) throw Error("leading vector mixes grades");
  }
  return c;
}

// Block c contributes only if some basis vector of Y has weight wt(y) + sum c_i alpha_i.
bool reachable(const TargetSpace& Y, const std::vector<cplx>& wy, const Counts& c, int n) {
  std::vector<cplx> w = wy;
  for (int i = 0; i < n; ++i) {
    auto a = simple_root(n, i);
    for (std::size_t t = 0; t < w.size(); ++t) w[t] += cplx(c[i]) * a[t];
  }
  for (const auto& wr : Y.weights) {
    bool eq = true;
    for (std::size_t t = 0; t < w.size(); ++t) eq = eq && std::abs(wr[t] - w[t]) < 1e-9L;
    if (eq) return true;
  }
  return false;
}

}  // namespace

Intertwiner solve_intertwiner(const Params& p, const std::vector<cplx>& lambda, cplx k,
                              const TargetSpace& Y, const Vec& y, int N, VermaCache* cache,
                              int max_length) {
  const int n = p.n;
  if (N < 0) throw Error("solve_intertwiner: N must be non-negative");
  auto wy = vector_weight(Y, y);
  Intertwiner phi;
  phi.source = lambda;
  phi.source_level = k;
  phi.target.resize(lambda.size());
  for (std::size_t t = 0; t < lambda.size(); ++t) phi.target[t] = lambda[t] - wy[t];
  phi.target_level = k - Y.level;
  phi.leading = y;
  phi.N = N;

  Counts cap(n, N + 1);
  cap[0] = N;
  if (auto cy = vector_counts(Y, y)) {
    cap = *cy;
    cap[0] = std::min(cap[0], N);
  }
  int depth = 0;
  for (int c : cap) depth += c;
  if (max_length >= 0) depth = std::min(depth, max_length);

  VermaCache local;
  VermaCache& vc = cache ? *cache : local;
  phi.target_module = vc.get(p, phi.target, phi.target_level, depth, cap);
  phi.exponent = qaff::delta_k(lambda, k, n) - qaff::delta_k(phi.target, phi.target_level, n);

  for (const auto& c : phi.target_module->order()) {
    if (c[0] > N) continue;
    if (!Y.is_verma && !reachable(Y, wy, c, n)) continue;
    const auto& blk = *phi.target_module->block(c);
    Mat rhs(blk.dim(), Y.dim());
    for (Eigen::Index s = 0; s < blk.dim(); ++s) {
      Vec v = y;
      const auto& w = blk.words[s];
      for (auto it = w.rbegin(); it != w.rend(); ++it) v = Y.A[*it] * v;
      rhs.row(s) = v.transpose();
    }
    if (rhs.cwiseAbs().maxCoeff() == 0) continue;
    phi.coeff[c] = Eigen::PartialPivLU<Mat>(blk.gram).solve(rhs);
    phi.gram_cond_max = std::max(phi.gram_cond_max, blk.gram_cond);
  }
  return phi;
}

real annihilation_residual(const Intertwiner& phi, const TargetSpace& Y, const Params& p) {
  const int n = p.n;
  real worst = 0, scale = 0;
  for (const auto& [c, m] : phi.coeff) scale = std::max(scale, max_abs(m));
  const auto& M = *phi.target_module;
  for (const auto& c : M.order()) {
    if (c[0] > phi.N) continue;
    const auto* blk = M.block(c);
    for (int i = 0; i < n; ++i) {
      qaff::Counts up = c;
      up[i] += 1;
      // Both sides are fully stored only if the block above is inside the computed window.
      const auto* bup = M.block(up);
      if (!bup || up[0] > phi.N) continue;
      Mat r = Mat::Zero(blk->dim(), Y.dim());
      auto itu = phi.coeff.find(up);
      if (itu != phi.coeff.end()) r += bup->E[i] * itu->second * Y.table.K[i].asDiagonal();
      auto it = phi.coeff.find(c);
      if (it != phi.coeff.end()) r += it->second * Y.table.E[i].transpose();
      worst = std::max(worst, max_abs(r));
    }
  }
  return worst / std::max<real>(scale, 1);
}

std::map<int, Vec> contract_top(const Params& p, const Intertwiner& inner, const TargetSpace& outer,
                                const Vec& v, const std::vector<cplx>& ev) {
  std::map<int, Vec> out;
  const Eigen::Index dy = inner.leading.size();
  for (const auto& [c, X] : inner.coeff) {
    const auto& blk = *inner.target_module->block(c);
    Vec acc = Vec::Zero(outer.dim() * dy);
    for (Eigen::Index s = 0; s < blk.dim(); ++s) {
      Vec g = v;
      cplx fac = 1;
      const auto& w = blk.words[s];
      for (auto it = w.rbegin(); it != w.rend(); ++it) {
        g = outer.F[*it] * g;
        fac *= p.qpow(-ev[*it]);
      }
      g *= fac;
      for (Eigen::Index a = 0; a < outer.dim(); ++a) {
        if (g(a) == cplx{}) continue;
        acc.segment(a * dy, dy) += g(a) * X.row(s).transpose();
      }
    }
    auto [it, fresh] = out.try_emplace(c[0], Vec::Zero(outer.dim() * dy));
    it->second += acc;
  }
  return out;
}

}  // namespace dyqg::intertwine
