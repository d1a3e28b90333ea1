#include "dyqg/qaff/verma.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "dyqg/core/weight.hpp"

namespace dyqg::qaff {

int VermaBlock::length() const {
  int s = 0;
  for (int x : counts) s += x;
  return s;
}

cplx delta_k(const std::vector<cplx>& lambda, cplx k, int n) {
  if (std::abs(k + cplx(n)) < 1e-12L) throw Error("critical level: k = -n");
  auto r = rho(n);
  std::vector<cplx> l2(lambda.size());
  for (std::size_t i = 0; i < lambda.size(); ++i) l2[i] = lambda[i] + 2.0L * r[i];
  return pairing(n, lambda, l2) / (2.0L * (k + cplx(n)));
}

namespace {

std::string show(const Counts& c) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < c.size(); ++i) os << (i ? "," : "") << c[i];
  os << ")";
  return os.str();
}

void compositions(int n, int total, Counts& cur, int pos, std::vector<Counts>& out) {
  if (pos == n - 1) {
    cur[pos] = total;
    out.push_back(cur);
    return;
  }
  for (int x = total; x >= 0; --x) {
    cur[pos] = x;
    compositions(n, total - x, cur, pos + 1, out);
  }
}

Counts minus(const Counts& c, int i) {
  Counts r = c;
  r[i] -= 1;
  return r;
}

// Rank from the largest gap in the log-spectrum; full rank if no clear gap.
Eigen::Index gap_rank(const RVec& sv) {
  const Eigen::Index n = sv.size();
  if (n <= 1) return n;
  Eigen::Index best = -1;
  real gap = 0;
  for (Eigen::Index t = 0; t + 1 < n; ++t) {
    real a = std::log10(std::max(sv(t), 1e-300L)), b = std::log10(std::max(sv(t + 1), 1e-300L));
    if (a - b > gap) {
      gap = a - b;
      best = t;
    }
  }
  if (best >= 0 && gap > 3 && sv(best + 1) < 1e-7L * sv(0)) return best + 1;
  return n;
}

}  // namespace

TruncatedVermaModule::TruncatedVermaModule(const Params& p, std::vector<cplx> lambda, cplx k,
                                           const VermaOptions& opt)
    : p_(p), pres_(AlgebraPresentation::affine_sl(p.n)), lambda_(std::move(lambda)), k_(k), opt_(opt) {
  if (static_cast<int>(lambda_.size()) != p.n - 1) throw Error("verma: lambda needs n-1 coordinates");
  if (opt.depth < 0) throw Error("verma: depth must be non-negative");
  delta_ = delta_k(lambda_, k_, p.n);
  const int n = p.n;

  VermaBlock top;
  top.counts = Counts(n, 0);
  top.words = {{}};
  top.gram = Mat::Identity(1, 1);
  top.F.assign(n, Mat());
  top.E.assign(n, Mat());
  blocks_.emplace(top.counts, top);
  order_.push_back(top.counts);

  for (int L = 1; L <= opt.depth; ++L) {
    std::vector<Counts> layer;
    Counts cur(n, 0);
    compositions(n, L, cur, 0, layer);
    std::sort(layer.begin(), layer.end());
    for (const auto& c : layer) {
      if (opt.cap) {
        bool in = true;
        for (int i = 0; i < n; ++i) in = in && c[i] <= (*opt.cap)[i];
        if (!in) continue;
      }
      build_block(c);
    }
  }
}

const VermaBlock* TruncatedVermaModule::block(const Counts& c) const {
  auto it = blocks_.find(c);
  return it == blocks_.end() ? nullptr : &it->second;
}

cplx TruncatedVermaModule::hexp(const Counts& c, int i) const {
  auto lab = affine_labels(lambda_, k_);
  cplx e = lab[i];
  for (int j = 0; j < p_.n; ++j) e -= cplx(pres_.cartan(i, j) * c[j]);
  return e;
}

std::vector<cplx> TruncatedVermaModule::weight(const Counts& c) const {
  std::vector<cplx> w = lambda_;
  for (int i = 0; i < p_.n; ++i) {
    auto a = simple_root(p_.n, i);
    for (std::size_t t = 0; t < w.size(); ++t) w[t] -= cplx(c[i]) * a[t];
  }
  return w;
}

void TruncatedVermaModule::build_block(const Counts& c) {
  const int n = p_.n;
  struct Cand {
    int i;
    Eigen::Index b;
  };
  std::vector<Cand> cands;
  std::vector<const VermaBlock*> sub(n, nullptr);
  for (int i = 0; i < n; ++i) {
    if (c[i] == 0) continue;
    sub[i] = block(minus(c, i));
    if (!sub[i]) continue;
    for (Eigen::Index b = 0; b < sub[i]->dim(); ++b) cands.push_back({i, b});
  }
  if (cands.empty()) return;
  const Eigen::Index nc = static_cast<Eigen::Index>(cands.size());

  // E_j F_i b = F_i E_j b + delta_ij [h_i] b, in the basis of block c - e_j.
  std::vector<std::vector<Vec>> ev(nc, std::vector<Vec>(n));
  for (Eigen::Index a = 0; a < nc; ++a) {
    const auto [i, b] = cands[a];
    const Counts ci = minus(c, i);
    for (int j = 0; j < n; ++j) {
      if (!sub[j]) continue;
      Vec v = Vec::Zero(sub[j]->dim());
      if (ci[j] > 0) {
        const VermaBlock* bij = block(minus(ci, j));
        if (bij) {
          Vec e = sub[i]->E[j].col(b);
          v += sub[j]->F[i] * e;
        }
      }
      if (i == j) v(b) += p_.qint(hexp(ci, i));
      ev[a][j] = std::move(v);
    }
  }

  Mat gc(nc, nc);
  for (Eigen::Index a = 0; a < nc; ++a) {
    const auto [i, b] = cands[a];
    for (Eigen::Index t = 0; t < nc; ++t) gc(a, t) = (sub[i]->gram.row(b) * ev[t][i])(0);
  }

  RVec dg(nc);
  for (Eigen::Index a = 0; a < nc; ++a) {
    real s = std::sqrt(std::abs(gc(a, a)));
    dg(a) = s > 0 ? s : 1;
  }
  Mat eq = gc;
  for (Eigen::Index a = 0; a < nc; ++a)
    for (Eigen::Index t = 0; t < nc; ++t) eq(a, t) /= dg(a) * dg(t);

  Eigen::JacobiSVD<Mat> svd(eq);
  RVec sv = svd.singularValues();
  Eigen::Index r = gap_rank(sv);
  if (opt_.check_kostant) {
    long long expect = kostant_count(n, c);
    if (r != expect) {
      std::ostringstream os;
      os << "verma: block " << show(c) << " has numerical rank " << r << ", expected " << expect
         << " (non-generic parameters or lost conditioning)";
      throw VermaError(os.str(), c, sv(0) / std::max(sv(nc - 1), 1e-300L));
    }
  }

  Eigen::ColPivHouseholderQR<Mat> qr(eq);
  std::vector<Eigen::Index> sel(r);
  for (Eigen::Index t = 0; t < r; ++t) sel[t] = qr.colsPermutation().indices()(t);
  std::sort(sel.begin(), sel.end());

  VermaBlock blk;
  blk.counts = c;
  blk.gram = gc(sel, sel);
  for (auto s : sel) {
    std::vector<int> w{cands[s].i};
    const auto& tail = sub[cands[s].i]->words[cands[s].b];
    w.insert(w.end(), tail.begin(), tail.end());
    blk.words.push_back(std::move(w));
  }
  {
    Mat es = eq(sel, sel);
    Eigen::JacobiSVD<Mat> s2(es);
    const auto& v = s2.singularValues();
    blk.gram_cond = v(0) / std::max(v(v.size() - 1), 1e-300L);
  }
  if (!(blk.gram_cond < 1e15L)) {
    std::ostringstream os;
    os << "verma: Gram of block " << show(c) << " is near-singular (condition "
       << static_cast<double>(blk.gram_cond) << ")";
    throw VermaError(os.str(), c, blk.gram_cond);
  }

  Eigen::PartialPivLU<Mat> lu(blk.gram);
  blk.F.assign(n, Mat());
  blk.E.assign(n, Mat());
  for (int i = 0; i < n; ++i) {
    if (!sub[i]) continue;
    std::vector<Eigen::Index> cols;
    for (Eigen::Index a = 0; a < nc; ++a)
      if (cands[a].i == i) cols.push_back(a);
    blk.F[i] = lu.solve(Mat(gc(sel, cols)));
    Mat e(sub[i]->dim(), r);
    for (Eigen::Index t = 0; t < r; ++t) e.col(t) = ev[sel[t]][i];
    blk.E[i] = std::move(e);
  }
  order_.push_back(c);
  blocks_.emplace(c, std::move(blk));
}

FlatVerma TruncatedVermaModule::flatten() const {
  const int n = p_.n;
  FlatVerma f;
  Eigen::Index off = 0;
  for (const auto& c : order_) {
    const VermaBlock& b = blocks_.at(c);
    f.block_of[c] = f.spans.size();
    f.spans.push_back({off, b.dim()});
    for (Eigen::Index t = 0; t < b.dim(); ++t) {
      f.counts.push_back(c);
      f.weights.push_back(weight(c));
    }
    off += b.dim();
  }
  GeneratorTable& t = f.table;
  t.n = n;
  t.dim = off;
  t.E.assign(n, Mat::Zero(off, off));
  t.F.assign(n, Mat::Zero(off, off));
  t.K.assign(n, Vec(off));
  t.d = Vec(off);
  t.qc = p_.qpow(k_);
  t.max_length = opt_.depth;
  t.length.resize(off);
  for (const auto& c : order_) {
    const VermaBlock& b = blocks_.at(c);
    auto [o, d] = f.spans[f.block_of.at(c)];
    for (Eigen::Index x = 0; x < d; ++x) {
      t.length[o + x] = b.length();
      t.d(o + x) = d_eigen(c);
      for (int i = 0; i < n; ++i) t.K[i](o + x) = p_.qpow(hexp(c, i));
    }
    for (int i = 0; i < n; ++i) {
      if (b.F[i].size() == 0) continue;
      auto [oi, di] = f.spans[f.block_of.at(minus(c, i))];
      t.F[i].block(o, oi, d, di) = b.F[i];
      t.E[i].block(oi, o, di, d) = b.E[i];
    }
  }
  return f;
}

TruncatedVermaModule build_verma(const Params& p, int depth) {
  VermaOptions o;
  o.depth = depth;
  return TruncatedVermaModule(p, p.lambda, p.k, o);
}

cplx dual_pairing(const FlatVerma&, const Vec& x) {
  return x.size() ? x(0) : cplx{};
}

}  // namespace dyqg::qaff
