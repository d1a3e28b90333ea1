#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "dyqg/core/scalar.hpp"

namespace dyqg {

struct Params {
  cplx q{0.97L * std::cos(1.0L), 0.97L * std::sin(1.0L)};
  cplx logq{std::log(0.97L), 1.0L};
  cplx k{0.0L, -4.5L};
  std::vector<cplx> lambda{cplx{0.7L, 0.2L}};  // fundamental-weight coordinates
  int n = 2;
  int N = 3;
  real tol = 1e-8L;
  std::uint64_t seed = 0;

  int dual_coxeter() const { return n; }
  cplx qpow(cplx a) const { return std::exp(a * logq); }
  // [a] = (q^a - q^-a)/(q - q^-1)
  cplx qint(cplx a) const { return (qpow(a) - qpow(-a)) / (q - 1.0L / q); }
  // p = q^{-2(k+h)}
  cplx p() const { return qpow(-2.0L * (k + cplx(n))); }
  // p = e^{2 pi i tau}
  cplx tau() const { return I / pi * (k + cplx(n)) * logq; }
  // Felder step: e^{2 pi i eta} = q^2
  cplx eta() const { return logq / (pi * I); }
  cplx m() const { return lambda.empty() ? cplx{} : lambda[0]; }

  // Throws Error naming the violated precondition.
  void validate(int root_bound = 64) const;

  Params with_k(cplx kk) const {
    Params r = *this;
    r.k = kk;
    return r;
  }
  Params with_m(cplx mm) const {
    Params r = *this;
    r.lambda = {mm};
    return r;
  }

  // Sets q and the principal branch of log q.
  void set_q(cplx qq);
};

// Seeded box for generic parameters. Defaults keep |p| small enough for
// the spectral-parameter series to converge on |z| = 1.
struct ParamBox {
  real k_re_lo = -0.3L, k_re_hi = 0.3L;
  real k_im_lo = -4.6L, k_im_hi = -4.0L;
  real lam_re_lo = -0.9L, lam_re_hi = 0.9L;
  real lam_im_lo = -0.6L, lam_im_hi = 0.6L;

  static ParamBox spectral() { return {}; }
  // Deeper box for the central-charge constructions.
  static ParamBox central() {
    ParamBox b;
    b.k_im_lo = -6.3L;
    b.k_im_hi = -5.8L;
    return b;
  }
};

// The one seeded generator behind all sampling. Uniforms are built from the
// top 53 bits so streams agree across standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : g_(seed * 0x9E3779B97F4A7C15ULL + 0x1234567ULL) {}
  real uniform(real lo, real hi) { return lo + (hi - lo) * static_cast<real>(g_() >> 11) * 0x1.0p-53L; }

 private:
  std::mt19937_64 g_;
};

Params sample_generic(const Params& base, std::uint64_t seed, const ParamBox& box = {});

}  // namespace dyqg
