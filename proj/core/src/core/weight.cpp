#include "dyqg/core/weight.hpp"

#include <algorithm>

namespace dyqg {

namespace {

std::vector<cplx> combine(const std::vector<cplx>& a, const std::vector<cplx>& b, real s) {
  if (a.size() != b.size()) throw Error("weight rank mismatch");
  std::vector<cplx> r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + s * b[i];
  return r;
}

}  // namespace

Weight Weight::operator+(const Weight& o) const {
  return {combine(coords, o.coords, 1), level + o.level, degree + o.degree};
}

Weight Weight::operator-(const Weight& o) const {
  return {combine(coords, o.coords, -1), level - o.level, degree - o.degree};
}

real fundamental_pairing(int n, int i, int j) {
  return static_cast<real>(std::min(i, j) * (n - std::max(i, j))) / n;
}

cplx pairing(int n, const std::vector<cplx>& a, const std::vector<cplx>& b) {
  if (static_cast<int>(a.size()) != n - 1 || static_cast<int>(b.size()) != n - 1)
    throw Error("pairing: weight must have n-1 coordinates");
  cplx s{};
  for (int i = 1; i < n; ++i)
    for (int j = 1; j < n; ++j) s += a[i - 1] * b[j - 1] * fundamental_pairing(n, i, j);
  return s;
}

std::vector<cplx> rho(int n) { return std::vector<cplx>(n - 1, cplx(1)); }

std::vector<cplx> simple_root(int n, int i) {
  std::vector<cplx> r(n - 1, cplx{});
  if (n == 2) {
    r[0] = i == 0 ? -2.0L : 2.0L;
    return r;
  }
  // Row i of the affine Cartan matrix, read at the finite nodes.
  for (int j = 1; j < n; ++j) {
    int a = 0;
    if (i == j) a = 2;
    else if ((i - j + n) % n == 1 || (j - i + n) % n == 1) a = -1;
    r[j - 1] = cplx(a);
  }
  return r;
}

std::vector<cplx> affine_labels(const std::vector<cplx>& lambda, cplx k) {
  std::vector<cplx> r(lambda.size() + 1);
  cplx s{};
  for (std::size_t i = 0; i < lambda.size(); ++i) {
    r[i + 1] = lambda[i];
    s += lambda[i];
  }
  r[0] = k - s;
  return r;
}

}  // namespace dyqg
