#include <vector>

#include "dyqg/qaff/verma.hpp"

namespace dyqg::qaff {

namespace {

bool fits(const Counts& r, const Counts& c) {
  for (std::size_t i = 0; i < c.size(); ++i)
    if (r[i] > c[i]) return false;
  return true;
}

}  // namespace

long long kostant_count(int n, const Counts& c) {
  if (static_cast<int>(c.size()) != n) throw Error("kostant_count: rank mismatch");
  for (int x : c)
    if (x < 0) return 0;
  int top = 0;
  for (int x : c) top = std::max(top, x);

  // Positive roots bounded by c, each imaginary root repeated n-1 times.
  std::vector<Counts> roots;
  for (int j = 0; j <= top + 1; ++j) {
    for (int a = 1; a < n; ++a) {
      for (int b = a; b < n; ++b) {
        Counts up(n, j), down(n, j);
        for (int t = a; t <= b; ++t) {
          up[t] += 1;
          down[t] -= 1;
        }
        if (fits(up, c)) roots.push_back(up);
        if (j >= 1 && fits(down, c)) roots.push_back(down);
      }
    }
    if (j >= 1) {
      Counts im(n, j);
      if (fits(im, c))
        for (int m = 0; m < n - 1; ++m) roots.push_back(im);
    }
  }

  // Coin-change over the box 0 <= x <= c, mixed-radix index.
  std::vector<long long> stride(n);
  long long size = 1;
  for (int i = 0; i < n; ++i) {
    stride[i] = size;
    size *= c[i] + 1;
  }
  std::vector<long long> ways(static_cast<std::size_t>(size), 0);
  ways[0] = 1;
  for (const auto& r : roots) {
    long long shift = 0;
    for (int i = 0; i < n; ++i) shift += r[i] * stride[i];
    for (long long idx = 0; idx < size; ++idx) {
      // decode and test that idx - r stays in the box
      long long rem = idx;
      bool ok = true;
      for (int i = n - 1; i >= 0; --i) {
        long long xi = rem / stride[i];
        rem %= stride[i];
        if (xi < r[i]) {
          ok = false;
          break;
        }
      }
      if (ok) ways[idx] += ways[idx - shift];
    }
  }
  long long target = 0;
  for (int i = 0; i < n; ++i) target += c[i] * stride[i];
  return ways[target];
}

}  // namespace dyqg::qaff
