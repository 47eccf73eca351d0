#pragma once
// Test-side reference computations, written independently of the library
// code they are compared against.

#include "pd/rat.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace oracle {

// Generalized binomial coefficient t(t-1)...(t-k+1)/k! by direct expansion.
inline pd::Rat binom(const pd::Rat& t, unsigned k) {
  pd::Rat num = 1, den = 1;
  for (unsigned j = 0; j < k; ++j) {
    num *= t - j;
    den *= j + 1;
  }
  return num / den;
}

inline long ibinom(long n, long k) {
  if (k < 0 || n < k) return 0;
  long r = 1;
  for (long j = 1; j <= k; ++j) r = r * (n - k + j) / j;
  return r;
}

// Graded dimension of the k-th alternating power of Q^{p|q}: the even part
// contributes exterior powers, the odd part symmetric powers; a summand with j
// odd factors has parity j.  Returns {dimension, signed dimension}.
inline std::pair<long, long> alt_dims(long p, long q, long k) {
  long dim = 0, sdim = 0;
  for (long j = 0; j <= k; ++j) {
    long d = ibinom(p, k - j) * ibinom(q + j - 1, j);
    if (q == 0) d = (j == 0) ? ibinom(p, k) : 0;
    dim += d;
    sdim += (j % 2 ? -d : d);
  }
  return {dim, sdim};
}

// Same for symmetric powers: symmetric in the even part, exterior in the odd.
inline std::pair<long, long> sym_dims(long p, long q, long k) {
  long dim = 0, sdim = 0;
  for (long j = 0; j <= k; ++j) {
    long e = (p == 0) ? (k - j == 0 ? 1 : 0) : ibinom(p + (k - j) - 1, k - j);
    long d = ibinom(q, j) * e;
    dim += d;
    sdim += (j % 2 ? -d : d);
  }
  return {dim, sdim};
}

inline long factorial(long n) { return n <= 1 ? 1 : n * factorial(n - 1); }

inline long inversions(const std::vector<std::uint32_t>& s) {
  long n = 0;
  for (std::size_t a = 0; a < s.size(); ++a)
    for (std::size_t b = a + 1; b < s.size(); ++b)
      if (s[a] > s[b]) ++n;
  return n;
}

inline std::vector<std::vector<pd::Rat>> dense_mul(const std::vector<std::vector<pd::Rat>>& a,
                                                   const std::vector<std::vector<pd::Rat>>& b) {
  std::size_t n = a.size(), m = b.empty() ? 0 : b[0].size(), l = b.size();
  std::vector<std::vector<pd::Rat>> c(n, std::vector<pd::Rat>(m, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < l; ++k)
      for (std::size_t j = 0; j < m; ++j) c[i][j] += a[i][k] * b[k][j];
  return c;
}

}  // namespace oracle
