#pragma once

// Exact counting arithmetic. All verification paths compare arbitrary
// precision integers; rational factors are cleared to a common denominator
// before comparing, never evaluated in floating point.

#include <array>
#include <cstdint>
#include <stdexcept>

#include <boost/multiprecision/cpp_int.hpp>

namespace scfam {

using BigCount = boost::multiprecision::cpp_int;

// C(m,l), exact, with the convention C(m,l) = 0 for l > m.
inline BigCount binomial(long long m, long long l) {
  if (m < 0 || l < 0) throw std::invalid_argument("binomial: negative argument");
  if (l > m) return 0;
  if (l > m - l) l = m - l;
  BigCount r = 1;
  for (long long i = 1; i <= l; ++i) {
    r *= (m - l + i);
    r /= i;  // exact: product of i consecutive integers is divisible by i!
  }
  return r;
}

inline BigCount factorial(long long m) {
  if (m < 0) throw std::invalid_argument("factorial: negative argument");
  BigCount r = 1;
  for (long long i = 2; i <= m; ++i) r *= i;
  return r;
}

namespace detail {

// Machine-word binomials for the n <= 64 universe (C(64,32) < 2^63).
// Used by ranking/unranking and the sweep drivers.
inline std::uint64_t binom64(int n, int k) {
  static const auto table = [] {
    std::array<std::array<std::uint64_t, 65>, 65> t{};
    for (int i = 0; i <= 64; ++i) {
      t[i][0] = 1;
      for (int j = 1; j <= i; ++j)
        t[i][j] = t[i - 1][j - 1] + (j <= i - 1 ? t[i - 1][j] : 0);
    }
    return t;
  }();
  if (n < 0 || n > 64 || k < 0 || k > n) return 0;
  return table[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

}  // namespace detail

}  // namespace scfam
