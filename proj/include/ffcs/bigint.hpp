#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include <boost/multiprecision/gmp.hpp>

namespace ffcs {

using BigInt = boost::multiprecision::mpz_int;

inline BigInt binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  BigInt r = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

inline BigInt ipow(std::int64_t base, std::int64_t exp) {
  BigInt r = 1;
  BigInt b = base;
  while (exp > 0) {
    if (exp & 1) r *= b;
    b *= b;
    exp >>= 1;
  }
  return r;
}

/// Natural log of a non-negative big integer; -inf for zero.
/// Keeps the top 64 bits, so the result carries full double precision.
inline double log_of(const BigInt& x) {
  if (x <= 0) return -std::numeric_limits<double>::infinity();
  const auto bits = static_cast<std::int64_t>(boost::multiprecision::msb(x)) + 1;
  const std::int64_t shift = std::max<std::int64_t>(0, bits - 64);
  const BigInt top = x >> shift;
  return std::log(top.convert_to<double>()) +
         static_cast<double>(shift) * std::log(2.0);
}

inline std::string to_string(const BigInt& x) { return x.str(); }

}  // namespace ffcs
