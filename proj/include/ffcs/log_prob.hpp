#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <span>

namespace ffcs {

inline constexpr double kNegInf = -std::numeric_limits<double>::infinity();

/// log(exp(a) + exp(b)) without overflow.
inline double log_add(double a, double b) {
  if (a < b) std::swap(a, b);
  if (b == kNegInf) return a;
  return a + std::log1p(std::exp(b - a));
}

inline double log_sum_exp(std::span<const double> xs) {
  double hi = kNegInf;
  for (double x : xs) hi = std::max(hi, x);
  if (hi == kNegInf) return kNegInf;
  double acc = 0.0;
  for (double x : xs) acc += std::exp(x - hi);
  return hi + std::log(acc);
}

/// A non-negative quantity held by its natural log; probability 0 is -inf.
///
/// Values above 0 are legal: a union bound may exceed one. capped() gives
/// the value clipped to a probability.
struct LogProb {
  double log_value = kNegInf;

  static LogProb from_prob(double p) { return {p > 0.0 ? std::log(p) : kNegInf}; }
  static LogProb zero() { return {kNegInf}; }
  static LogProb one() { return {0.0}; }

  double prob() const { return std::exp(log_value); }
  double log10() const { return log_value / std::log(10.0); }
  bool is_zero() const { return log_value == kNegInf; }
  LogProb capped() const { return {std::min(log_value, 0.0)}; }

  friend LogProb operator*(LogProb a, LogProb b) {
    if (a.is_zero() || b.is_zero()) return zero();
    return {a.log_value + b.log_value};
  }
  friend LogProb operator+(LogProb a, LogProb b) { return {log_add(a.log_value, b.log_value)}; }
  friend bool operator<(LogProb a, LogProb b) { return a.log_value < b.log_value; }
  friend bool operator<=(LogProb a, LogProb b) { return a.log_value <= b.log_value; }
  friend bool operator==(LogProb a, LogProb b) = default;
};

}  // namespace ffcs
