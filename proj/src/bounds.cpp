#include "ffcs/bounds.hpp"

#include <cmath>
#include <string>

#include <Eigen/Core>

#include "ffcs/errors.hpp"

namespace ffcs {

namespace {

void check_gamma(double gamma) {
  if (!(gamma > 0.0 && gamma <= 1.0)) {
    throw InvalidGamma("gamma must lie in (0, 1], got " + std::to_string(gamma));
  }
}

double log_set_size(int N, int K, int q) { return log_of(signal_set_size(N, K, q).total); }

}  // namespace

LogProb row_zero_prob_dense(int q) { return {-std::log(static_cast<double>(q))}; }

LogProb row_zero_prob_sparse(int q, double gamma, int h) {
  check_gamma(gamma);
  if (h < 1) throw InvalidParameter("row_zero_prob_sparse needs h >= 1");
  const double inv_q = 1.0 / q;
  // May be negative when gamma > 1 - 1/q; an integer power keeps it real.
  const double base = 1.0 - gamma / (1.0 - inv_q);
  const double p = inv_q + (1.0 - inv_q) * std::pow(base, h);
  return LogProb::from_prob(std::max(p, 0.0));
}

LogProb convolution_oracle(const FieldSpec& f, double gamma, int h) {
  check_gamma(gamma);
  if (h < 1) throw InvalidParameter("convolution_oracle needs h >= 1");
  const int q = f.order();
  Eigen::ArrayXd entry = Eigen::ArrayXd::Constant(q, gamma / (q - 1));
  entry[0] = 1.0 - gamma;
  Eigen::ArrayXd sum = entry;
  for (int step = 1; step < h; ++step) {
    Eigen::ArrayXd next = Eigen::ArrayXd::Zero(q);
    for (int a = 0; a < q; ++a) {
      for (int b = 0; b < q; ++b) {
        next[f.add(static_cast<Element>(a), static_cast<Element>(b))] += sum[a] * entry[b];
      }
    }
    sum = next;
  }
  return LogProb::from_prob(sum[0]);
}

LogProb union_bound(const LogWeightEnumeration& nh, double log_L, const ModelParams& p) {
  validate(p);
  std::vector<double> terms;
  terms.reserve(nh.log_counts.size());
  for (int h = 1; h <= nh.max_weight(); ++h) {
    const double c = nh.log_counts[h];
    if (c == kNegInf) continue;
    const LogProb row = row_zero_prob_sparse(p.q, p.gamma, h);
    if (row.is_zero()) continue;
    terms.push_back(c + p.M * row.log_value);
  }
  const double s = log_sum_exp(terms);
  return {s == kNegInf ? kNegInf : s - log_L};
}

LogProb union_bound(const ModelParams& p, NhVariant variant) {
  validate(p);
  return union_bound(nh_log_count(p.N, p.K, p.q, variant), log_set_size(p.N, p.K, p.q), p);
}

LogProb union_bound_exact(const ModelParams& p, NhVariant variant) {
  validate(p);
  return union_bound(to_log(nh_count(p.N, p.K, p.q, variant)), log_set_size(p.N, p.K, p.q), p);
}

LogProb closed_dense_bound(int N, int K, int q, int M) {
  const BigInt confusable = signal_set_size(N, K, q).total - 1;
  if (confusable == 0) return LogProb::zero();
  return {log_of(confusable) - M * std::log(static_cast<double>(q))};
}

LogProb exponent_bound(int N, int K, int q, int M) {
  if (K == 0) return LogProb::zero();
  const double ratio = static_cast<double>(K) / N;
  return {std::log(static_cast<double>(K)) + N * binary_entropy(ratio) * std::log(2.0) +
          K * std::log(static_cast<double>(q - 1)) - M * std::log(static_cast<double>(q))};
}

double binary_entropy(double p) {
  if (!(p >= 0.0 && p <= 1.0)) throw InvalidParameter("binary_entropy needs p in [0, 1]");
  auto term = [](double x) { return x > 0.0 ? -x * std::log2(x) : 0.0; };
  return term(p) + term(1.0 - p);
}

int sufficient_M(int N, int K, int q) {
  if (N < 1 || K < 0 || K > N) throw InvalidParameter("sufficient_M needs 0 <= K <= N");
  const double rhs = (N * binary_entropy(static_cast<double>(K) / N) +
                      K * std::log2(static_cast<double>(q - 1))) /
                     std::log2(static_cast<double>(q));
  // Absorb rounding when rhs is an exact integer.
  return static_cast<int>(std::ceil(rhs - 1e-12 * std::max(1.0, rhs)));
}

double necessary_M(int N, int K, int q) {
  if (N < 1 || K < 0 || K > N) throw InvalidParameter("necessary_M needs 0 <= K <= N");
  const BigInt count = ipow(q - 1, K) * binomial(N, K);
  return log_of(count) / std::log(static_cast<double>(q)) - 1.0;
}

double fano_lower_bound(int N, int K, int q, int M) {
  if (N < 1 || K < 0 || K > N || M < 0) throw InvalidParameter("fano_lower_bound needs 0 <= K <= N, M >= 0");
  const double log_q_L = log_set_size(N, K, q) / std::log(static_cast<double>(q));
  if (log_q_L <= 0.0) return 0.0;
  return std::max(0.0, (log_q_L - M - 1.0) / log_q_L);
}

BoundResult evaluate_bounds(const ModelParams& p, NhVariant variant) {
  validate(p);
  BoundResult r;
  r.params = p;
  r.variant = variant;
  r.union_bound = union_bound(p, variant);
  if (is_dense_gamma(p.q, p.gamma)) {
    r.closed_dense = closed_dense_bound(p.N, p.K, p.q, p.M);
    r.exponent_bound = exponent_bound(p.N, p.K, p.q, p.M);
  }
  r.fano_lower = fano_lower_bound(p);
  r.sufficient_M = sufficient_M(p.N, p.K, p.q);
  r.necessary_M = necessary_M(p.N, p.K, p.q);
  return r;
}

}  // namespace ffcs
