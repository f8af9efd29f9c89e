#include "ffcs/weight_enumeration.hpp"

#include <string>

#include "ffcs/errors.hpp"
#include "ffcs/log_prob.hpp"
#include "ffcs/signal_model.hpp"

namespace ffcs {

const char* to_string(NhVariant v) {
  return v == NhVariant::AllPairs ? "all-pairs" : "restricted-pairs";
}

NhVariant parse_variant(std::string_view s) {
  if (s == "all" || s == "all-pairs") return NhVariant::AllPairs;
  if (s == "restricted" || s == "restricted-pairs") return NhVariant::RestrictedPairs;
  throw InvalidParameter("unknown N_h variant '" + std::string(s) + "'");
}

BigInt WeightEnumeration::total() const {
  BigInt t = 0;
  for (const auto& c : counts) t += c;
  return t;
}

namespace {

void check_args(int N, int K, int q) {
  if (N < 1 || K < 0 || K > N) throw InvalidParameter("N_h needs N >= 1 and 0 <= K <= N");
  if (q < 2) throw InvalidParameter("N_h needs q >= 2");
}

// C(n, 0..k_max) by the multiplicative recurrence.
std::vector<BigInt> binomial_row(int n, int k_max) {
  std::vector<BigInt> row(k_max + 1, 0);
  BigInt c = 1;
  for (int k = 0; k <= k_max && k <= n; ++k) {
    if (k > 0) c = c * (n - k + 1) / k;
    row[k] = c;
  }
  return row;
}

// prefix[d][B] = sum_{b <= B} C(d, b) (q-2)^b for d <= d_max, B <= d.
std::vector<std::vector<BigInt>> changed_value_prefix(int d_max, int q) {
  std::vector<BigInt> pw(d_max + 1);
  pw[0] = 1;
  for (int b = 1; b <= d_max; ++b) pw[b] = pw[b - 1] * (q - 2);
  std::vector<std::vector<BigInt>> prefix(d_max + 1);
  for (int d = 0; d <= d_max; ++d) {
    const auto c = binomial_row(d, d);
    BigInt acc = 0;
    prefix[d].reserve(d + 1);
    for (int b = 0; b <= d; ++b) {
      acc += c[b] * pw[b];
      prefix[d].push_back(acc);
    }
  }
  return prefix;
}

struct LogAccumulator {
  double hi = kNegInf;
  double scaled = 0.0;

  void add(double x) {
    if (x == kNegInf) return;
    if (x <= hi) {
      scaled += std::exp(x - hi);
    } else {
      scaled = scaled * std::exp(hi - x) + 1.0;
      hi = x;
    }
  }
  double value() const { return hi == kNegInf ? kNegInf : hi + std::log(scaled); }
};

}  // namespace

WeightEnumeration nh_count(int N, int K, int q, NhVariant variant) {
  check_args(N, K, q);
  WeightEnumeration out;
  out.variant = variant;
  out.counts.assign(2 * K + 1, 0);

  const auto prefix = changed_value_prefix(K, q);
  const auto choose_N = binomial_row(N, K);
  std::vector<BigInt> pw(K + 1);
  pw[0] = 1;
  for (int t = 1; t <= K; ++t) pw[t] = pw[t - 1] * (q - 1);

  for (int k1 = 0; k1 <= K; ++k1) {
    const int k2max = variant == NhVariant::AllPairs ? K : k1;
    const auto choose_k1 = binomial_row(k1, k1);
    const int t_cap = std::min(N - k1, K);
    auto outside = binomial_row(N - k1, t_cap);
    for (int t = 0; t <= t_cap; ++t) outside[t] *= pw[t];
    const BigInt base = choose_N[k1] * pw[k1];
    for (int d = 0; d <= k1; ++d) {
      const int slack = k2max - k1 + d;  // room left for x̄'s weight
      if (slack < 0) continue;
      const BigInt cd = base * choose_k1[d];
      for (int t = 0; t <= std::min(N - k1, slack); ++t) {
        out.counts[d + t] += cd * outside[t] * prefix[d][std::min(d, slack - t)];
      }
    }
  }
  out.counts[0] = 0;
  return out;
}

NhOracleResult nh_oracle(const FieldSpec& f, int N, int K, std::uint64_t pair_cap) {
  check_args(N, K, f.order());
  const BigInt size = signal_set_size(N, K, f.order()).total;
  if (size * size > pair_cap) {
    throw EnumerationCapExceeded("N_h oracle needs " + BigInt(size * size).str() +
                                 " pairs, cap is " + std::to_string(pair_cap));
  }
  const int q = f.order();
  std::vector<std::vector<Element>> members;
  std::vector<int> weights;
  std::vector<Element> v(N, 0);
  // Odometer over F_q^N, keeping vectors of weight <= K.
  while (true) {
    int w = 0;
    for (Element e : v) w += e != 0;
    if (w <= K) {
      members.push_back(v);
      weights.push_back(w);
    }
    int i = 0;
    while (i < N && ++v[i] == q) v[i++] = 0;
    if (i == N) break;
  }

  NhOracleResult r;
  r.all_pairs.variant = NhVariant::AllPairs;
  r.restricted_pairs.variant = NhVariant::RestrictedPairs;
  r.all_pairs.counts.assign(2 * K + 1, 0);
  r.restricted_pairs.counts.assign(2 * K + 1, 0);
  std::vector<std::uint64_t> all(2 * K + 1, 0), restricted(2 * K + 1, 0);
  for (std::size_t a = 0; a < members.size(); ++a) {
    for (std::size_t b = 0; b < members.size(); ++b) {
      if (a == b) continue;
      int h = 0;
      for (int i = 0; i < N; ++i) h += members[a][i] != members[b][i];
      ++all[h];
      if (weights[b] <= weights[a]) ++restricted[h];
    }
  }
  for (int h = 0; h <= 2 * K; ++h) {
    r.all_pairs.counts[h] = all[h];
    r.restricted_pairs.counts[h] = restricted[h];
  }
  return r;
}

std::vector<LogWeightEnumeration> nh_log_sweep(int N, int K_max, int q, NhVariant variant) {
  check_args(N, K_max, q);
  std::vector<std::vector<double>> log_prefix(K_max + 1);
  {
    std::vector<BigInt> pw(K_max + 1);
    pw[0] = 1;
    for (int b = 1; b <= K_max; ++b) pw[b] = pw[b - 1] * (q - 2);
    for (int d = 0; d <= K_max; ++d) {
      const auto c = binomial_row(d, d);
      BigInt running = 0;
      for (int b = 0; b <= d; ++b) {
        running += c[b] * pw[b];
        log_prefix[d].push_back(log_of(running));
      }
    }
  }
  std::vector<double> log_choose_N;
  for (const auto& c : binomial_row(N, K_max)) log_choose_N.push_back(log_of(c));
  const double log_q1 = std::log(static_cast<double>(q - 1));

  std::vector<LogAccumulator> acc(2 * K_max + 1);
  std::vector<double> log_choose_k1, log_outside;

  // Pairs with ||x||_0 = k1 and ||x̄||_0 <= k2max.
  auto add_row = [&](int k1, int k2max) {
    const double base = log_choose_N[k1] + k1 * log_q1;
    for (int d = 0; d <= k1; ++d) {
      const int slack = k2max - k1 + d;
      if (slack < 0) continue;
      const double cd = base + log_choose_k1[d];
      const auto& pre = log_prefix[d];
      const int t_end = std::min(N - k1, slack);
      for (int t = 0; t <= t_end; ++t) {
        acc[d + t].add(cd + log_outside[t] + pre[std::min(d, slack - t)]);
      }
    }
  };

  std::vector<LogWeightEnumeration> sweep;
  sweep.reserve(K_max + 1);
  for (int K = 0; K <= K_max; ++K) {
    log_choose_k1.clear();
    for (const auto& c : binomial_row(K, K)) log_choose_k1.push_back(log_of(c));
    const int t_cap = std::min(N - K, K);
    log_outside.clear();
    const auto outside = binomial_row(N - K, t_cap);
    for (int t = 0; t <= t_cap; ++t) log_outside.push_back(log_of(outside[t]) + t * log_q1);

    // Growing K by one adds pairs whose larger weight is exactly K. For
    // AllPairs, swapping x and x̄ maps {k2 = K, k1 < K} onto {k1 = K, k2 < K}.
    add_row(K, K);
    if (variant == NhVariant::AllPairs && K > 0) add_row(K, K - 1);

    LogWeightEnumeration snap;
    snap.variant = variant;
    snap.log_counts.resize(2 * K + 1);
    snap.log_counts[0] = kNegInf;
    for (int h = 1; h <= 2 * K; ++h) snap.log_counts[h] = acc[h].value();
    sweep.push_back(std::move(snap));
  }
  return sweep;
}

LogWeightEnumeration nh_log_count(int N, int K, int q, NhVariant variant) {
  return std::move(nh_log_sweep(N, K, q, variant).back());
}

LogWeightEnumeration to_log(const WeightEnumeration& w) {
  LogWeightEnumeration out;
  out.variant = w.variant;
  out.log_counts.reserve(w.counts.size());
  for (const auto& c : w.counts) out.log_counts.push_back(log_of(c));
  return out;
}

}  // namespace ffcs
