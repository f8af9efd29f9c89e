#pragma once

#include <string_view>
#include <vector>

#include "ffcs/bigint.hpp"
#include "ffcs/field.hpp"

namespace ffcs {

/// Which ordered pairs (x, x̄) of L x L, x != x̄, are counted.
enum class NhVariant {
  AllPairs,         ///< every x̄ in L
  RestrictedPairs,  ///< only ||x̄||_0 <= ||x||_0, the pairs the L0 rule can confuse
};

const char* to_string(NhVariant v);
/// Accepts "all", "all-pairs", "restricted", "restricted-pairs".
NhVariant parse_variant(std::string_view s);

/// counts[h] = number of counted pairs at Hamming distance h, for
/// h = 0..2K (counts[0] is always 0).
struct WeightEnumeration {
  NhVariant variant = NhVariant::AllPairs;
  std::vector<BigInt> counts;

  BigInt total() const;
  int max_weight() const { return static_cast<int>(counts.size()) - 1; }
};

/// Same table held as natural logs (-inf for empty classes).
struct LogWeightEnumeration {
  NhVariant variant = NhVariant::AllPairs;
  std::vector<double> log_counts;

  int max_weight() const { return static_cast<int>(log_counts.size()) - 1; }
};

/// Exact pair counts from the closed-form sum.
///
/// For x of weight k1 and x̄ of weight k2 <= k2max the k1 support positions
/// of x split into d positions where x̄ differs (b of them keep a different
/// nonzero value, d - b become zero) and k1 - d where x̄ agrees; x̄ then has
/// t further nonzeros outside the support. With h = d + t:
///
///   pairs(k1, h) = C(N,k1)(q-1)^k1 * sum_{d,t} C(k1,d) C(N-k1,t)(q-1)^t
///                  * sum_{b <= min(d, k2max - k1 + d - t)} C(d,b)(q-2)^b
///
/// AllPairs uses k2max = K, RestrictedPairs uses k2max = k1.
WeightEnumeration nh_count(int N, int K, int q, NhVariant variant);

struct NhOracleResult {
  WeightEnumeration all_pairs;
  WeightEnumeration restricted_pairs;
};

/// Literal double loop over L x L. Throws EnumerationCapExceeded when
/// |L|^2 exceeds `pair_cap`.
NhOracleResult nh_oracle(const FieldSpec& f, int N, int K,
                         std::uint64_t pair_cap = 100'000'000);

/// Log-domain tables for every K = 0..K_max at once, built incrementally:
/// raising K adds the pairs whose larger weight equals K. Binomials are
/// evaluated exactly and converted to logs; sums use log accumulation, so
/// this scales to N in the thousands.
std::vector<LogWeightEnumeration> nh_log_sweep(int N, int K_max, int q, NhVariant variant);

LogWeightEnumeration nh_log_count(int N, int K, int q, NhVariant variant);

LogWeightEnumeration to_log(const WeightEnumeration& w);

}  // namespace ffcs
