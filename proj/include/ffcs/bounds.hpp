#pragma once

#include <optional>

#include "ffcs/field.hpp"
#include "ffcs/log_prob.hpp"
#include "ffcs/signal_model.hpp"
#include "ffcs/weight_enumeration.hpp"

namespace ffcs {

/// Pr{A_i d = 0} for a uniform row: 1/q whatever the weight of d.
LogProb row_zero_prob_dense(int q);

/// Pr{A_i d = 0} for a weight-h vector d and entries drawn with sparse
/// factor gamma: 1/q + (1 - 1/q) (1 - gamma / (1 - 1/q))^h.
/// Throws InvalidGamma unless gamma in (0, 1], InvalidParameter for h < 1.
LogProb row_zero_prob_sparse(int q, double gamma, int h);

/// Same probability by repeated convolution of the entry distribution over
/// the field's addition table. Reference path for row_zero_prob_sparse.
LogProb convolution_oracle(const FieldSpec& f, double gamma, int h);

/// (1/|L|) sum_h N_h Pr{A_i d_h = 0}^M, from a precomputed table.
/// The raw value may exceed probability one; use capped() for a probability.
LogProb union_bound(const LogWeightEnumeration& nh, double log_set_size,
                    const ModelParams& params);

/// Union bound with N_h from the log-domain sweep.
LogProb union_bound(const ModelParams& params, NhVariant variant = NhVariant::AllPairs);

/// Union bound with N_h from the exact big-integer sum; small N only.
LogProb union_bound_exact(const ModelParams& params, NhVariant variant = NhVariant::AllPairs);

/// (|L| - 1) q^-M, with |L| exact.
LogProb closed_dense_bound(int N, int K, int q, int M);

/// K 2^{N H_b(K/N)} (q-1)^K q^-M. Zero when K = 0 (no confusable pair).
/// Dominates closed_dense_bound whenever 2K <= N.
LogProb exponent_bound(int N, int K, int q, int M);

/// -p log2 p - (1-p) log2 (1-p), with 0 log 0 = 0.
double binary_entropy(double p);

/// Smallest integer M >= (N H_b(K/N) + K log2(q-1)) / log2 q.
int sufficient_M(int N, int K, int q);

/// log_q[(q-1)^K C(N,K)] - 1; fewer measurements than this force a
/// positive error probability.
double necessary_M(int N, int K, int q);

/// max(0, (log_q|L| - M - 1) / log_q|L|) for x uniform over L.
double fano_lower_bound(int N, int K, int q, int M);
inline double fano_lower_bound(const ModelParams& p) { return fano_lower_bound(p.N, p.K, p.q, p.M); }

struct BoundResult {
  ModelParams params;
  NhVariant variant = NhVariant::AllPairs;
  LogProb union_bound;
  /// Present only for the dense ensemble.
  std::optional<LogProb> closed_dense;
  std::optional<LogProb> exponent_bound;
  double fano_lower = 0.0;
  int sufficient_M = 0;
  double necessary_M = 0.0;
};

BoundResult evaluate_bounds(const ModelParams& params, NhVariant variant = NhVariant::AllPairs);

}  // namespace ffcs
