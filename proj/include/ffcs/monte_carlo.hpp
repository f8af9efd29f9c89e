#pragma once

#include <cstdint>
#include <functional>

#include "ffcs/field.hpp"
#include "ffcs/l0_decoder.hpp"
#include "ffcs/log_prob.hpp"
#include "ffcs/signal_model.hpp"
#include "ffcs/weight_enumeration.hpp"

namespace ffcs {

struct Interval {
  double low = 0.0;
  double high = 1.0;
};

/// Wilson score interval for `successes` out of `trials` (z = 1.96 gives 95%).
Interval wilson_interval(std::uint64_t successes, std::uint64_t trials,
                         double z = 1.959963984540054);

struct TrialReport {
  ModelParams params;
  NhVariant variant = NhVariant::AllPairs;
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;
  std::uint64_t e0_errors = 0;
  std::uint64_t e_errors = 0;
  /// Trials where E0 held without E. Always zero for a correct decoder.
  std::uint64_t inclusion_violations = 0;
  double e0_rate = 0.0;
  double e_rate = 0.0;
  Interval e0_ci;
  Interval e_ci;
  LogProb union_bound_value;
  double fano_value = 0.0;
};

struct TrialOptions {
  NhVariant variant = NhVariant::AllPairs;
  std::uint64_t enumeration_cap = kDefaultEnumerationCap;
  /// 0 picks std::thread::hardware_concurrency().
  unsigned workers = 0;
  /// Called with (trial index, A, x) for every trial, serially per worker;
  /// used by the CLI to dump instances. Must be thread-safe.
  std::function<void(std::uint64_t, const SensingMatrix&, const Signal&)> on_trial;
};

/// Draws `trials` independent instances (A from the sparse-factor ensemble,
/// x uniform over L), decodes each exhaustively and tallies both error
/// events. Trial t uses Rng::substream(seed, t), so the counts do not depend
/// on the number of workers.
TrialReport run_trials(const ModelParams& params, std::uint64_t trials, std::uint64_t seed,
                       const TrialOptions& options = {});

struct NullityReport {
  int h = 0;
  std::uint64_t trials = 0;
  std::uint64_t hits_first = 0;
  std::uint64_t hits_second = 0;
  Interval ci_first;
  Interval ci_second;
  double analytic = 0.0;
  bool intervals_overlap = false;
  bool first_matches_analytic = false;
  bool second_matches_analytic = false;

  bool consistent() const {
    return intervals_overlap && first_matches_analytic && second_matches_analytic;
  }
};

/// Estimates Pr{A d = 0} for two different weight-h vectors d (different
/// supports when 2h <= N, different values otherwise) over the same sampled
/// matrices, and compares both against row_zero_prob_sparse(q, gamma, h)^M.
NullityReport equal_weight_nullity_test(const FieldSpec& f, int N, int M, double gamma, int h,
                                        std::uint64_t trials, std::uint64_t seed);

}  // namespace ffcs
