#include "ffcs/monte_carlo.hpp"

#include <algorithm>
#include <cmath>
#include <thread>
#include <vector>

#include "ffcs/bounds.hpp"
#include "ffcs/errors.hpp"

namespace ffcs {

Interval wilson_interval(std::uint64_t successes, std::uint64_t trials, double z) {
  if (trials == 0) return {0.0, 1.0};
  const double n = static_cast<double>(trials);
  const double p = static_cast<double>(successes) / n;
  const double z2 = z * z;
  const double centre = (p + z2 / (2 * n)) / (1 + z2 / n);
  const double half = z * std::sqrt(p * (1 - p) / n + z2 / (4 * n * n)) / (1 + z2 / n);
  const double low = successes == 0 ? 0.0 : std::max(0.0, centre - half);
  const double high = successes == trials ? 1.0 : std::min(1.0, centre + half);
  return {low, high};
}

namespace {

unsigned worker_count(unsigned requested, std::uint64_t trials) {
  unsigned w = requested ? requested : std::max(1u, std::thread::hardware_concurrency());
  return static_cast<unsigned>(std::min<std::uint64_t>(w, std::max<std::uint64_t>(1, trials)));
}

struct Tally {
  std::uint64_t e0 = 0, e = 0, violations = 0;
};

}  // namespace

TrialReport run_trials(const ModelParams& params, std::uint64_t trials, std::uint64_t seed,
                       const TrialOptions& options) {
  validate(params);
  if (trials < 1) throw InvalidParameter("trials must be >= 1");
  const FieldSpec field = make_field(params.q);
  const SignalSampler sampler(params.N, params.K, params.q);
  if (sampler.set_size().total > options.enumeration_cap) {
    throw EnumerationCapExceeded("|L| = " + sampler.set_size().total.str() +
                                 " exceeds the enumeration cap");
  }

  const unsigned workers = worker_count(options.workers, trials);
  std::vector<Tally> tallies(workers);
  std::vector<std::exception_ptr> failures(workers);
  auto work = [&](unsigned w) {
    try {
      for (std::uint64_t t = w; t < trials; t += workers) {
        Rng rng = Rng::substream(seed, t);
        const SensingMatrix A = sample_matrix(params, rng);
        const Signal x = sampler(rng);
        if (options.on_trial) options.on_trial(t, A, x);
        const ErrorEvents ev = error_events(field, A, x, params.K, options.enumeration_cap);
        tallies[w].e0 += ev.e0_error;
        tallies[w].e += ev.e_error;
        tallies[w].violations += ev.e0_error && !ev.e_error;
      }
    } catch (...) {
      failures[w] = std::current_exception();
    }
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work, w);
    for (auto& th : pool) th.join();
  }
  for (const auto& f : failures) {
    if (f) std::rethrow_exception(f);
  }

  TrialReport r;
  r.params = params;
  r.variant = options.variant;
  r.trials = trials;
  r.seed = seed;
  for (const auto& t : tallies) {
    r.e0_errors += t.e0;
    r.e_errors += t.e;
    r.inclusion_violations += t.violations;
  }
  r.e0_rate = static_cast<double>(r.e0_errors) / trials;
  r.e_rate = static_cast<double>(r.e_errors) / trials;
  r.e0_ci = wilson_interval(r.e0_errors, trials);
  r.e_ci = wilson_interval(r.e_errors, trials);
  r.union_bound_value = union_bound_exact(params, options.variant);
  r.fano_value = fano_lower_bound(params);
  return r;
}

NullityReport equal_weight_nullity_test(const FieldSpec& f, int N, int M, double gamma, int h,
                                        std::uint64_t trials, std::uint64_t seed) {
  if (h < 1 || h > N) throw InvalidParameter("weight h must satisfy 1 <= h <= N");
  if (M < 1 || trials < 1) throw InvalidParameter("M and trials must be >= 1");
  const int q = f.order();
  validate(ModelParams{N, 0, M, q, gamma});

  // First vector: ones on the leading h positions. Second: the trailing h
  // positions with cycling nonzero values, or the same support with other
  // values when the supports would have to overlap entirely.
  ElementVector d1 = ElementVector::Zero(N);
  ElementVector d2 = ElementVector::Zero(N);
  for (int i = 0; i < h; ++i) {
    d1[i] = 1;
    d2[N - h + i] = static_cast<Element>(1 + (i + 1) % (q - 1));
  }
  if (d1 == d2) d2[N - 1] = static_cast<Element>(q - 1);
  if (d1 == d2) throw InvalidParameter("GF(2) has a single vector of weight h = N");
  const Signal first(d1), second(d2);

  NullityReport r;
  r.h = h;
  r.trials = trials;
  const ModelParams params{N, 0, M, q, gamma};
  for (std::uint64_t t = 0; t < trials; ++t) {
    Rng rng = Rng::substream(seed, t);
    const SensingMatrix A = sample_matrix(params, rng);
    r.hits_first += (matvec(f, A, first).array() == Element{0}).all();
    r.hits_second += (matvec(f, A, second).array() == Element{0}).all();
  }
  r.ci_first = wilson_interval(r.hits_first, trials);
  r.ci_second = wilson_interval(r.hits_second, trials);
  r.analytic = std::pow(row_zero_prob_sparse(q, gamma, h).prob(), M);
  r.intervals_overlap = r.ci_first.low <= r.ci_second.high && r.ci_second.low <= r.ci_first.high;
  r.first_matches_analytic = r.ci_first.low <= r.analytic && r.analytic <= r.ci_first.high;
  r.second_matches_analytic = r.ci_second.low <= r.analytic && r.analytic <= r.ci_second.high;
  return r;
}

}  // namespace ffcs
