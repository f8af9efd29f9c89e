#include <doctest.h>

#include <atomic>
#include <cmath>

#include "ffcs/bounds.hpp"
#include "ffcs/errors.hpp"
#include "ffcs/monte_carlo.hpp"

using namespace ffcs;

TEST_CASE("Wilson interval") {
  const auto i = wilson_interval(0, 100);
  CHECK(i.low == 0.0);
  CHECK(i.high == doctest::Approx(0.036994).epsilon(1e-4));
  const auto h = wilson_interval(50, 100);
  CHECK(h.low == doctest::Approx(0.403832).epsilon(1e-4));
  CHECK(h.high == doctest::Approx(0.596168).epsilon(1e-4));
  const auto full = wilson_interval(20, 20);
  CHECK(full.high == doctest::Approx(1.0));
  CHECK(full.low < 1.0);
}

TEST_CASE("trial report basics") {
  const ModelParams p{8, 2, 8, 2, 0.5};
  const auto r = run_trials(p, 2000, 1);
  CHECK(r.trials == 2000);
  CHECK(r.inclusion_violations == 0);
  CHECK(r.e0_errors <= r.e_errors);
  CHECK(r.e_ci.low <= r.e_rate);
  CHECK(r.e_rate <= r.e_ci.high);
  CHECK(r.e_ci.low <= union_bound(p).capped().prob());
  CHECK(r.fano_value == fano_lower_bound(p));
}

TEST_CASE("few measurements force errors") {
  const ModelParams p{6, 2, 1, 2, 0.5};
  const auto r = run_trials(p, 3000, 2);
  CHECK(r.e0_ci.high >= fano_lower_bound(p));
  CHECK(r.e0_rate > 0.5);
}

TEST_CASE("results do not depend on the worker count") {
  const ModelParams p{7, 2, 4, 3, 0.3};
  TrialOptions one, three;
  one.workers = 1;
  three.workers = 3;
  const auto a = run_trials(p, 500, 77, one);
  const auto b = run_trials(p, 500, 77, three);
  CHECK(a.e0_errors == b.e0_errors);
  CHECK(a.e_errors == b.e_errors);
  CHECK(a.e_ci.low == b.e_ci.low);
}

TEST_CASE("trial callback and error propagation") {
  const ModelParams p{5, 1, 3, 2, 0.5};
  std::atomic<int> seen{0};
  TrialOptions opts;
  opts.on_trial = [&](std::uint64_t, const SensingMatrix& A, const Signal& x) {
    CHECK(A.rows() == 3);
    CHECK(x.sparsity() <= 1);
    ++seen;
  };
  run_trials(p, 40, 5, opts);
  CHECK(seen == 40);
  TrialOptions tiny;
  tiny.enumeration_cap = 3;
  CHECK_THROWS_AS(run_trials(p, 10, 5, tiny), EnumerationCapExceeded);
  CHECK_THROWS_AS(run_trials({5, 1, 3, 2, 0.0}, 10, 5), InvalidGamma);
}

TEST_CASE("equal-weight vectors are equally likely to be null") {
  const auto f4 = make_field(4);
  const auto r = equal_weight_nullity_test(f4, 8, 2, 0.3, 3, 40000, 9);
  CHECK(r.consistent());
  CHECK(r.analytic == doctest::Approx(std::pow(convolution_oracle(f4, 0.3, 3).prob(), 2)));
  const auto f2 = make_field(2);
  const auto ones = equal_weight_nullity_test(f2, 4, 1, 1.0, 1, 2000, 1);
  CHECK(ones.hits_first == 0);
  CHECK(ones.hits_second == 0);
  CHECK(ones.consistent());
  for (int q : {2, 3, 16}) {
    const auto f = make_field(q);
    const auto d = equal_weight_nullity_test(f, 6, 3, dense_gamma(q), 4, 30000, 4);
    CHECK(d.analytic == doctest::Approx(std::pow(1.0 / q, 3)));
    CHECK(d.consistent());
  }
}
