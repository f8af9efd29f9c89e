#include "ffcs/phase_curve.hpp"

#include <cmath>
#include <future>
#include <ostream>
#include <sstream>

#include "ffcs/bounds.hpp"
#include "ffcs/errors.hpp"
#include "ffcs/signal_model.hpp"

namespace ffcs {

double GammaMode::gamma(int N, int q) const {
  return dense ? dense_gamma(q) : sparse_gamma(C, N);
}

std::string GammaMode::label() const {
  if (dense) return "dense";
  std::ostringstream os;
  os << "c=" << C;
  return os.str();
}

GammaMode GammaMode::parse(const std::string& s) {
  if (s == "dense") return Dense();
  if (s.rfind("c=", 0) == 0) {
    try {
      std::size_t used = 0;
      const double c = std::stod(s.substr(2), &used);
      if (used == s.size() - 2 && c > 0.0) return SparseC(c);
    } catch (const std::exception&) {
    }
  }
  throw InvalidParameter("gamma mode must be 'dense' or 'c=<positive real>', got '" + s + "'");
}

int measurement_ceiling(int N, int q) {
  return N * static_cast<int>(std::ceil(std::log2(static_cast<double>(q)))) + 64;
}

MinMeasurements min_measurements(const LogWeightEnumeration& nh, double log_L,
                                 int N, int K, int q, double gamma, double target) {
  if (!(target > 0.0 && target < 1.0)) throw InvalidParameter("target must lie in (0, 1)");
  const double log_target = std::log(target);
  auto bound = [&](int M) { return union_bound(nh, log_L, ModelParams{N, K, M, q, gamma}); };

  int lo = 1;
  int hi = measurement_ceiling(N, q);
  const LogProb at_ceiling = bound(hi);
  if (at_ceiling.log_value > log_target) return {hi, false, at_ceiling};
  while (lo < hi) {
    const int mid = lo + (hi - lo) / 2;
    if (bound(mid).log_value <= log_target) {
      hi = mid;
    } else {
      lo = mid + 1;
    }
  }
  return {lo, true, bound(lo)};
}

MinMeasurements min_measurements(int N, int K, int q, double gamma, double target,
                                 NhVariant variant) {
  validate(ModelParams{N, K, 1, q, gamma});
  return min_measurements(nh_log_count(N, K, q, variant),
                          log_of(signal_set_size(N, K, q).total), N, K, q, gamma, target);
}

std::vector<double> default_sparsity_grid() {
  std::vector<double> g;
  for (int i = 1; i <= 50; ++i) g.push_back(i / 100.0);
  return g;
}

namespace {

std::vector<int> grid_to_K(int N, const std::vector<double>& grid) {
  std::vector<int> ks;
  for (double r : grid) {
    if (!(r >= 0.0 && r <= 1.0)) throw InvalidParameter("sparsity ratios must lie in [0, 1]");
    ks.push_back(static_cast<int>(std::lround(r * N)));
  }
  return ks;
}

// All curves at one field order share a single weight-table sweep.
std::vector<std::vector<CurvePoint>> curves_for_q(int N, int q, const std::vector<GammaMode>& modes,
                                                  const std::vector<int>& ks, double target,
                                                  NhVariant variant) {
  int k_max = 0;
  for (int k : ks) k_max = std::max(k_max, k);
  const auto sweep = nh_log_sweep(N, k_max, q, variant);
  const auto sizes = signal_set_size(N, k_max, q);
  std::vector<double> log_L(k_max + 1);
  BigInt running = 0;
  for (int k = 0; k <= k_max; ++k) {
    running += sizes.per_sparsity[k];
    log_L[k] = log_of(running);
  }

  std::vector<std::vector<CurvePoint>> out;
  for (const auto& mode : modes) {
    const double gamma = mode.gamma(N, q);
    validate(ModelParams{N, 0, 1, q, gamma});
    std::vector<CurvePoint> pts;
    for (int K : ks) {
      const auto mm = min_measurements(sweep[K], log_L[K], N, K, q, gamma, target);
      CurvePoint p;
      p.N = N;
      p.K = K;
      p.M = mm.M;
      p.q = q;
      p.sparsity_ratio = static_cast<double>(K) / N;
      p.compression_ratio = static_cast<double>(mm.M) / N;
      p.gamma_mode = mode;
      p.gamma = gamma;
      p.target = target;
      p.variant = variant;
      p.achieved = mm.achieved;
      p.bound_at_M = mm.bound_at_M;
      pts.push_back(p);
    }
    out.push_back(std::move(pts));
  }
  return out;
}

}  // namespace

std::vector<CurvePoint> curve(int N, int q, const GammaMode& mode,
                              const std::vector<double>& grid, double target,
                              NhVariant variant) {
  return curve_family(N, {q}, {mode}, grid, target, variant);
}

std::vector<CurvePoint> curve_family(int N, const std::vector<int>& qs,
                                     const std::vector<GammaMode>& modes,
                                     const std::vector<double>& grid, double target,
                                     NhVariant variant) {
  if (N < 1) throw InvalidParameter("N must be >= 1");
  if (!(target > 0.0 && target < 1.0)) throw InvalidParameter("target must lie in (0, 1)");
  const auto ks = grid_to_K(N, grid);
  std::vector<std::future<std::vector<std::vector<CurvePoint>>>> jobs;
  for (int q : qs) {
    jobs.push_back(std::async(std::launch::async, curves_for_q, N, q, std::cref(modes),
                              std::cref(ks), target, variant));
  }
  std::vector<CurvePoint> out;
  for (auto& job : jobs) {
    for (auto& pts : job.get()) out.insert(out.end(), pts.begin(), pts.end());
  }
  return out;
}

void write_curve_csv(std::ostream& os, const std::vector<CurvePoint>& points) {
  os << kCurveCsvHeader << '\n';
  for (const auto& p : points) {
    os << p.q << ',' << p.gamma_mode.label() << ',' << p.K << ',' << p.M << ','
       << p.sparsity_ratio << ',' << p.compression_ratio << ','
       << (p.achieved ? "true" : "false") << '\n';
  }
}

}  // namespace ffcs
