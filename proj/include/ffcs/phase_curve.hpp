#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "ffcs/log_prob.hpp"
#include "ffcs/weight_enumeration.hpp"

namespace ffcs {

/// How the sparse factor is chosen for a curve: dense (1 - 1/q) or
/// C ln(N) / N for a constant C.
struct GammaMode {
  bool dense = true;
  double C = 0.0;

  static GammaMode Dense() { return {true, 0.0}; }
  static GammaMode SparseC(double c) { return {false, c}; }

  double gamma(int N, int q) const;
  /// "dense" or "c=<C>".
  std::string label() const;
  /// Inverse of label(). Throws InvalidParameter.
  static GammaMode parse(const std::string& s);
};

struct CurvePoint {
  int N = 0;
  int K = 0;
  int M = 0;
  int q = 2;
  double sparsity_ratio = 0.0;
  double compression_ratio = 0.0;
  GammaMode gamma_mode;
  double gamma = 0.0;
  double target = 1e-2;
  NhVariant variant = NhVariant::AllPairs;
  /// False when even the search ceiling misses the target; M is then the ceiling.
  bool achieved = true;
  /// Union bound at M (raw, log domain).
  LogProb bound_at_M;
};

struct MinMeasurements {
  int M = 1;
  bool achieved = true;
  LogProb bound_at_M;
};

/// Largest M the search will consider: N ceil(log2 q) + 64.
int measurement_ceiling(int N, int q);

/// Smallest M in [1, measurement_ceiling] with union_bound <= target, by
/// binary search (the bound is non-increasing in M).
MinMeasurements min_measurements(const LogWeightEnumeration& nh, double log_set_size,
                                 int N, int K, int q, double gamma, double target);

MinMeasurements min_measurements(int N, int K, int q, double gamma, double target,
                                 NhVariant variant = NhVariant::AllPairs);

/// K/N in {0.01, 0.02, ..., 0.50}.
std::vector<double> default_sparsity_grid();

/// One point per grid ratio; K = round(ratio * N). Weight tables are built
/// once per field order up to the largest K in the grid.
std::vector<CurvePoint> curve(int N, int q, const GammaMode& mode,
                              const std::vector<double>& sparsity_grid,
                              double target = 1e-2,
                              NhVariant variant = NhVariant::AllPairs);

/// Several curves sharing N, target and variant; the field orders are
/// evaluated concurrently and returned in (q, mode) input order.
std::vector<CurvePoint> curve_family(int N, const std::vector<int>& qs,
                                     const std::vector<GammaMode>& modes,
                                     const std::vector<double>& sparsity_grid,
                                     double target = 1e-2,
                                     NhVariant variant = NhVariant::AllPairs);

/// Header: q,gamma_mode,K,M,sparsity_ratio,compression_ratio,achieved
inline constexpr const char* kCurveCsvHeader =
    "q,gamma_mode,K,M,sparsity_ratio,compression_ratio,achieved";

void write_curve_csv(std::ostream& os, const std::vector<CurvePoint>& points);

}  // namespace ffcs
