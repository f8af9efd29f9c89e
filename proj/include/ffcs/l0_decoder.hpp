#pragma once

#include <cstdint>
#include <vector>

#include "ffcs/field.hpp"
#include "ffcs/signal_model.hpp"

namespace ffcs {

inline constexpr std::uint64_t kDefaultEnumerationCap = 100'000'000;

enum class DecodeStatus { Unique, Ambiguous, Infeasible };

const char* to_string(DecodeStatus s);

struct DecodeResult {
  /// Minimum L0 weight among feasible candidates; -1 when infeasible.
  int min_sparsity = -1;
  /// Every feasible candidate of weight min_sparsity, ordered by support
  /// (lexicographic) and then by values.
  std::vector<Signal> solutions;
  DecodeStatus status = DecodeStatus::Infeasible;
};

/// Exhaustive L0 minimisation over { x̄ : ||x̄||_0 <= K, A x̄ = y }.
///
/// Candidates are visited in increasing sparsity and the search stops at the
/// first sparsity level that has a feasible candidate. Throws
/// EnumerationCapExceeded when |L| exceeds `cap`, DimensionMismatch when y
/// does not have A.rows() entries.
DecodeResult decode_l0(const FieldSpec& f, const SensingMatrix& A,
                       const ElementVector& y, int K,
                       std::uint64_t cap = kDefaultEnumerationCap);

struct ErrorEvents {
  /// The decoder does not return x as its unique answer.
  bool e0_error = false;
  /// Some x̄ != x with ||x̄||_0 <= ||x||_0 satisfies A x̄ = A x.
  bool e_error = false;
};

/// Evaluates both error events for the instance (A, x). A sparsest feasible
/// set with two or more members counts as a decoder error.
ErrorEvents error_events(const FieldSpec& f, const SensingMatrix& A,
                         const Signal& x, int K,
                         std::uint64_t cap = kDefaultEnumerationCap);

}  // namespace ffcs
