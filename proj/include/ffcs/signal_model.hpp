#pragma once

#include <cstdint>
#include <vector>

#include <Eigen/Core>

#include "ffcs/bigint.hpp"
#include "ffcs/field.hpp"
#include "ffcs/rng.hpp"

namespace ffcs {

using ElementVector = Eigen::Matrix<Element, Eigen::Dynamic, 1>;
using ElementMatrix =
    Eigen::Matrix<Element, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

/// (N, K, M, q, gamma): signal length, maximum sparsity, number of
/// measurements, field order and sparse factor of the sensing matrix.
struct ModelParams {
  int N = 1;
  int K = 0;
  int M = 1;
  int q = 2;
  double gamma = 0.5;
};

/// Throws InvalidParameter / InvalidGamma / UnsupportedOrder when the
/// parameters fall outside 0 <= K <= N, M >= 1, gamma in (0, 1].
void validate(const ModelParams& params);

/// A length-N vector over F_q with its L0 weight cached.
class Signal {
 public:
  Signal() = default;
  explicit Signal(ElementVector entries);

  static Signal zero(int N) { return Signal(ElementVector::Zero(N)); }

  const ElementVector& entries() const { return entries_; }
  int size() const { return static_cast<int>(entries_.size()); }
  int sparsity() const { return sparsity_; }
  Element operator[](int i) const { return entries_[i]; }

  friend bool operator==(const Signal& a, const Signal& b) {
    return a.entries_.size() == b.entries_.size() && a.entries_ == b.entries_;
  }

 private:
  ElementVector entries_;
  int sparsity_ = 0;
};

/// M x N matrix over F_q, stored dense and row-major, together with the
/// sparse factor it was drawn with.
struct SensingMatrix {
  int q = 2;
  double gamma = 0.5;
  ElementMatrix entries;

  int rows() const { return static_cast<int>(entries.rows()); }
  int cols() const { return static_cast<int>(entries.cols()); }
};

/// |L_k| = C(N,k) (q-1)^k for k = 0..K and their sum |L|.
struct SignalSetSize {
  std::vector<BigInt> per_sparsity;
  BigInt total;
};

SignalSetSize signal_set_size(int N, int K, int q);

/// Uniform sampler over L = { x in F_q^N : ||x||_0 <= K }.
///
/// The sparsity level is chosen with exact big-integer weights |L_k|/|L|,
/// then a uniform support of that size, then i.i.d. uniform nonzero values.
class SignalSampler {
 public:
  SignalSampler(int N, int K, int q);
  Signal operator()(Rng& rng) const;

  const SignalSetSize& set_size() const { return size_; }

 private:
  int N_, q_;
  SignalSetSize size_;
  std::vector<BigInt> cumulative_;
  std::size_t random_bits_;
};

Signal sample_signal(const ModelParams& params, Rng& rng);

/// Entries i.i.d.: 0 with probability 1 - gamma, every nonzero value with
/// probability gamma / (q - 1). Throws InvalidGamma unless gamma in (0, 1].
SensingMatrix sample_matrix(const ModelParams& params, Rng& rng);

/// Sparse factor that makes every entry uniform over F_q: 1 - 1/q.
double dense_gamma(int q);

/// C ln(N) / N (natural log).
double sparse_gamma(double C, int N);

bool is_dense_gamma(int q, double gamma);

/// y = A x over F_q. Throws DimensionMismatch when shapes or orders differ.
ElementVector matvec(const FieldSpec& f, const SensingMatrix& A, const Signal& x);

/// Entry-wise field sum of two equal-length vectors.
ElementVector add(const FieldSpec& f, const ElementVector& a, const ElementVector& b);

}  // namespace ffcs
