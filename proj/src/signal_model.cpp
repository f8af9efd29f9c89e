#include "ffcs/signal_model.hpp"

#include <cmath>
#include <numeric>
#include <string>

#include "ffcs/errors.hpp"

namespace ffcs {

void validate(const ModelParams& p) {
  if (p.N < 1) throw InvalidParameter("N must be >= 1");
  if (p.K < 0 || p.K > p.N) throw InvalidParameter("K must satisfy 0 <= K <= N");
  if (p.M < 1) throw InvalidParameter("M must be >= 1");
  if (!(p.gamma > 0.0 && p.gamma <= 1.0)) {
    throw InvalidGamma("gamma must lie in (0, 1], got " + std::to_string(p.gamma));
  }
  if (!(p.q >= 2 && p.q <= kMaxFieldOrder && (is_prime(p.q) || (p.q & (p.q - 1)) == 0))) {
    throw UnsupportedOrder("unsupported field order " + std::to_string(p.q));
  }
}

Signal::Signal(ElementVector entries) : entries_(std::move(entries)) {
  sparsity_ = static_cast<int>((entries_.array() != Element{0}).count());
}

SignalSetSize signal_set_size(int N, int K, int q) {
  if (N < 0 || K < 0 || K > N) throw InvalidParameter("signal_set_size needs 0 <= K <= N");
  SignalSetSize s;
  s.per_sparsity.reserve(K + 1);
  BigInt choose = 1;  // C(N, k)
  BigInt power = 1;   // (q-1)^k
  for (int k = 0; k <= K; ++k) {
    if (k > 0) {
      choose = choose * (N - k + 1) / k;
      power *= q - 1;
    }
    s.per_sparsity.push_back(choose * power);
    s.total += s.per_sparsity.back();
  }
  return s;
}

SignalSampler::SignalSampler(int N, int K, int q)
    : N_(N), q_(q), size_(signal_set_size(N, K, q)) {
  BigInt acc = 0;
  for (const auto& c : size_.per_sparsity) {
    acc += c;
    cumulative_.push_back(acc);
  }
  random_bits_ = boost::multiprecision::msb(size_.total) + 1;
}

namespace {

// Uniform big integer in [0, bound) by rejection on ceil(log2 bound) bits.
BigInt uniform_below(const BigInt& bound, std::size_t bits, Rng& rng) {
  const std::size_t words = (bits + 63) / 64;
  const std::size_t excess = words * 64 - bits;
  while (true) {
    BigInt r = 0;
    for (std::size_t w = 0; w < words; ++w) {
      r <<= 64;
      r |= rng.next();
    }
    r >>= excess;
    if (r < bound) return r;
  }
}

}  // namespace

Signal SignalSampler::operator()(Rng& rng) const {
  int k = 0;
  if (size_.total > 1) {
    const BigInt r = uniform_below(size_.total, random_bits_, rng);
    while (r >= cumulative_[k]) ++k;
  }
  ElementVector entries = ElementVector::Zero(N_);
  std::vector<int> positions(N_);
  std::iota(positions.begin(), positions.end(), 0);
  for (int i = 0; i < k; ++i) {
    const auto j = i + static_cast<int>(rng.uniform_below(N_ - i));
    std::swap(positions[i], positions[j]);
    entries[positions[i]] = static_cast<Element>(1 + rng.uniform_below(q_ - 1));
  }
  return Signal(std::move(entries));
}

Signal sample_signal(const ModelParams& params, Rng& rng) {
  return SignalSampler(params.N, params.K, params.q)(rng);
}

SensingMatrix sample_matrix(const ModelParams& params, Rng& rng) {
  if (!(params.gamma > 0.0 && params.gamma <= 1.0)) {
    throw InvalidGamma("gamma must lie in (0, 1], got " + std::to_string(params.gamma));
  }
  SensingMatrix A;
  A.q = params.q;
  A.gamma = params.gamma;
  A.entries.resize(params.M, params.N);
  for (int i = 0; i < params.M; ++i) {
    for (int j = 0; j < params.N; ++j) {
      Element v = 0;
      if (params.gamma >= 1.0 || rng.uniform01() < params.gamma) {
        v = static_cast<Element>(1 + rng.uniform_below(params.q - 1));
      }
      A.entries(i, j) = v;
    }
  }
  return A;
}

double dense_gamma(int q) { return 1.0 - 1.0 / q; }

double sparse_gamma(double C, int N) {
  return C * std::log(static_cast<double>(N)) / N;
}

bool is_dense_gamma(int q, double gamma) {
  return std::abs(gamma - dense_gamma(q)) <= 1e-12;
}

ElementVector matvec(const FieldSpec& f, const SensingMatrix& A, const Signal& x) {
  if (A.cols() != x.size()) {
    throw DimensionMismatch("matrix has " + std::to_string(A.cols()) +
                            " columns but signal has length " + std::to_string(x.size()));
  }
  if (A.q != f.order()) throw DimensionMismatch("matrix and field orders differ");
  ElementVector y = ElementVector::Zero(A.rows());
  for (int j = 0; j < A.cols(); ++j) {
    const Element xj = x[j];
    if (xj == 0) continue;
    for (int i = 0; i < A.rows(); ++i) {
      y[i] = f.add(y[i], f.mul(A.entries(i, j), xj));
    }
  }
  return y;
}

ElementVector add(const FieldSpec& f, const ElementVector& a, const ElementVector& b) {
  if (a.size() != b.size()) throw DimensionMismatch("vector lengths differ");
  ElementVector out(a.size());
  for (Eigen::Index i = 0; i < a.size(); ++i) out[i] = f.add(a[i], b[i]);
  return out;
}

}  // namespace ffcs
