#include "ffcs/l0_decoder.hpp"

#include <algorithm>
#include <string>

#include "ffcs/errors.hpp"

namespace ffcs {

const char* to_string(DecodeStatus s) {
  switch (s) {
    case DecodeStatus::Unique: return "unique";
    case DecodeStatus::Ambiguous: return "ambiguous";
    case DecodeStatus::Infeasible: return "infeasible";
  }
  return "?";
}

namespace {

// All products v * A[:, j], laid out so column (j, v) is M contiguous entries.
class ScaledColumns {
 public:
  ScaledColumns(const FieldSpec& f, const SensingMatrix& A)
      : M_(A.rows()), q_(f.order()), data_(static_cast<std::size_t>(A.cols()) * q_ * M_) {
    for (int j = 0; j < A.cols(); ++j) {
      for (int v = 0; v < q_; ++v) {
        Element* out = &data_[(static_cast<std::size_t>(j) * q_ + v) * M_];
        for (int i = 0; i < M_; ++i) out[i] = f.mul(A.entries(i, j), static_cast<Element>(v));
      }
    }
  }
  const Element* operator()(int j, int v) const {
    return &data_[(static_cast<std::size_t>(j) * q_ + v) * M_];
  }

 private:
  int M_, q_;
  std::vector<Element> data_;
};

// Depth-first walk over every weight-k vector, carrying partial sums of the
// selected scaled columns. `on_match(support, values)` fires for each
// candidate whose image equals target; returning false stops the walk.
template <typename OnMatch>
class CandidateWalk {
 public:
  CandidateWalk(const FieldSpec& f, const ScaledColumns& cols, int N, int M,
                const Element* target, OnMatch on_match)
      : f_(f), cols_(cols), N_(N), M_(M), target_(target), on_match_(on_match) {}

  bool run(int k) {
    k_ = k;
    support_.assign(k, 0);
    values_.assign(k, 0);
    partial_.assign(static_cast<std::size_t>(k + 1) * M_, 0);
    if (k == 0) {
      for (int i = 0; i < M_; ++i) {
        if (target_[i] != 0) return true;
      }
      return on_match_(support_, values_);
    }
    return descend(0, 0);
  }

 private:
  bool descend(int depth, int start) {
    const Element* acc = &partial_[static_cast<std::size_t>(depth) * M_];
    const int q = f_.order();
    const bool leaf = depth + 1 == k_;
    for (int p = start; p <= N_ - (k_ - depth); ++p) {
      support_[depth] = p;
      for (int v = 1; v < q; ++v) {
        values_[depth] = static_cast<Element>(v);
        const Element* col = cols_(p, v);
        if (leaf) {
          int i = 0;
          while (i < M_ && f_.add(acc[i], col[i]) == target_[i]) ++i;
          if (i == M_ && !on_match_(support_, values_)) return false;
        } else {
          Element* next = &partial_[static_cast<std::size_t>(depth + 1) * M_];
          for (int i = 0; i < M_; ++i) next[i] = f_.add(acc[i], col[i]);
          if (!descend(depth + 1, p + 1)) return false;
        }
      }
    }
    return true;
  }

  const FieldSpec& f_;
  const ScaledColumns& cols_;
  int N_, M_;
  const Element* target_;
  OnMatch on_match_;
  int k_ = 0;
  std::vector<int> support_;
  std::vector<Element> values_;
  std::vector<Element> partial_;
};

void check_instance(const FieldSpec& f, const SensingMatrix& A, int K, std::uint64_t cap) {
  if (A.q != f.order()) throw DimensionMismatch("matrix and field orders differ");
  if (K < 0 || K > A.cols()) throw InvalidParameter("K must satisfy 0 <= K <= N");
  const BigInt candidates = signal_set_size(A.cols(), K, f.order()).total;
  if (candidates > cap) {
    throw EnumerationCapExceeded("L0 enumeration needs " + candidates.str() +
                                 " candidates, cap is " + std::to_string(cap));
  }
}

Signal make_signal(int N, const std::vector<int>& support, const std::vector<Element>& values) {
  ElementVector e = ElementVector::Zero(N);
  for (std::size_t i = 0; i < support.size(); ++i) e[support[i]] = values[i];
  return Signal(std::move(e));
}

}  // namespace

DecodeResult decode_l0(const FieldSpec& f, const SensingMatrix& A,
                       const ElementVector& y, int K, std::uint64_t cap) {
  if (y.size() != A.rows()) {
    throw DimensionMismatch("measurement has " + std::to_string(y.size()) +
                            " entries, matrix has " + std::to_string(A.rows()) + " rows");
  }
  check_instance(f, A, K, cap);
  const ScaledColumns cols(f, A);
  const int N = A.cols();

  using Key = std::pair<std::vector<int>, std::vector<Element>>;
  std::vector<Key> found;
  auto collect = [&](const std::vector<int>& s, const std::vector<Element>& v) {
    found.emplace_back(s, v);
    return true;
  };
  DecodeResult out;
  for (int k = 0; k <= K; ++k) {
    CandidateWalk walk(f, cols, N, A.rows(), y.data(), collect);
    walk.run(k);
    if (!found.empty()) {
      out.min_sparsity = k;
      break;
    }
  }
  std::sort(found.begin(), found.end());
  for (const auto& [s, v] : found) out.solutions.push_back(make_signal(N, s, v));
  if (out.solutions.empty()) {
    out.status = DecodeStatus::Infeasible;
  } else {
    out.status = out.solutions.size() == 1 ? DecodeStatus::Unique : DecodeStatus::Ambiguous;
  }
  return out;
}

ErrorEvents error_events(const FieldSpec& f, const SensingMatrix& A,
                         const Signal& x, int K, std::uint64_t cap) {
  if (x.sparsity() > K) throw InvalidParameter("signal sparsity exceeds K");
  const ElementVector y = matvec(f, A, x);

  ErrorEvents ev;
  const DecodeResult decoded = decode_l0(f, A, y, K, cap);
  ev.e0_error = !(decoded.status == DecodeStatus::Unique && decoded.solutions.front() == x);

  const ScaledColumns cols(f, A);
  const int N = A.cols();
  auto differs_from_x = [&](const std::vector<int>& s, const std::vector<Element>& v) {
    if (make_signal(N, s, v) == x) return true;
    ev.e_error = true;
    return false;
  };
  for (int k = 0; k <= x.sparsity() && !ev.e_error; ++k) {
    CandidateWalk walk(f, cols, N, A.rows(), y.data(), differs_from_x);
    walk.run(k);
  }
  return ev;
}

}  // namespace ffcs
