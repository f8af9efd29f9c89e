#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace ffcs {

/// Field elements are encoded as integers 0..q-1. For q = 2^m the bits of
/// the encoding are the coefficients of the polynomial basis (bit i <-> x^i).
using Element = std::uint8_t;

inline constexpr int kMaxFieldOrder = 256;

/// Immutable description of GF(q) with precomputed operation tables.
///
/// Instances are only produced by make_field(), which verifies the field
/// axioms before returning, so every FieldSpec in circulation is a field.
class FieldSpec {
 public:
  int order() const { return q_; }
  int characteristic() const { return p_; }
  int degree() const { return m_; }

  /// Coefficients over F_p, lowest degree first, including the leading 1.
  /// Empty for prime fields.
  const std::vector<int>& reduction_poly() const { return poly_; }

  std::span<const Element> add_table() const { return add_; }
  std::span<const Element> mul_table() const { return mul_; }
  std::span<const Element> neg_table() const { return neg_; }
  /// inv_table()[0] is unused and holds 0.
  std::span<const Element> inv_table() const { return inv_; }

  bool contains(int a) const { return a >= 0 && a < q_; }

  // Unchecked table lookups for inner loops.
  Element add(Element a, Element b) const { return add_[a * q_ + b]; }
  Element mul(Element a, Element b) const { return mul_[a * q_ + b]; }
  Element neg(Element a) const { return neg_[a]; }
  Element sub(Element a, Element b) const { return add_[a * q_ + neg_[b]]; }

 private:
  friend FieldSpec make_field(int q);
  friend FieldSpec make_field(int q, const std::vector<int>& reduction_poly);
  FieldSpec() = default;

  int q_ = 0;
  int p_ = 0;
  int m_ = 0;
  std::vector<int> poly_;
  std::vector<Element> add_;
  std::vector<Element> mul_;
  std::vector<Element> neg_;
  std::vector<Element> inv_;
};

/// Builds GF(q) for q prime (q <= 256) or q = 2^m with 1 <= m <= 8.
/// Binary extensions use the default reduction polynomial for that degree.
/// Throws UnsupportedOrder otherwise.
FieldSpec make_field(int q);

/// Binary extension field with a caller-chosen reduction polynomial
/// (coefficients lowest degree first). The polynomial is checked for
/// irreducibility by trial division; throws InvalidParameter on a bad polynomial.
FieldSpec make_field(int q, const std::vector<int>& reduction_poly);

/// Default reduction polynomial for GF(2^m), or nullopt outside 2..8.
std::optional<std::vector<int>> default_reduction_poly(int m);

bool is_prime(int n);

/// Orders accepted by make_field(int), ascending.
std::vector<int> supported_orders();

// Checked operations. Operands must lie in [0, q).
Element add(const FieldSpec& f, int a, int b);
Element mul(const FieldSpec& f, int a, int b);
Element neg(const FieldSpec& f, int a);
Element sub(const FieldSpec& f, int a, int b);
/// Throws DivisionByZero for a == 0.
Element inv(const FieldSpec& f, int a);

/// Exhaustive check of the field axioms on the tables; returns the first
/// violated axiom's name, or nullopt when all hold.
std::optional<const char*> find_axiom_violation(const FieldSpec& f);

/// FNV-1a digest of a table, for quick identification in CLI output.
std::uint64_t table_checksum(std::span<const Element> table);

}  // namespace ffcs
