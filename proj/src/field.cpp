#include "ffcs/field.hpp"

#include <string>

#include "ffcs/errors.hpp"

namespace ffcs {

namespace {

unsigned poly_bits(const std::vector<int>& coeffs) {
  unsigned bits = 0;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i]) bits |= 1u << i;
  }
  return bits;
}

int bit_degree(unsigned v) {
  int d = -1;
  while (v) {
    v >>= 1;
    ++d;
  }
  return d;
}

// Remainder of a by b, both GF(2)[x] polynomials packed as bits.
unsigned gf2_mod(unsigned a, unsigned b) {
  const int db = bit_degree(b);
  for (int da = bit_degree(a); da >= db; da = bit_degree(a)) {
    a ^= b << (da - db);
  }
  return a;
}

bool gf2_irreducible(unsigned poly) {
  const int m = bit_degree(poly);
  if (m < 1) return false;
  for (int d = 1; d <= m / 2; ++d) {
    for (unsigned div = 1u << d; div < (2u << d); ++div) {
      if (gf2_mod(poly, div) == 0) return false;
    }
  }
  return true;
}

// Carry-less product reduced modulo poly.
unsigned gf2m_mul(unsigned a, unsigned b, unsigned poly) {
  unsigned prod = 0;
  for (int i = 0; b >> i; ++i) {
    if ((b >> i) & 1u) prod ^= a << i;
  }
  return gf2_mod(prod, poly);
}

void fill_inverse_tables(int q, const std::vector<Element>& add,
                         const std::vector<Element>& mul,
                         std::vector<Element>& neg, std::vector<Element>& inv) {
  neg.assign(q, 0);
  inv.assign(q, 0);
  for (int a = 0; a < q; ++a) {
    for (int b = 0; b < q; ++b) {
      if (add[a * q + b] == 0) neg[a] = static_cast<Element>(b);
      if (a != 0 && mul[a * q + b] == 1) inv[a] = static_cast<Element>(b);
    }
  }
}

FieldSpec verified(FieldSpec f) {
  if (auto bad = find_axiom_violation(f)) {
    throw UnsupportedOrder("tables for GF(" + std::to_string(f.order()) +
                           ") violate " + *bad);
  }
  return f;
}

}  // namespace

bool is_prime(int n) {
  if (n < 2) return false;
  for (int d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::optional<std::vector<int>> default_reduction_poly(int m) {
  switch (m) {
    case 2: return std::vector<int>{1, 1, 1};                    // x^2+x+1
    case 3: return std::vector<int>{1, 1, 0, 1};                 // x^3+x+1
    case 4: return std::vector<int>{1, 1, 0, 0, 1};              // x^4+x+1
    case 5: return std::vector<int>{1, 0, 1, 0, 0, 1};           // x^5+x^2+1
    case 6: return std::vector<int>{1, 1, 0, 0, 0, 0, 1};        // x^6+x+1
    case 7: return std::vector<int>{1, 1, 0, 0, 0, 0, 0, 1};     // x^7+x+1
    case 8: return std::vector<int>{1, 1, 0, 1, 1, 0, 0, 0, 1};  // x^8+x^4+x^3+x+1
    default: return std::nullopt;
  }
}

std::vector<int> supported_orders() {
  std::vector<int> out;
  for (int q = 2; q <= kMaxFieldOrder; ++q) {
    if (is_prime(q) || (q & (q - 1)) == 0) out.push_back(q);
  }
  return out;
}

FieldSpec make_field(int q) {
  if (q >= 2 && q <= kMaxFieldOrder && is_prime(q)) {
    FieldSpec f;
    f.q_ = q;
    f.p_ = q;
    f.m_ = 1;
    f.add_.resize(q * q);
    f.mul_.resize(q * q);
    for (int a = 0; a < q; ++a) {
      for (int b = 0; b < q; ++b) {
        f.add_[a * q + b] = static_cast<Element>((a + b) % q);
        f.mul_[a * q + b] = static_cast<Element>((a * b) % q);
      }
    }
    fill_inverse_tables(q, f.add_, f.mul_, f.neg_, f.inv_);
    return verified(std::move(f));
  }
  if (q >= 4 && q <= kMaxFieldOrder && (q & (q - 1)) == 0) {
    return make_field(q, *default_reduction_poly(bit_degree(q)));
  }
  throw UnsupportedOrder("unsupported field order " + std::to_string(q) +
                         ": expected a prime <= 256 or 2^m with m <= 8");
}

FieldSpec make_field(int q, const std::vector<int>& reduction_poly) {
  if (q < 4 || q > kMaxFieldOrder || (q & (q - 1)) != 0) {
    throw UnsupportedOrder("custom reduction polynomials need q = 2^m, 2 <= m <= 8");
  }
  const int m = bit_degree(q);
  for (int c : reduction_poly) {
    if (c != 0 && c != 1) throw InvalidParameter("coefficients must be 0 or 1");
  }
  const unsigned poly = poly_bits(reduction_poly);
  if (bit_degree(poly) != m) {
    throw InvalidParameter("reduction polynomial must have degree " + std::to_string(m));
  }
  if (!gf2_irreducible(poly)) {
    throw InvalidParameter("reduction polynomial is reducible over F_2");
  }
  FieldSpec f;
  f.q_ = q;
  f.p_ = 2;
  f.m_ = m;
  f.poly_.assign(m + 1, 0);
  for (int i = 0; i <= m; ++i) f.poly_[i] = (poly >> i) & 1u;
  f.add_.resize(q * q);
  f.mul_.resize(q * q);
  for (int a = 0; a < q; ++a) {
    for (int b = 0; b < q; ++b) {
      f.add_[a * q + b] = static_cast<Element>(a ^ b);
      f.mul_[a * q + b] = static_cast<Element>(gf2m_mul(a, b, poly));
    }
  }
  fill_inverse_tables(q, f.add_, f.mul_, f.neg_, f.inv_);
  return verified(std::move(f));
}

namespace {

void require_member(const FieldSpec& f, int a) {
  if (!f.contains(a)) {
    throw InvalidParameter("element " + std::to_string(a) + " not in GF(" +
                           std::to_string(f.order()) + ")");
  }
}

}  // namespace

Element add(const FieldSpec& f, int a, int b) {
  require_member(f, a);
  require_member(f, b);
  return f.add(static_cast<Element>(a), static_cast<Element>(b));
}

Element mul(const FieldSpec& f, int a, int b) {
  require_member(f, a);
  require_member(f, b);
  return f.mul(static_cast<Element>(a), static_cast<Element>(b));
}

Element neg(const FieldSpec& f, int a) {
  require_member(f, a);
  return f.neg(static_cast<Element>(a));
}

Element sub(const FieldSpec& f, int a, int b) {
  require_member(f, a);
  require_member(f, b);
  return f.sub(static_cast<Element>(a), static_cast<Element>(b));
}

Element inv(const FieldSpec& f, int a) {
  require_member(f, a);
  if (a == 0) throw DivisionByZero("inverse of zero");
  return f.inv_table()[a];
}

std::optional<const char*> find_axiom_violation(const FieldSpec& f) {
  const int q = f.order();
  const auto add = f.add_table();
  const auto mul = f.mul_table();
  if (q < 2 || add.size() != static_cast<std::size_t>(q * q) ||
      mul.size() != add.size()) {
    return "table shape";
  }
  for (std::size_t i = 0; i < add.size(); ++i) {
    if (add[i] >= q || mul[i] >= q) return "closure";
  }
  for (int a = 0; a < q; ++a) {
    const auto ea = static_cast<Element>(a);
    if (f.add(ea, 0) != ea || f.add(0, ea) != ea) return "additive identity";
    if (f.mul(ea, 1) != ea || f.mul(1, ea) != ea) return "multiplicative identity";
    if (f.add(ea, f.neg(ea)) != 0) return "additive inverse";
    if (a != 0 && f.mul(ea, f.inv_table()[a]) != 1) return "multiplicative inverse";
    for (int b = 0; b < q; ++b) {
      const auto eb = static_cast<Element>(b);
      if (f.add(ea, eb) != f.add(eb, ea)) return "additive commutativity";
      if (f.mul(ea, eb) != f.mul(eb, ea)) return "multiplicative commutativity";
      for (int c = 0; c < q; ++c) {
        const auto ec = static_cast<Element>(c);
        if (f.add(f.add(ea, eb), ec) != f.add(ea, f.add(eb, ec))) {
          return "additive associativity";
        }
        if (f.mul(f.mul(ea, eb), ec) != f.mul(ea, f.mul(eb, ec))) {
          return "multiplicative associativity";
        }
        if (f.mul(ea, f.add(eb, ec)) != f.add(f.mul(ea, eb), f.mul(ea, ec))) {
          return "distributivity";
        }
      }
    }
  }
  return std::nullopt;
}

std::uint64_t table_checksum(std::span<const Element> table) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (Element e : table) {
    h ^= e;
    h *= 0x100000001b3ull;
  }
  return h;
}

}  // namespace ffcs
