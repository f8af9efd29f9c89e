#include <doctest.h>

#include <set>

#include "ffcs/errors.hpp"
#include "ffcs/field.hpp"
#include "oracles.hpp"

using namespace ffcs;

TEST_CASE("small field examples") {
  const auto f2 = make_field(2);
  for (int a = 0; a < 2; ++a) {
    for (int b = 0; b < 2; ++b) {
      CHECK(add(f2, a, b) == (a ^ b));
      CHECK(mul(f2, a, b) == (a & b));
    }
  }
  CHECK(add(f2, 1, 1) == 0);
  CHECK(mul(make_field(5), 3, 4) == 2);
  CHECK(mul(make_field(4), 2, 2) == 3);
  CHECK(mul(make_field(256), 2, 128) == 27);
}

TEST_CASE("unsupported orders") {
  for (int q : {0, 1, 6, 9, 12, 25, 27, 257, 512}) {
    CHECK_THROWS_AS(make_field(q), UnsupportedOrder);
  }
  CHECK_THROWS_AS(make_field(12), ValidationError);
}

TEST_CASE("supported orders are primes and powers of two up to 256") {
  const auto orders = supported_orders();
  CHECK(orders.front() == 2);
  CHECK(orders.back() == 256);
  int primes = 0;
  for (int q : orders) primes += is_prime(q);
  CHECK(primes == 54);
  CHECK(orders.size() == 54 + 7);
}

TEST_CASE("binary extension tables match carry-less multiplication") {
  const int polys[] = {0, 0, 0b111, 0b1011, 0b10011, 0b100101, 0b1000011, 0b10000011, 0x11B};
  for (int m = 2; m <= 8; ++m) {
    const int q = 1 << m;
    const auto f = make_field(q);
    CHECK(f.characteristic() == 2);
    CHECK(f.degree() == m);
    int bits = 0;
    for (std::size_t i = 0; i < f.reduction_poly().size(); ++i) bits |= f.reduction_poly()[i] << i;
    CHECK(bits == polys[m]);
    for (int a = 0; a < q; ++a) {
      for (int b = 0; b < q; ++b) {
        REQUIRE(f.mul(a, b) == oracle::gf2m_mul(a, b, polys[m], m));
        REQUIRE(f.add(a, b) == (a ^ b));
      }
    }
  }
}

TEST_CASE("prime field tables are modular arithmetic") {
  for (int p : {3, 7, 31, 251}) {
    const auto f = make_field(p);
    for (int a = 0; a < p; ++a) {
      for (int b = 0; b < p; ++b) {
        REQUIRE(f.add(a, b) == (a + b) % p);
        REQUIRE(f.mul(a, b) == (a * b) % p);
      }
    }
  }
}

TEST_CASE("custom reduction polynomial") {
  // x^4 + x^3 + 1 is irreducible, x^4 + x^2 + 1 = (x^2 + x + 1)^2 is not.
  const auto f = make_field(16, {1, 0, 0, 1, 1});
  CHECK(!find_axiom_violation(f));
  for (int a = 0; a < 16; ++a) {
    for (int b = 0; b < 16; ++b) REQUIRE(f.mul(a, b) == oracle::gf2m_mul(a, b, 0b11001, 4));
  }
  CHECK_THROWS_AS(make_field(16, {1, 0, 1, 0, 1}), InvalidParameter);
  CHECK_THROWS_AS(make_field(16, {1, 1, 1}), InvalidParameter);
}

TEST_CASE("negation and inversion") {
  for (int q : {2, 3, 4, 5, 8, 13, 16, 256}) {
    const auto f = make_field(q);
    for (int a = 0; a < q; ++a) {
      CHECK(add(f, a, neg(f, a)) == 0);
      CHECK(neg(f, neg(f, a)) == a);
      CHECK(sub(f, add(f, a, 1 % q), 1 % q) == a);
      if (a != 0) {
        CHECK(mul(f, a, inv(f, a)) == 1);
        CHECK(inv(f, inv(f, a)) == a);
      }
    }
    CHECK_THROWS_AS(inv(f, 0), DivisionByZero);
    CHECK_THROWS_AS(add(f, q, 0), InvalidParameter);
    CHECK_THROWS_AS(mul(f, -1, 0), InvalidParameter);
  }
}

TEST_CASE("scaling by a nonzero element permutes the field") {
  for (int q : {2, 3, 4, 7, 16, 256}) {
    const auto f = make_field(q);
    for (int beta = 1; beta < q; ++beta) {
      std::set<int> image, nonzero_image;
      for (int a = 0; a < q; ++a) {
        image.insert(f.mul(beta, a));
        if (a) nonzero_image.insert(f.mul(beta, a));
      }
      REQUIRE(image.size() == static_cast<std::size_t>(q));
      REQUIRE(nonzero_image.size() == static_cast<std::size_t>(q - 1));
      REQUIRE(!nonzero_image.count(0));
    }
  }
}

TEST_CASE("checksums identify tables") {
  const auto a = make_field(16);
  const auto b = make_field(16, {1, 0, 0, 1, 1});
  CHECK(table_checksum(a.add_table()) == table_checksum(b.add_table()));
  CHECK(table_checksum(a.mul_table()) != table_checksum(b.mul_table()));
  CHECK(table_checksum(a.mul_table()) == table_checksum(make_field(16).mul_table()));
}
