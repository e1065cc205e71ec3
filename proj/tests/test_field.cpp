#include "doctest.h"
#include "nilpair/common.hpp"
#include "nilpair/field.hpp"

#include <set>

using namespace nilpair;

TEST_CASE("prime fields and small extensions construct deterministically") {
  Fq F2(2, 1);
  CHECK(F2.order() == 2);
  CHECK(F2.modulus() == std::vector<int>{0, 1});  // x

  Fq F4(2, 2);
  CHECK(F4.order() == 4);
  // the only irreducible quadratic over F_2 (both linear candidates have roots)
  CHECK(F4.modulus() == std::vector<int>{1, 1, 1});  // x^2+x+1

  Fq F8(2, 3);
  CHECK(F8.modulus() == std::vector<int>{1, 1, 0, 1});  // x^3+x+1

  Fq F3(3, 1);
  CHECK(F3.order() == 3);

  Fq F9(3, 2);
  CHECK(F9.modulus() == std::vector<int>{1, 0, 1});  // x^2+1

  CHECK_THROWS_WITH_AS(Fq(4, 1), "not prime", std::invalid_argument);
  CHECK_THROWS_WITH_AS(Fq(9, 1), "not prime", std::invalid_argument);
  CHECK_THROWS_AS(Fq(2, 0), std::invalid_argument);
  CHECK_THROWS_AS(Fq(2, 9), std::invalid_argument);
  CHECK_THROWS_AS(Fq(257, 3), std::invalid_argument);  // q > 2^16
}

TEST_CASE("characteristic-2 and small prime arithmetic") {
  Fq F2(2, 1);
  CHECK(F2.add(F2.one(), F2.one()) == F2.zero());

  Fq F3(3, 1);
  // 2*2 = 4 = 1 mod 3
  CHECK(F3.inv(F3.from_int(2)) == F3.from_int(2));
  CHECK_THROWS_WITH_AS(F3.inv(F3.zero()), "division by zero", std::domain_error);
}

TEST_CASE("GF(4) multiplication reduces by the modulus") {
  Fq F4(2, 2);
  Scalar g = F4.from_coeffs({0, 1});  // the class of x
  Scalar g1 = F4.from_coeffs({1, 1});
  // g*g = g+1 mod x^2+x+1
  CHECK(F4.mul(g, g) == g1);
  CHECK(F4.mul(g, g1) == F4.one());
  CHECK(F4.inv(g) == g1);
}

TEST_CASE("enumeration is complete, duplicate-free, and starts 0,1") {
  for (auto [p, m] : {std::pair{2, 1}, {2, 2}, {2, 3}, {3, 1}, {3, 2}, {5, 1}}) {
    Fq F(p, m);
    std::set<uint32_t> seen;
    for (uint32_t i = 0; i < F.order(); ++i) seen.insert(F.element(i).rep);
    CHECK(seen.size() == F.order());
    CHECK(F.element(0) == F.zero());
    CHECK(F.element(1) == F.one());
  }
}

TEST_CASE("field axioms hold on random triples") {
  for (auto [p, m] : {std::pair{2, 1}, {2, 2}, {2, 3}, {2, 4}, {3, 1}, {3, 2}, {5, 1}, {7, 1}}) {
    Fq F(p, m);
    Rng rng(0x5eed + p * 100 + m);
    for (int t = 0; t < 1000; ++t) {
      Scalar a = F.element(static_cast<uint32_t>(rng.below(F.order())));
      Scalar b = F.element(static_cast<uint32_t>(rng.below(F.order())));
      Scalar c = F.element(static_cast<uint32_t>(rng.below(F.order())));
      CHECK(F.add(F.add(a, b), c) == F.add(a, F.add(b, c)));
      CHECK(F.mul(F.mul(a, b), c) == F.mul(a, F.mul(b, c)));
      CHECK(F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c)));
      CHECK(F.add(a, b) == F.add(b, a));
      CHECK(F.mul(a, b) == F.mul(b, a));
      CHECK(F.sub(a, a) == F.zero());
      if (!F.is_zero(a)) {
        CHECK(F.mul(a, F.inv(a)) == F.one());
        CHECK(F.pow(a, F.order() - 1) == F.one());
      }
    }
  }
}

TEST_CASE("frobenius is an automorphism with order dividing m") {
  for (auto [p, m] : {std::pair{2, 2}, {2, 3}, {3, 2}, {2, 4}}) {
    Fq F(p, m);
    Rng rng(0xf0b + p + m);
    for (int t = 0; t < 500; ++t) {
      Scalar a = F.element(static_cast<uint32_t>(rng.below(F.order())));
      Scalar b = F.element(static_cast<uint32_t>(rng.below(F.order())));
      CHECK(F.frobenius(F.mul(a, b)) == F.mul(F.frobenius(a), F.frobenius(b)));
      CHECK(F.frobenius(F.add(a, b)) == F.add(F.frobenius(a), F.frobenius(b)));
      Scalar it = a;
      for (int k = 0; k < m; ++k) it = F.frobenius(it);
      CHECK(it == a);
    }
  }
}

TEST_CASE("field_cache returns one stable context per (p,m)") {
  const Fq& a = field_cache(2, 2);
  const Fq& b = field_cache(2, 2);
  CHECK(&a == &b);
  CHECK(a.order() == 4);
}
