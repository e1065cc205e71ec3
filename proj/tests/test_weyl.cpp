#include "doctest.h"
#include "nilpair/common.hpp"
#include "nilpair/subalgebra.hpp"
#include "nilpair/weyl.hpp"

using namespace nilpair;
using weyl::Element;

namespace {

// Independent oracle for the normal-form product, from the closed sum
//   y^b x^c = sum_k (-1)^k C(b,k) C(c,k) k! x^{c-k} y^{b-k}
// with all coefficients taken mod p (k! = 0 mod p for k >= p).
Element oracle_mul(const Element& u, const Element& v) {
  const Fq& F = u.field();
  int p = F.characteristic();
  int maxe = 0;
  for (const auto& [e, c] : u.terms()) maxe = std::max({maxe, e.first, e.second});
  for (const auto& [e, c] : v.terms()) maxe = std::max({maxe, e.first, e.second});
  int N = maxe + 1;
  std::vector<std::vector<int>> C(N + 1, std::vector<int>(N + 1, 0));
  for (int i = 0; i <= N; ++i) {
    C[i][0] = 1;
    for (int j = 1; j <= i; ++j)
      C[i][j] = (C[i - 1][j - 1] + (j <= i - 1 ? C[i - 1][j] : 0)) % p;
  }
  std::vector<int> fact(N + 1, 0);
  fact[0] = 1 % p;
  for (int k = 1; k <= N; ++k) fact[k] = static_cast<int>((static_cast<long long>(fact[k - 1]) * k) % p);

  Element out(F);
  for (const auto& [eu, cu] : u.terms()) {
    for (const auto& [ev, cv] : v.terms()) {
      int b = eu.second, c = ev.first;
      for (int k = 0; k <= std::min(b, c); ++k) {
        long long coef = (static_cast<long long>(C[b][k]) * C[c][k]) % p;
        coef = (coef * fact[k]) % p;
        Scalar s = F.mul(F.mul(cu, cv), F.from_int(coef));
        if (k % 2 == 1) s = F.neg(s);
        out.add_term(eu.first + (c - k), (b - k) + ev.second, s);
      }
    }
  }
  return out;
}

Element random_element(const Fq& F, Rng& rng, int max_deg, int max_terms) {
  Element e(F);
  int terms = 1 + static_cast<int>(rng.below(max_terms));
  for (int t = 0; t < terms; ++t)
    e.add_term(static_cast<int>(rng.below(max_deg + 1)),
               static_cast<int>(rng.below(max_deg + 1)),
               F.element(static_cast<uint32_t>(rng.below(F.order()))));
  return e;
}

}  // namespace

TEST_CASE("normal-form product: defining relation and pinned reductions") {
  Fq F5(5, 1);
  Element x = Element::gen_x(F5), y = Element::gen_y(F5);

  // y x = x y - 1
  Element yx = y * x;
  Element expect = x * y - Element::one(F5);
  CHECK(yx == expect);

  // [x, y] = 1
  CHECK(weyl::commutator(x, y) == Element::one(F5));

  // y^2 x = x y^2 - 2y; over F_2 the second term vanishes
  Fq F2(2, 1);
  Element x2 = Element::gen_x(F2), y2 = Element::gen_y(F2);
  CHECK(y2 * y2 * x2 == x2 * y2 * y2);

  // unit
  Fq F3(3, 1);
  Rng rng(43);
  for (int t = 0; t < 10; ++t) {
    Element u = random_element(F3, rng, 4, 4);
    CHECK(Element::one(F3) * u == u);
    CHECK(u * Element::one(F3) == u);
  }
}

TEST_CASE("product matches the closed-formula oracle") {
  Rng rng(47);
  for (int p : {2, 3, 5}) {
    Fq F(p, 1);
    for (int t = 0; t < 200; ++t) {
      Element u = random_element(F, rng, 6, 3);
      Element v = random_element(F, rng, 6, 3);
      CHECK(u * v == oracle_mul(u, v));
    }
  }
}

TEST_CASE("multiplication is associative on random triples") {
  Rng rng(53);
  for (int p : {2, 3, 5}) {
    Fq F(p, 1);
    for (int t = 0; t < 170; ++t) {
      Element u = random_element(F, rng, 6, 3);
      Element v = random_element(F, rng, 6, 3);
      Element w = random_element(F, rng, 6, 3);
      CHECK((u * v) * w == u * (v * w));
    }
  }
}

TEST_CASE("x^p and y^p are central; x is not") {
  for (int p : {2, 3, 5}) {
    Fq F(p, 1);
    Element x = Element::gen_x(F), y = Element::gen_y(F);
    CHECK(is_central_against_generators(x.pow(p)));
    CHECK(is_central_against_generators(y.pow(p)));
    CHECK_FALSE(is_central_against_generators(x));
    CHECK_FALSE(is_central_against_generators(y));

    // against a few composite elements as well
    std::vector<Element> probes = {x, y, x * y, x * x * y};
    for (const auto& u : probes) {
      CHECK(weyl::commutator(x.pow(p), u).is_zero());
      CHECK(weyl::commutator(y.pow(p), u).is_zero());
    }
  }
}

TEST_CASE("truncated quotient dimensions and guards") {
  Fq F2(2, 1);
  CHECK(weyl::Truncated(F2, 1).dim() == 4);
  CHECK(weyl::Truncated(F2, 2).dim() == 16);
  Fq F3(3, 1);
  CHECK(weyl::Truncated(F3, 1).dim() == 9);
  CHECK(weyl::Truncated(F3, 2).dim() == 81);

  Fq F5(5, 1);
  CHECK_THROWS_AS(weyl::Truncated(F5, 2), std::invalid_argument);
  CHECK_THROWS_AS(weyl::Truncated(F2, 3), std::invalid_argument);
  Fq F4(2, 2);
  CHECK_THROWS_AS(weyl::Truncated(F4, 1), std::invalid_argument);
}

TEST_CASE("truncated multiplication: images of x^{p^a}, y^{p^a} vanish; associativity") {
  Rng rng(59);
  for (int p : {2, 3}) {
    Fq F(p, 1);
    for (int a = 1; a <= 2; ++a) {
      weyl::Truncated T(F, a);
      auto xv = T.basis_vec(T.index(1, 0));
      auto yv = T.basis_vec(T.index(0, 1));
      auto xe = xv, ye = yv;
      for (int i = 1; i < T.cap(); ++i) {
        xe = T.mul(xe, xv);
        ye = T.mul(ye, yv);
      }
      CHECK(T.mul(xe, xv) == T.zero());  // x^{p^a} = 0
      CHECK(T.mul(ye, yv) == T.zero());
      for (int t = 0; t < 40; ++t) {
        auto u = T.basis_vec(static_cast<int>(rng.below(T.dim())));
        auto v = T.basis_vec(static_cast<int>(rng.below(T.dim())));
        auto w = T.basis_vec(static_cast<int>(rng.below(T.dim())));
        CHECK(T.mul(T.mul(u, v), w) == T.mul(u, T.mul(v, w)));
      }
    }
  }
}

TEST_CASE("matrix structure certification at level 1") {
  for (int p : {2, 3}) {
    Fq F(p, 1);
    weyl::Truncated T(F, 1);
    auto rep = weyl::verify_matrix_structure(T);
    for (const auto& c : rep.checks) {
      INFO(c.name, " ", c.detail);
      CHECK(c.pass);
    }
    CHECK(rep.all_pass);
  }
}

TEST_CASE("matrix structure certification at level 2, p = 2") {
  Fq F2(2, 1);
  weyl::Truncated T(F2, 2);
  auto rep = weyl::verify_matrix_structure(T);
  for (const auto& c : rep.checks) {
    INFO(c.name, " ", c.detail);
    CHECK(c.pass);
  }
  CHECK(rep.all_pass);
  CHECK(T.dim() == 16);
}

TEST_CASE("standard representation matrices satisfy the relation exactly") {
  // The level-1 report covers this; pinned here at p = 3 with explicit entries.
  Fq F3(3, 1);
  Mat X = Mat::jordan_block(F3, 3);
  Mat Y(F3, 3, 3);
  Y.at(0, 1) = F3.from_int(-1);
  Y.at(1, 2) = F3.from_int(-2);
  CHECK(commutator(X, Y) == Mat::identity(F3, 3));
  CHECK(X.pow(3).is_zero());
  CHECK(Y.pow(3).is_zero());
  CHECK(algebra_dim({X, Y}) == 9);
}
