#include "doctest.h"
#include "nilpair/common.hpp"
#include "nilpair/matrix.hpp"

using namespace nilpair;

namespace {

Mat random_matrix(const Fq& F, int n, Rng& rng) {
  Mat m(F, n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      m.at(i, j) = F.element(static_cast<uint32_t>(rng.below(F.order())));
  return m;
}

Mat random_invertible(const Fq& F, int n, Rng& rng) {
  while (true) {
    Mat g = random_matrix(F, n, rng);
    if (rank_of(g) == n) return g;
  }
}

// Reference cubic-time product, used as the oracle for 2x2/3x3 examples.
Mat naive_mul(const Mat& a, const Mat& b) {
  const Fq& F = a.field();
  Mat r(F, a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < b.cols(); ++j) {
      Scalar s = F.zero();
      for (int k = 0; k < a.cols(); ++k) s = F.add(s, F.mul(a.at(i, k), b.at(k, j)));
      r.at(i, j) = s;
    }
  return r;
}

}  // namespace

TEST_CASE("commutator of the 2x2 shift pair is the identity in char 2") {
  Fq F2(2, 1);
  Mat A = Mat::unit(F2, 2, 1, 0);  // e21
  Mat B = Mat::unit(F2, 2, 0, 1);  // e12
  Mat c = naive_mul(A, B) - naive_mul(B, A);
  CHECK(c == Mat::identity(F2, 2));
  CHECK(commutator(A, B) == c);
}

TEST_CASE("commutator trivial cases") {
  Fq F3(3, 1);
  Rng rng(7);
  for (int t = 0; t < 50; ++t) {
    Mat A = random_matrix(F3, 3, rng);
    Mat B = random_matrix(F3, 3, rng);
    CHECK(commutator(A, A).is_zero());
    CHECK(commutator(Mat::identity(F3, 3), B).is_zero());
    CHECK(commutator(A, B).trace() == F3.zero());
  }
  Fq F2(2, 1);
  CHECK_THROWS_AS(commutator(Mat(F2, 2, 2), Mat(F2, 3, 3)), std::invalid_argument);
}

TEST_CASE("rank, kernel, and solve on pinned examples") {
  Fq F2(2, 1);
  Mat zero(F2, 2, 2);
  auto rk = rank_kernel(zero);
  CHECK(rk.rank == 0);
  CHECK(rk.kernel.size() == 2);

  Mat id = Mat::identity(F2, 3);
  auto rk2 = rank_kernel(id);
  CHECK(rk2.rank == 3);
  CHECK(rk2.kernel.empty());

  Mat e12 = Mat::unit(F2, 2, 0, 1);
  auto rk3 = rank_kernel(e12);
  CHECK(rk3.rank == 1);
  REQUIRE(rk3.kernel.size() == 1);
  CHECK(rk3.kernel[0] == std::vector<Scalar>{F2.one(), F2.zero()});

  // solvable and unsolvable systems
  auto sol = solve(e12, {F2.one(), F2.zero()});
  REQUIRE(sol.has_value());
  CHECK(mat_vec(e12, *sol) == std::vector<Scalar>{F2.one(), F2.zero()});
  CHECK_FALSE(solve(e12, {F2.zero(), F2.one()}).has_value());
}

TEST_CASE("rank + kernel dimension = cols, kernel annihilated") {
  Rng rng(11);
  for (auto [p, m] : {std::pair{2, 1}, {3, 1}, {2, 2}}) {
    Fq F(p, m);
    for (int t = 0; t < 60; ++t) {
      int n = 2 + static_cast<int>(rng.below(4));
      Mat A = random_matrix(F, n, rng);
      auto rk = rank_kernel(A);
      CHECK(rk.rank + static_cast<int>(rk.kernel.size()) == n);
      for (const auto& v : rk.kernel) {
        auto image = mat_vec(A, v);
        for (auto x : image) CHECK(x == F.zero());
      }
    }
  }
}

TEST_CASE("char_poly pinned examples") {
  Fq F2(2, 1);
  Mat J2 = Mat::jordan_block(F2, 2);
  CHECK(char_poly(J2) == std::vector<Scalar>{F2.zero(), F2.zero(), F2.one()});  // t^2

  // (t-1)^2 = t^2 + 1 mod 2
  CHECK(char_poly(Mat::identity(F2, 2)) ==
        std::vector<Scalar>{F2.one(), F2.zero(), F2.one()});

  Fq F3(3, 1);
  Mat d(F3, 2, 2);
  d.at(0, 0) = F3.from_int(1);
  d.at(1, 1) = F3.from_int(2);
  // (t-1)(t-2) = t^2 - 3t + 2 = t^2 + 2 mod 3
  CHECK(char_poly(d) == std::vector<Scalar>{F3.from_int(2), F3.zero(), F3.one()});
}

TEST_CASE("char_poly agrees with Berkowitz and is a conjugation invariant") {
  Rng rng(13);
  for (auto [p, m] : {std::pair{2, 1}, {3, 1}, {2, 2}, {5, 1}}) {
    Fq F(p, m);
    for (int t = 0; t < 40; ++t) {
      int n = 1 + static_cast<int>(rng.below(5));
      Mat A = random_matrix(F, n, rng);
      auto cp = char_poly(A);
      REQUIRE(cp.size() == static_cast<size_t>(n + 1));
      CHECK(cp[n] == F.one());
      CHECK(cp == char_poly_berkowitz(A));
      Mat g = random_invertible(F, n, rng);
      Mat conj = g * A * *inverse(g);
      CHECK(char_poly(conj) == cp);
    }
  }
}

TEST_CASE("nilpotency and Jordan type") {
  Fq F2(2, 1);
  Mat z(F2, 3, 3);
  auto info = nilpotency_and_type(z);
  CHECK(info.nilpotent);
  CHECK(info.type.parts == std::vector<int>{1, 1, 1});

  Mat j31 = Mat::jordan_rep(F2, {3, 1});
  CHECK(rank_of(j31) == 2);
  CHECK(rank_of(j31 * j31) == 1);
  CHECK((j31 * j31 * j31).is_zero());
  auto info2 = nilpotency_and_type(j31);
  CHECK(info2.nilpotent);
  CHECK(info2.type.parts == std::vector<int>{3, 1});

  CHECK_FALSE(nilpotency_and_type(Mat::identity(F2, 2)).nilpotent);
  CHECK_FALSE(is_nilpotent(Mat::identity(F2, 4)));
}

TEST_CASE("jordan type is a conjugation invariant summing to n") {
  Rng rng(17);
  for (auto [p, m] : {std::pair{2, 1}, {3, 1}}) {
    Fq F(p, m);
    std::vector<std::vector<int>> types = {{4}, {3, 1}, {2, 2}, {2, 1, 1}, {1, 1, 1, 1}};
    for (const auto& parts : types) {
      Mat A = Mat::jordan_rep(F, parts);
      for (int t = 0; t < 10; ++t) {
        Mat g = random_invertible(F, 4, rng);
        Mat conj = g * A * *inverse(g);
        auto info = nilpotency_and_type(conj);
        CHECK(info.nilpotent);
        CHECK(info.type.parts == parts);
        int sum = 0;
        for (int x : info.type.parts) sum += x;
        CHECK(sum == 4);
      }
    }
  }
}

TEST_CASE("dual char poly: value parts, 1x1, and derivative structure") {
  Fq F3(3, 1);

  // n=1: t - a - e*eps
  Mat a1(F3, 1, 1), e1(F3, 1, 1);
  a1.at(0, 0) = F3.from_int(2);
  e1.at(0, 0) = F3.from_int(1);
  auto d1 = dual_char_poly(a1, e1);
  REQUIRE(d1.size() == 2);
  CHECK(d1[0].val == F3.from_int(-2));
  CHECK(d1[0].der == F3.from_int(-1));
  CHECK(d1[1].val == F3.one());
  CHECK(d1[1].der == F3.zero());

  Rng rng(23);
  for (auto [p, m] : {std::pair{2, 1}, {3, 1}, {2, 2}}) {
    Fq F(p, m);
    for (int t = 0; t < 30; ++t) {
      int n = 1 + static_cast<int>(rng.below(4));
      Mat A = random_matrix(F, n, rng);
      Mat Z(F, n, n);
      // direction 0: eps-parts vanish, value parts match char_poly
      auto dz = dual_char_poly(A, Z);
      auto cp = char_poly(A);
      for (int i = 0; i <= n; ++i) {
        CHECK(dz[i].val == cp[i]);
        CHECK(dz[i].der == F.zero());
      }
      // at A=0 the t^{n-1} coefficient moves by -trace(dir)
      Mat E = random_matrix(F, n, rng);
      auto d0 = dual_char_poly(Z, E);
      CHECK(d0[n - 1].der == F.neg(E.trace()));
      // derivative is additive in the direction
      Mat E2 = random_matrix(F, n, rng);
      auto da = dual_char_poly(A, E);
      auto db = dual_char_poly(A, E2);
      auto dsum = dual_char_poly(A, E + E2);
      for (int i = 0; i <= n; ++i) CHECK(dsum[i].der == F.add(da[i].der, db[i].der));
    }
  }
}

TEST_CASE("jordan_chains produce a conjugation to block form") {
  Rng rng(29);
  for (auto [p, m] : {std::pair{2, 1}, {3, 1}, {2, 2}}) {
    Fq F(p, m);
    std::vector<std::vector<int>> types = {{1}, {2}, {2, 1}, {3, 1}, {2, 2}, {2, 2, 1}, {4, 2}};
    for (const auto& parts : types) {
      int n = 0;
      for (int x : parts) n += x;
      Mat A0 = Mat::jordan_rep(F, parts);
      Mat g = random_invertible(F, n, rng);
      Mat A = g * A0 * *inverse(g);
      auto ch = jordan_chains(A);
      CHECK(ch.heights == parts);
      Mat P = chain_basis(F, ch);
      Mat back = *inverse(P) * A * P;
      CHECK(back == A0);
    }
  }
}

TEST_CASE("EchelonSpan tracks dimension and membership") {
  Fq F2(2, 1);
  EchelonSpan span(F2, 3);
  CHECK(span.insert({F2.one(), F2.one(), F2.zero()}));
  CHECK(span.insert({F2.zero(), F2.one(), F2.one()}));
  CHECK_FALSE(span.insert({F2.one(), F2.zero(), F2.one()}));  // sum of previous
  CHECK(span.dim() == 2);
  CHECK(span.contains({F2.one(), F2.zero(), F2.one()}));
  CHECK_FALSE(span.contains({F2.one(), F2.zero(), F2.zero()}));
}
