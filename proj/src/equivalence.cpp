#include "nilpair/equivalence.hpp"

#include <sstream>

#include "nilpair/subalgebra.hpp"

namespace nilpair {

HomSpace hom_space(const Mat& A, const Mat& B, const Mat& C, const Mat& D) {
  const Fq& F = A.field();
  if (F != B.field() || F != C.field() || F != D.field())
    throw std::invalid_argument("field mismatch");
  int n = A.rows();
  if (B.rows() != n || C.rows() != n || D.rows() != n)
    throw std::invalid_argument("size mismatch");
  int nn = n * n;
  Mat sys(F, 2 * nn, nn);
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v) {
      int col = u * n + v;
      Mat e = Mat::unit(F, n, u, v);
      Mat r1 = e * A - C * e;
      Mat r2 = e * B - D * e;
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
          sys.at(i * n + j, col) = r1.at(i, j);
          sys.at(nn + i * n + j, col) = r2.at(i, j);
        }
    }
  auto rk = rank_kernel(sys);
  HomSpace out;
  for (const auto& v : rk.kernel) out.basis.push_back(Mat::from_flat(F, n, n, v));
  return out;
}

HomSpace hom_space(const NilpPair& P, const NilpPair& Q) {
  return hom_space(P.A, P.B, Q.A, Q.B);
}

HomSpace hom_space(const CommutingPair& P, const CommutingPair& Q) {
  return hom_space(P.C, P.D, Q.C, Q.D);
}

namespace {

bool verify_witness(const Mat& g, const Mat& A, const Mat& B, const Mat& C,
                    const Mat& D) {
  auto gi = inverse(g);
  if (!gi) return false;
  return g * A * *gi == C && g * B * *gi == D;
}

}  // namespace

ConjugacyResult are_conjugate(const Mat& A, const Mat& B, const Mat& C, const Mat& D,
                              uint64_t seed, const Budgets& budgets) {
  const Fq& F = A.field();
  int n = A.rows();
  ConjugacyResult out;

  // cheap certified-false filters: conjugation invariants
  if (nilpotency_and_type(A).type != nilpotency_and_type(C).type ||
      nilpotency_and_type(B).type != nilpotency_and_type(D).type) {
    out.certified = true;
    out.reason = "jordan-type mismatch";
    return out;
  }
  if (char_poly(A) != char_poly(C) || char_poly(B) != char_poly(D)) {
    out.certified = true;
    out.reason = "char-poly mismatch";
    return out;
  }
  if (algebra_dim({A, B}) != algebra_dim({C, D})) {
    out.certified = true;
    out.reason = "algebra-dim mismatch";
    return out;
  }

  HomSpace h = hom_space(A, B, C, D);
  uint64_t d = h.basis.size();
  if (d == 0) {
    out.certified = true;
    out.reason = "hom space is zero";
    return out;
  }
  uint64_t d_pp = hom_space(A, B, A, B).basis.size();
  uint64_t d_qq = hom_space(C, D, C, D).basis.size();
  if (d != d_pp || d != d_qq) {
    out.certified = true;
    out.reason = "hom-space dimension obstruction";
    return out;
  }

  auto accept = [&](const Mat& g) {
    if (rank_of(g) < n) return false;
    if (!verify_witness(g, A, B, C, D)) return false;
    out.conjugate = true;
    out.certified = true;
    out.witness = g;
    out.reason = "verified witness";
    return true;
  };

  for (const auto& g : h.basis)
    if (accept(g)) return out;

  uint32_t q = F.order();
  Rng rng(seed);
  for (int t = 0; t < 200; ++t) {
    Mat g(F, n, n);
    for (const auto& bmat : h.basis)
      add_scaled_into(g, F.element(static_cast<uint32_t>(rng.below(q))), bmat);
    if (accept(g)) return out;
  }

  long double points = 1.0L;
  for (uint64_t i = 0; i < d; ++i) points *= q;
  if (points <= static_cast<long double>(budgets.enum_cap)) {
    std::vector<uint32_t> digits(d, 0);
    Mat g(F, n, n);
    while (true) {
      if (accept(g)) return out;
      uint64_t pos = 0;
      while (pos < d) {
        Scalar prev = F.element(digits[pos]);
        digits[pos] = (digits[pos] + 1) % q;
        add_scaled_into(g, F.sub(F.element(digits[pos]), prev), h.basis[pos]);
        if (digits[pos] != 0) break;
        ++pos;
      }
      if (pos == d) break;
    }
    out.certified = true;  // exhausted: no invertible intertwiner exists
    out.reason = "exhaustive search found no invertible intertwiner";
    return out;
  }

  out.certified = false;
  out.reason = "sampling found no invertible intertwiner (absence not certified)";
  return out;
}

ConjugacyResult are_conjugate(const NilpPair& P, const NilpPair& Q, uint64_t seed,
                              const Budgets& budgets) {
  if (P.n != Q.n || P.A.field() != Q.A.field())
    throw std::invalid_argument("size mismatch");
  if (P.lambda != Q.lambda) {
    // conjugation preserves [A,B] = lambda I entrywise
    ConjugacyResult out;
    out.certified = true;
    out.reason = "lambda mismatch";
    return out;
  }
  return are_conjugate(P.A, P.B, Q.A, Q.B, seed, budgets);
}

MoritaReport morita_check(const NilpPair& P, const NilpPair& Q, uint64_t seed,
                          const Budgets& budgets) {
  const Fq& F = P.A.field();
  if (F.is_zero(P.lambda) || F.is_zero(Q.lambda))
    throw std::invalid_argument("morita check requires nonzero lambda on both sides");
  MoritaReport rep;
  rep.pair_side = are_conjugate(P, Q, mix_seed(seed, 1), budgets);
  rep.power_side = are_conjugate(P.A.pow(P.p), P.B.pow(P.p), Q.A.pow(Q.p),
                                 Q.B.pow(Q.p), mix_seed(seed, 2), budgets);
  rep.comparable = rep.pair_side.certified && rep.power_side.certified;
  rep.agree = rep.pair_side.conjugate == rep.power_side.conjugate;
  if (rep.comparable && !rep.agree) {
    std::ostringstream os;
    os << "certified conjugacy disagreement: pair-side="
       << (rep.pair_side.conjugate ? "conjugate" : "not conjugate") << " ("
       << rep.pair_side.reason << "), power-side="
       << (rep.power_side.conjugate ? "conjugate" : "not conjugate") << " ("
       << rep.power_side.reason << "); n=" << P.n << " q=" << F.order();
    throw falsification_error(os.str());
  }
  return rep;
}

}  // namespace nilpair
