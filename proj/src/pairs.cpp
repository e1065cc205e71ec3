#include "nilpair/pairs.hpp"

#include <algorithm>
#include <stdexcept>

#include "nilpair/subalgebra.hpp"

namespace nilpair {

NilpPair checked_pair(Mat A, Mat B, Scalar lambda) {
  if (A.rows() != A.cols() || B.rows() != B.cols() || A.rows() != B.rows())
    throw pair_invariant_error("shape");
  if (A.field() != B.field()) throw pair_invariant_error("field-match");
  const Fq& F = A.field();
  int n = A.rows();
  int p = F.characteristic();
  if (!is_nilpotent(A)) throw pair_invariant_error("nilpotency(A)");
  if (!is_nilpotent(B)) throw pair_invariant_error("nilpotency(B)");
  Mat c = commutator(A, B);
  Mat expect = Mat::identity(F, n).scaled(lambda);
  if (c != expect) throw pair_invariant_error("commutator");
  int r = 0;
  if (!F.is_zero(lambda)) {
    if (n % p != 0) throw pair_invariant_error("trace-obstruction");
    r = n / p;
  }
  NilpPair P;
  P.A = std::move(A);
  P.B = std::move(B);
  P.lambda = lambda;
  P.n = n;
  P.p = p;
  P.r = r;
  return P;
}

NilpPair standard_pair(const Fq& F, Scalar lambda) {
  if (F.is_zero(lambda)) throw std::invalid_argument("use commuting constructors");
  int p = F.characteristic();
  Mat A = Mat::jordan_block(F, p);
  Mat B(F, p, p);
  for (int i = 1; i < p; ++i) B.at(i - 1, i) = F.mul(lambda, F.from_int(-i));
  return checked_pair(std::move(A), std::move(B), lambda);
}

Mat cyclic_commuting_partner(const Mat& L) {
  const Fq& F = L.field();
  if (!is_nilpotent(L)) throw std::invalid_argument("L not nilpotent");
  int n = L.rows();
  auto ch = jordan_chains(L);
  int s = static_cast<int>(ch.chains.size());
  Mat P = chain_basis(F, ch);
  Mat M_j(F, n, n);
  // chain block offsets
  std::vector<int> off(s + 1, 0);
  for (int c = 0; c < s; ++c) off[c + 1] = off[c] + ch.heights[c];
  for (int c = 0; c + 1 < s; ++c)
    for (int j = 0; j < ch.heights[c]; ++j)
      if (j < ch.heights[c + 1]) M_j.at(off[c + 1] + j, off[c] + j) = F.one();
  Mat M = P * M_j * *inverse(P);
  if (!commutator(L, M).is_zero()) throw std::logic_error("internal error: partner fails to commute");
  if (!is_nilpotent(M)) throw std::logic_error("internal error: partner not nilpotent");
  return M;
}

NilpPair build_pair(const Mat& C, const Mat& D, Scalar lambda) {
  const Fq& F = C.field();
  if (F != D.field()) throw std::invalid_argument("field mismatch");
  if (C.rows() != C.cols() || D.rows() != D.cols() || C.rows() != D.rows())
    throw std::invalid_argument("C, D must be square of equal size");
  if (F.is_zero(lambda)) throw std::invalid_argument("lambda must be nonzero");
  if (!is_nilpotent(C)) throw std::invalid_argument("C not nilpotent");
  if (!is_nilpotent(D)) throw std::invalid_argument("D not nilpotent");
  if (!commutator(C, D).is_zero()) throw std::invalid_argument("[C,D] != 0");

  int p = F.characteristic();
  int r = C.rows();
  int n = p * r;
  auto idx = [r](int block, int v) { return block * r + v; };  // e_{block+1} (x) v

  Mat A(F, n, n), B(F, n, n);
  for (int b = 0; b < p; ++b)
    for (int v = 0; v < r; ++v) {
      if (b + 1 < p) {
        A.at(idx(b + 1, v), idx(b, v)) = F.one();
      } else {
        for (int w = 0; w < r; ++w) A.at(idx(0, w), idx(b, v)) = C.at(w, v);
      }
      if (b > 0) {
        Scalar coef = F.mul(lambda, F.from_int(-b));
        B.at(idx(b - 1, v), idx(b, v)) = F.add(B.at(idx(b - 1, v), idx(b, v)), coef);
      }
      for (int w = 0; w < r; ++w)
        B.at(idx(b, w), idx(b, v)) = F.add(B.at(idx(b, w), idx(b, v)), D.at(w, v));
    }

  NilpPair P = checked_pair(std::move(A), std::move(B), lambda);

  // claimed identities of the block model
  Mat Ap = P.A.pow(p), Bp = P.B.pow(p), Dp = D.pow(p);
  for (int b = 0; b < p; ++b)
    for (int v = 0; v < r; ++v)
      for (int b2 = 0; b2 < p; ++b2)
        for (int w = 0; w < r; ++w) {
          Scalar ea = b == b2 ? C.at(w, v) : F.zero();
          Scalar eb = b == b2 ? Dp.at(w, v) : F.zero();
          if (Ap.at(idx(b2, w), idx(b, v)) != ea)
            throw std::logic_error("internal error: A^p != I (x) C");
          if (Bp.at(idx(b2, w), idx(b, v)) != eb)
            throw std::logic_error("internal error: B^p != I (x) D^p");
        }
  return P;
}

NilpPair good_pair(const Fq& F, int r, Scalar lambda) {
  if (r < 1) throw std::invalid_argument("r must be >= 1");
  Mat Jr = Mat::jordan_block(F, r);
  NilpPair P = build_pair(Jr, Jr, lambda);
  if (!is_good(P)) throw std::logic_error("internal error: constructed pair is not good");
  return P;
}

bool is_good(const NilpPair& P) {
  const Fq& F = P.A.field();
  if (F.is_zero(P.lambda)) return false;
  int dim = algebra_dim({P.A.pow(P.p), P.B.pow(P.p)});
  if (dim > P.r)
    throw falsification_error(
        "dim k[A^p,B^p] = " + std::to_string(dim) + " exceeds r = " + std::to_string(P.r) +
        " (violates the two-generated commutative bound in the block model)");
  return dim == P.r;
}

PartnerSearch exists_partner(const Mat& A, Scalar lambda, uint64_t seed,
                             const Budgets& budgets) {
  const Fq& F = A.field();
  if (!is_nilpotent(A)) throw std::invalid_argument("A not nilpotent");
  if (F.is_zero(lambda)) throw std::invalid_argument("lambda must be nonzero");
  int n = A.rows();
  int nn = n * n;

  // ad_A on coordinate space; columns indexed by matrix units.
  Mat sys(F, nn, nn);
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v) {
      Mat c = commutator(A, Mat::unit(F, n, u, v));
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) sys.at(i * n + j, u * n + v) = c.at(i, j);
    }
  std::vector<Scalar> rhs(nn, F.zero());
  for (int i = 0; i < n; ++i) rhs[i * n + i] = lambda;

  PartnerSearch out;
  auto x0 = solve(sys, rhs);
  if (!x0) return out;
  out.solvable = true;
  auto rk = rank_kernel(sys);
  uint64_t d = rk.kernel.size();
  out.space_dim = d;

  Mat base = Mat::from_flat(F, n, n, *x0);
  std::vector<Mat> dirs;
  for (const auto& k : rk.kernel) dirs.push_back(Mat::from_flat(F, n, n, k));

  auto verify = [&](const Mat& W) {
    return is_nilpotent(W) &&
           commutator(A, W) == Mat::identity(F, n).scaled(lambda);
  };

  uint32_t q = F.order();
  long double points = 1.0L;
  for (uint64_t i = 0; i < d; ++i) points *= q;
  if (points <= static_cast<long double>(budgets.enum_cap)) {
    // odometer over field-coefficient tuples
    std::vector<uint32_t> digits(d, 0);
    Mat X = base;
    out.exhaustive = true;
    while (true) {
      if (verify(X)) {
        out.witness = X;
        break;
      }
      uint64_t pos = 0;
      while (pos < d) {
        Scalar prev = F.element(digits[pos]);
        digits[pos] = (digits[pos] + 1) % q;
        Scalar cur = F.element(digits[pos]);
        add_scaled_into(X, F.sub(cur, prev), dirs[pos]);
        if (digits[pos] != 0) break;
        ++pos;
      }
      if (pos == d) break;
    }
  } else {
    Rng rng(seed);
    for (uint64_t t = 0; t < budgets.sample_budget && !out.witness; ++t) {
      Mat X = base;
      for (uint64_t i = 0; i < d; ++i)
        add_scaled_into(X, F.element(static_cast<uint32_t>(rng.below(q))), dirs[i]);
      if (verify(X)) out.witness = X;
    }
  }
  return out;
}

std::vector<Mat> centralizing_upper_basis(const Mat& A) {
  const Fq& F = A.field();
  int n = A.rows();
  auto ch = jordan_chains(A);
  int s = static_cast<int>(ch.chains.size());
  std::vector<int> off(s + 1, 0);
  for (int c = 0; c < s; ++c) off[c + 1] = off[c] + ch.heights[c];
  Mat P = chain_basis(F, ch);
  Mat Pinv = *inverse(P);
  Mat Aj = Pinv * A * P;

  // unknowns: entries in strictly-upper chain blocks
  std::vector<std::pair<int, int>> coords;
  for (int bu = 0; bu < s; ++bu)
    for (int bv = bu + 1; bv < s; ++bv)
      for (int i = off[bu]; i < off[bu + 1]; ++i)
        for (int j = off[bv]; j < off[bv + 1]; ++j) coords.push_back({i, j});
  if (coords.empty()) return {};

  int nn = n * n;
  Mat sys(F, nn, static_cast<int>(coords.size()));
  for (size_t c = 0; c < coords.size(); ++c) {
    Mat e = Mat::unit(F, n, coords[c].first, coords[c].second);
    Mat com = commutator(Aj, e);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) sys.at(i * n + j, static_cast<int>(c)) = com.at(i, j);
  }
  auto rk = rank_kernel(sys);
  std::vector<Mat> out;
  for (const auto& k : rk.kernel) {
    Mat Cj(F, n, n);
    for (size_t c = 0; c < coords.size(); ++c) Cj.at(coords[c].first, coords[c].second) = k[c];
    Mat C = P * Cj * Pinv;
    if (!commutator(A, C).is_zero())
      throw std::logic_error("internal error: upper perturbation fails to centralize");
    out.push_back(std::move(C));
  }
  return out;
}

NilpPair perturb_centralizing(const NilpPair& P, const Mat& C) {
  if (!commutator(P.A, C).is_zero()) throw std::invalid_argument("[A,C] != 0");
  return checked_pair(P.A, P.B + C, P.lambda);
}

NilpPair perturb_poly_in_a(const NilpPair& P, Scalar b, const std::vector<Scalar>& f) {
  const Fq& F = P.A.field();
  if (F.is_zero(b)) throw std::invalid_argument("b must be nonzero");
  if (jordan_type(P.A).parts != std::vector<int>{P.n})
    throw std::invalid_argument("poly-in-A perturbation requires A regular nilpotent");
  Mat fa(F, P.n, P.n);
  Mat pw = Mat::identity(F, P.n);
  for (const auto& c : f) {
    pw = pw * P.A;  // starts at A: f(0) = 0 by construction
    add_scaled_into(fa, c, pw);
  }
  return checked_pair(P.A, P.B.scaled(b) + fa, F.mul(b, P.lambda));
}

NilpPair perturb_pair(const NilpPair& P, PerturbMode mode, uint64_t seed) {
  const Fq& F = P.A.field();
  Rng rng(seed);
  const int kMaxAttempts = 100;
  if (mode == PerturbMode::CentralizingUpper) {
    auto basis = centralizing_upper_basis(P.A);
    for (int t = 0; t < kMaxAttempts; ++t) {
      Mat C(F, P.n, P.n);
      for (const auto& bmat : basis)
        add_scaled_into(C, F.element(static_cast<uint32_t>(rng.below(F.order()))), bmat);
      try {
        return perturb_centralizing(P, C);
      } catch (const pair_invariant_error&) {
        // perturbed B lost nilpotency; resample
      }
    }
    throw std::runtime_error("perturbation failed after 100 attempts");
  }
  for (int t = 0; t < kMaxAttempts; ++t) {
    Scalar b = F.element(1 + static_cast<uint32_t>(rng.below(F.order() - 1)));
    std::vector<Scalar> f(P.n - 1, F.zero());
    for (auto& c : f) c = F.element(static_cast<uint32_t>(rng.below(F.order())));
    try {
      return perturb_poly_in_a(P, b, f);
    } catch (const pair_invariant_error&) {
      // resample
    }
  }
  throw std::runtime_error("perturbation failed after 100 attempts");
}

std::vector<std::vector<int>> partitions_of(int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int rem, int maxpart) -> void {
    if (rem == 0) {
      out.push_back(cur);
      return;
    }
    for (int k = std::min(rem, maxpart); k >= 1; --k) {
      cur.push_back(k);
      self(self, rem - k, k);
      cur.pop_back();
    }
  };
  rec(rec, n, n);
  return out;
}

}  // namespace nilpair
