#include "nilpair/matrix.hpp"

#include <algorithm>
#include <stdexcept>

namespace nilpair {

namespace {

void require(bool cond, const char* msg) {
  if (!cond) throw std::invalid_argument(msg);
}

void check_same_field(const Mat& x, const Mat& y) {
  require(x.field() == y.field(), "field mismatch");
}

}  // namespace

Mat Mat::identity(const Fq& F, int n) {
  Mat m(F, n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = F.one();
  return m;
}

Mat Mat::jordan_block(const Fq& F, int n) {
  Mat m(F, n, n);
  for (int i = 0; i + 1 < n; ++i) m.at(i + 1, i) = F.one();
  return m;
}

Mat Mat::jordan_rep(const Fq& F, const std::vector<int>& parts) {
  int n = 0;
  for (int s : parts) {
    require(s > 0, "partition parts must be positive");
    n += s;
  }
  Mat m(F, n, n);
  int off = 0;
  for (int s : parts) {
    for (int i = 0; i + 1 < s; ++i) m.at(off + i + 1, off + i) = F.one();
    off += s;
  }
  return m;
}

Mat Mat::unit(const Fq& F, int n, int r, int c) {
  Mat m(F, n, n);
  m.at(r, c) = F.one();
  return m;
}

Mat Mat::scaled(Scalar c) const {
  Mat r = *this;
  for (auto& x : r.a_) x = F_->mul(x, c);
  return r;
}

Mat Mat::transposed() const {
  Mat r(*F_, cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
  return r;
}

Mat Mat::pow(uint64_t e) const {
  require(rows_ == cols_, "pow requires a square matrix");
  Mat r = identity(*F_, rows_), base = *this;
  while (e) {
    if (e & 1) r = r * base;
    if (e >>= 1) base = base * base;
  }
  return r;
}

Scalar Mat::trace() const {
  require(rows_ == cols_, "trace requires a square matrix");
  Scalar t = F_->zero();
  for (int i = 0; i < rows_; ++i) t = F_->add(t, at(i, i));
  return t;
}

bool Mat::is_zero() const {
  for (auto x : a_)
    if (x.rep != 0) return false;
  return true;
}

bool Mat::is_identity() const {
  if (rows_ != cols_) return false;
  return *this == identity(*F_, rows_);
}

bool Mat::is_scalar(Scalar* c) const {
  if (rows_ != cols_) return false;
  Scalar d = at(0, 0);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j)
      if (at(i, j) != (i == j ? d : F_->zero())) return false;
  if (c) *c = d;
  return true;
}

Mat Mat::from_flat(const Fq& F, int rows, int cols, const std::vector<Scalar>& v) {
  require(static_cast<size_t>(rows) * cols == v.size(), "flat size mismatch");
  Mat m(F, rows, cols);
  m.a_ = v;
  return m;
}

Mat operator+(const Mat& x, const Mat& y) {
  check_same_field(x, y);
  require(x.rows_ == y.rows_ && x.cols_ == y.cols_, "shape mismatch");
  Mat r = x;
  for (size_t i = 0; i < r.a_.size(); ++i) r.a_[i] = x.F_->add(x.a_[i], y.a_[i]);
  return r;
}

Mat operator-(const Mat& x, const Mat& y) {
  check_same_field(x, y);
  require(x.rows_ == y.rows_ && x.cols_ == y.cols_, "shape mismatch");
  Mat r = x;
  for (size_t i = 0; i < r.a_.size(); ++i) r.a_[i] = x.F_->sub(x.a_[i], y.a_[i]);
  return r;
}

Mat operator*(const Mat& x, const Mat& y) {
  Mat r;
  mul_into(r, x, y);
  return r;
}

void mul_into(Mat& dst, const Mat& x, const Mat& y) {
  check_same_field(x, y);
  require(x.cols_ == y.rows_, "shape mismatch");
  const Fq& F = *x.F_;
  Mat r(F, x.rows_, y.cols_);
  for (int i = 0; i < x.rows_; ++i) {
    for (int k = 0; k < x.cols_; ++k) {
      Scalar v = x.at(i, k);
      if (v.rep == 0) continue;
      const Scalar* yrow = &y.a_[static_cast<size_t>(k) * y.cols_];
      Scalar* rrow = &r.a_[static_cast<size_t>(i) * y.cols_];
      for (int j = 0; j < y.cols_; ++j) rrow[j] = F.add(rrow[j], F.mul(v, yrow[j]));
    }
  }
  dst = std::move(r);
}

void add_scaled_into(Mat& dst, Scalar c, const Mat& y) {
  require(dst.rows_ == y.rows_ && dst.cols_ == y.cols_, "shape mismatch");
  const Fq& F = *dst.F_;
  if (c.rep == 0) return;
  for (size_t i = 0; i < dst.a_.size(); ++i)
    dst.a_[i] = F.add(dst.a_[i], F.mul(c, y.a_[i]));
}

bool operator==(const Mat& x, const Mat& y) {
  if (x.rows_ != y.rows_ || x.cols_ != y.cols_) return false;
  if ((x.F_ == nullptr) != (y.F_ == nullptr)) return false;
  if (x.F_ && *x.F_ != *y.F_) return false;
  for (size_t i = 0; i < x.a_.size(); ++i)
    if (x.a_[i] != y.a_[i]) return false;
  return true;
}

Mat commutator(const Mat& a, const Mat& b) {
  require(a.rows() == a.cols() && b.rows() == b.cols() && a.rows() == b.rows(),
          "commutator requires square matrices of equal size");
  check_same_field(a, b);
  return a * b - b * a;
}

namespace {

// Row-reduce an explicit grid in place; returns pivot columns.
std::vector<int> rref(std::vector<std::vector<Scalar>>& g, const Fq& F) {
  int rows = static_cast<int>(g.size());
  int cols = rows ? static_cast<int>(g[0].size()) : 0;
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int sel = -1;
    for (int i = r; i < rows; ++i)
      if (g[i][c].rep != 0) {
        sel = i;
        break;
      }
    if (sel < 0) continue;
    std::swap(g[r], g[sel]);
    Scalar pivinv = F.inv(g[r][c]);
    for (int j = 0; j < cols; ++j) g[r][j] = F.mul(g[r][j], pivinv);
    for (int i = 0; i < rows; ++i) {
      if (i == r || g[i][c].rep == 0) continue;
      Scalar f = g[i][c];
      for (int j = 0; j < cols; ++j) g[i][j] = F.sub(g[i][j], F.mul(f, g[r][j]));
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

std::vector<std::vector<Scalar>> grid_of(const Mat& a) {
  std::vector<std::vector<Scalar>> g(a.rows(), std::vector<Scalar>(a.cols()));
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) g[i][j] = a.at(i, j);
  return g;
}

}  // namespace

RankKernel rank_kernel(const Mat& a) {
  const Fq& F = a.field();
  auto g = grid_of(a);
  auto pivots = rref(g, F);
  RankKernel out;
  out.rank = static_cast<int>(pivots.size());
  std::vector<bool> is_pivot(a.cols(), false);
  for (int c : pivots) is_pivot[c] = true;
  for (int c = 0; c < a.cols(); ++c) {
    if (is_pivot[c]) continue;
    std::vector<Scalar> v(a.cols(), F.zero());
    v[c] = F.one();
    for (size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = F.neg(g[r][c]);
    out.kernel.push_back(std::move(v));
  }
  return out;
}

int rank_of(const Mat& a) {
  auto g = grid_of(a);
  return static_cast<int>(rref(g, a.field()).size());
}

std::optional<std::vector<Scalar>> solve(const Mat& a, const std::vector<Scalar>& b) {
  require(static_cast<int>(b.size()) == a.rows(), "rhs size mismatch");
  const Fq& F = a.field();
  std::vector<std::vector<Scalar>> g(a.rows(), std::vector<Scalar>(a.cols() + 1));
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) g[i][j] = a.at(i, j);
    g[i][a.cols()] = b[i];
  }
  auto pivots = rref(g, F);
  if (!pivots.empty() && pivots.back() == a.cols()) return std::nullopt;
  std::vector<Scalar> x(a.cols(), F.zero());
  for (size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = g[r][a.cols()];
  return x;
}

std::optional<Mat> inverse(const Mat& a) {
  require(a.rows() == a.cols(), "inverse requires a square matrix");
  const Fq& F = a.field();
  int n = a.rows();
  std::vector<std::vector<Scalar>> g(n, std::vector<Scalar>(2 * n, F.zero()));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) g[i][j] = a.at(i, j);
    g[i][n + i] = F.one();
  }
  auto pivots = rref(g, F);
  if (static_cast<int>(pivots.size()) < n) return std::nullopt;
  Mat inv(F, n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inv.at(i, j) = g[i][n + j];
  return inv;
}

std::vector<Scalar> mat_vec(const Mat& a, const std::vector<Scalar>& v) {
  require(static_cast<int>(v.size()) == a.cols(), "vector size mismatch");
  const Fq& F = a.field();
  std::vector<Scalar> r(a.rows(), F.zero());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j)
      if (a.at(i, j).rep != 0 && v[j].rep != 0)
        r[i] = F.add(r[i], F.mul(a.at(i, j), v[j]));
  return r;
}

std::vector<Scalar> char_poly(const Mat& a) {
  require(a.rows() == a.cols(), "char_poly requires a square matrix");
  const Fq& F = a.field();
  int n = a.rows();
  auto h = grid_of(a);

  // Similarity reduction to upper Hessenberg form.
  for (int k = 0; k + 2 < n; ++k) {
    int piv = -1;
    for (int i = k + 1; i < n; ++i)
      if (h[i][k].rep != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != k + 1) {
      std::swap(h[piv], h[k + 1]);
      for (int i = 0; i < n; ++i) std::swap(h[i][piv], h[i][k + 1]);
    }
    Scalar pinv = F.inv(h[k + 1][k]);
    for (int i = k + 2; i < n; ++i) {
      if (h[i][k].rep == 0) continue;
      Scalar f = F.mul(h[i][k], pinv);
      for (int j = 0; j < n; ++j) h[i][j] = F.sub(h[i][j], F.mul(f, h[k + 1][j]));
      for (int j = 0; j < n; ++j) h[j][k + 1] = F.add(h[j][k + 1], F.mul(f, h[j][i]));
    }
  }

  // p_k(t) = det(t I_k - H_k) via expansion along the last column.
  std::vector<std::vector<Scalar>> p(n + 1);
  p[0] = {F.one()};
  for (int k = 1; k <= n; ++k) {
    std::vector<Scalar> cur(k + 1, F.zero());
    // (t - h[k-1][k-1]) * p[k-1]
    for (int i = 0; i < k; ++i) {
      cur[i + 1] = F.add(cur[i + 1], p[k - 1][i]);
      cur[i] = F.sub(cur[i], F.mul(h[k - 1][k - 1], p[k - 1][i]));
    }
    Scalar subprod = F.one();
    for (int i = k - 2; i >= 0; --i) {
      // chain of subdiagonal entries h[i+1][i] * ... * h[k-1][k-2]
      subprod = F.mul(subprod, h[i + 1][i]);
      Scalar coef = F.mul(h[i][k - 1], subprod);
      if (coef.rep == 0) continue;
      for (int j = 0; j <= i; ++j) cur[j] = F.sub(cur[j], F.mul(coef, p[i][j]));
    }
    p[k] = std::move(cur);
  }
  return p[n];
}

namespace {

struct FieldOps {
  const Fq& F;
  using T = Scalar;
  T zero() const { return F.zero(); }
  T one() const { return F.one(); }
  T add(T a, T b) const { return F.add(a, b); }
  T mul(T a, T b) const { return F.mul(a, b); }
  T neg(T a) const { return F.neg(a); }
};

struct DualOps {
  const Fq& F;
  using T = DualScalar;
  T zero() const { return {F.zero(), F.zero()}; }
  T one() const { return {F.one(), F.zero()}; }
  T add(T a, T b) const { return {F.add(a.val, b.val), F.add(a.der, b.der)}; }
  T mul(T a, T b) const {
    return {F.mul(a.val, b.val),
            F.add(F.mul(a.val, b.der), F.mul(a.der, b.val))};
  }
  T neg(T a) const { return {F.neg(a.val), F.neg(a.der)}; }
};

// Berkowitz: char poly over any commutative ring, no divisions.
// Returns coefficients ascending (result[n] = 1).
template <class Ops>
std::vector<typename Ops::T> berkowitz(const std::vector<typename Ops::T>& g,
                                       int n, const Ops& op) {
  using T = typename Ops::T;
  auto at = [&](int i, int j) { return g[static_cast<size_t>(i) * n + j]; };
  std::vector<T> c = {op.one()};  // descending coefficients, leading first
  for (int r = 1; r <= n; ++r) {
    std::vector<T> t(r + 1, op.zero());
    t[0] = op.one();
    t[1] = op.neg(at(r - 1, r - 1));
    if (r >= 2) {
      std::vector<T> v(r - 1);
      for (int i = 0; i < r - 1; ++i) v[i] = at(i, r - 1);
      for (int k = 2; k <= r; ++k) {
        T dot = op.zero();
        for (int i = 0; i < r - 1; ++i) dot = op.add(dot, op.mul(at(r - 1, i), v[i]));
        t[k] = op.neg(dot);
        if (k < r) {
          std::vector<T> nv(r - 1, op.zero());
          for (int i = 0; i < r - 1; ++i)
            for (int j = 0; j < r - 1; ++j) nv[i] = op.add(nv[i], op.mul(at(i, j), v[j]));
          v = std::move(nv);
        }
      }
    }
    std::vector<T> nc(r + 1, op.zero());
    for (int i = 0; i <= r; ++i)
      for (int j = 0; j < static_cast<int>(c.size()) && j <= i; ++j)
        nc[i] = op.add(nc[i], op.mul(t[i - j], c[j]));
    c = std::move(nc);
  }
  std::reverse(c.begin(), c.end());
  return c;
}

}  // namespace

std::vector<Scalar> char_poly_berkowitz(const Mat& a) {
  require(a.rows() == a.cols(), "char_poly requires a square matrix");
  return berkowitz(a.flatten(), a.rows(), FieldOps{a.field()});
}

std::vector<DualScalar> dual_char_poly(const Mat& a, const Mat& dir) {
  require(a.rows() == a.cols() && dir.rows() == dir.cols() && a.rows() == dir.rows(),
          "dual_char_poly requires square matrices of equal size");
  require(a.field() == dir.field(), "field mismatch");
  int n = a.rows();
  std::vector<DualScalar> g(static_cast<size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      g[static_cast<size_t>(i) * n + j] = {a.at(i, j), dir.at(i, j)};
  return berkowitz(g, n, DualOps{a.field()});
}

bool is_nilpotent(const Mat& a) {
  require(a.rows() == a.cols(), "nilpotency requires a square matrix");
  Mat pw = a;
  int covered = 1;
  while (covered < a.rows()) {
    if (pw.is_zero()) return true;
    pw = pw * pw;
    covered *= 2;
  }
  return pw.is_zero();
}

NilpotencyInfo nilpotency_and_type(const Mat& a) {
  NilpotencyInfo info;
  if (!is_nilpotent(a)) return info;
  info.nilpotent = true;
  int n = a.rows();
  std::vector<int> ranks = {n};  // r_k = rank(a^k)
  Mat pw = Mat::identity(a.field(), n);
  while (ranks.back() > 0) {
    pw = pw * a;
    ranks.push_back(rank_of(pw));
  }
  ranks.push_back(0);
  for (int k = static_cast<int>(ranks.size()) - 2; k >= 1; --k) {
    int mult = ranks[k - 1] - 2 * ranks[k] + ranks[k + 1];
    for (int i = 0; i < mult; ++i) info.type.parts.push_back(k);
  }
  std::sort(info.type.parts.rbegin(), info.type.parts.rend());
  return info;
}

JordanType jordan_type(const Mat& a) {
  auto info = nilpotency_and_type(a);
  require(info.nilpotent, "jordan_type requires a nilpotent matrix");
  return info.type;
}

void EchelonSpan::reduce(std::vector<Scalar>& v) const {
  for (size_t r = 0; r < rows_.size(); ++r) {
    Scalar f = v[pivots_[r]];
    if (f.rep == 0) continue;
    for (int j = 0; j < width_; ++j) v[j] = F_->sub(v[j], F_->mul(f, rows_[r][j]));
  }
}

bool EchelonSpan::insert(std::vector<Scalar> v) {
  if (static_cast<int>(v.size()) != width_) throw std::invalid_argument("width mismatch");
  reduce(v);
  int piv = -1;
  for (int j = 0; j < width_; ++j)
    if (v[j].rep != 0) {
      piv = j;
      break;
    }
  if (piv < 0) return false;
  Scalar inv = F_->inv(v[piv]);
  for (int j = 0; j < width_; ++j) v[j] = F_->mul(v[j], inv);
  for (size_t r = 0; r < rows_.size(); ++r) {
    Scalar f = rows_[r][piv];
    if (f.rep == 0) continue;
    for (int j = 0; j < width_; ++j) rows_[r][j] = F_->sub(rows_[r][j], F_->mul(f, v[j]));
  }
  size_t pos = 0;
  while (pos < pivots_.size() && pivots_[pos] < piv) ++pos;
  rows_.insert(rows_.begin() + pos, std::move(v));
  pivots_.insert(pivots_.begin() + pos, piv);
  return true;
}

bool EchelonSpan::contains(std::vector<Scalar> v) const {
  reduce(v);
  for (auto x : v)
    if (x.rep != 0) return false;
  return true;
}

JordanChains jordan_chains(const Mat& a) {
  const Fq& F = a.field();
  int n = a.rows();
  require(a.rows() == a.cols(), "jordan_chains requires a square matrix");
  require(is_nilpotent(a), "jordan_chains requires a nilpotent matrix");

  // Kernel bases of successive powers.
  std::vector<std::vector<std::vector<Scalar>>> ker(1);  // ker[0] = {}
  Mat pw = a;
  int d = 0;
  while (true) {
    auto rk = rank_kernel(pw);
    ker.push_back(rk.kernel);
    ++d;
    if (rk.rank == 0) break;
    pw = pw * a;
  }

  JordanChains out;
  std::vector<std::pair<std::vector<Scalar>, int>> starters;  // (vector, height)
  for (int k = d; k >= 1; --k) {
    EchelonSpan span(F, n);
    for (const auto& v : ker[k - 1]) span.insert(v);
    for (const auto& [w, h] : starters) {
      // image of the higher chain at level k
      std::vector<Scalar> img = w;
      for (int t = 0; t < h - k; ++t) img = mat_vec(a, img);
      span.insert(img);
    }
    for (const auto& u : ker[k]) {
      if (span.insert(u)) starters.push_back({u, k});
    }
  }
  std::stable_sort(starters.begin(), starters.end(),
                   [](const auto& x, const auto& y) { return x.second > y.second; });
  for (const auto& [w, h] : starters) {
    std::vector<std::vector<Scalar>> chain = {w};
    for (int j = 1; j < h; ++j) chain.push_back(mat_vec(a, chain.back()));
    out.chains.push_back(std::move(chain));
    out.heights.push_back(h);
  }
  // The chain vectors must form a basis.
  EchelonSpan all(F, n);
  int count = 0;
  for (const auto& c : out.chains)
    for (const auto& v : c) {
      if (!all.insert(v)) throw std::logic_error("internal error: jordan chains not independent");
      ++count;
    }
  if (count != n) throw std::logic_error("internal error: jordan chains do not span");
  return out;
}

Mat chain_basis(const Fq& F, const JordanChains& ch) {
  int n = 0;
  for (const auto& c : ch.chains) n += static_cast<int>(c.size());
  Mat P(F, n, n);
  int col = 0;
  for (const auto& c : ch.chains)
    for (const auto& v : c) {
      for (int i = 0; i < n; ++i) P.at(i, col) = v[i];
      ++col;
    }
  return P;
}

Mat apply(const Mat& a, const std::vector<Scalar>& v, Scalar scale) {
  const Fq& F = a.field();
  Mat col(F, a.rows(), 1);
  auto r = mat_vec(a, v);
  for (int i = 0; i < a.rows(); ++i) col.at(i, 0) = F.mul(r[i], scale);
  return col;
}

}  // namespace nilpair
