#pragma once

#include <optional>
#include <vector>

#include "nilpair/field.hpp"

namespace nilpair {

// Dense matrix over a finite field. The field context is held by pointer
// and must outlive the matrix (use field_cache() for long-lived values).
// All binary operations require matching field and compatible shapes.
class Mat {
 public:
  Mat() = default;
  Mat(const Fq& F, int rows, int cols)
      : F_(&F), rows_(rows), cols_(cols),
        a_(static_cast<size_t>(rows) * cols, F.zero()) {}

  static Mat identity(const Fq& F, int n);
  // Single nilpotent Jordan block: e_i -> e_{i+1} (ones on the subdiagonal).
  static Mat jordan_block(const Fq& F, int n);
  // Block diagonal of Jordan blocks with the given part sizes.
  static Mat jordan_rep(const Fq& F, const std::vector<int>& parts);
  static Mat unit(const Fq& F, int n, int r, int c);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const Fq& field() const { return *F_; }

  Scalar at(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }
  Scalar& at(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }

  Mat scaled(Scalar c) const;
  Mat transposed() const;
  Mat pow(uint64_t e) const;
  Scalar trace() const;
  bool is_zero() const;
  bool is_identity() const;
  // True iff the matrix equals c*I; writes c when requested.
  bool is_scalar(Scalar* c = nullptr) const;

  std::vector<Scalar> flatten() const { return a_; }
  static Mat from_flat(const Fq& F, int rows, int cols, const std::vector<Scalar>& v);

  friend Mat operator+(const Mat& x, const Mat& y);
  friend Mat operator-(const Mat& x, const Mat& y);
  friend Mat operator*(const Mat& x, const Mat& y);
  friend bool operator==(const Mat& x, const Mat& y);
  friend bool operator!=(const Mat& x, const Mat& y) { return !(x == y); }

  friend void mul_into(Mat& dst, const Mat& x, const Mat& y);
  friend void add_scaled_into(Mat& dst, Scalar c, const Mat& y);

 private:
  const Fq* F_ = nullptr;
  int rows_ = 0, cols_ = 0;
  std::vector<Scalar> a_;
};

Mat commutator(const Mat& a, const Mat& b);  // ab - ba

// Row reduction products.
struct RankKernel {
  int rank = 0;
  std::vector<std::vector<Scalar>> kernel;  // basis of the right null space
};
RankKernel rank_kernel(const Mat& a);
int rank_of(const Mat& a);
// Particular solution of a x = b, or nullopt when b is outside the column space.
std::optional<std::vector<Scalar>> solve(const Mat& a, const std::vector<Scalar>& b);
std::optional<Mat> inverse(const Mat& a);
Mat apply(const Mat& a, const std::vector<Scalar>& v, Scalar scale);  // helper a*v as column
std::vector<Scalar> mat_vec(const Mat& a, const std::vector<Scalar>& v);

// det(tI - A), coefficients ascending; result[n] == 1. Hessenberg reduction
// followed by the leading-minor recurrence; the only divisions are by field
// pivots, so it is valid in any characteristic.
std::vector<Scalar> char_poly(const Mat& a);
// Same polynomial by the Berkowitz algorithm (division-free). Kept as an
// independent route for cross-checks.
std::vector<Scalar> char_poly_berkowitz(const Mat& a);

// Nilpotency via a^n = 0 (equivalent to char_poly = t^n by Cayley-Hamilton),
// computed with repeated squaring.
bool is_nilpotent(const Mat& a);

struct JordanType {
  std::vector<int> parts;  // weakly decreasing, sums to n
  friend bool operator==(const JordanType& x, const JordanType& y) { return x.parts == y.parts; }
  friend bool operator!=(const JordanType& x, const JordanType& y) { return !(x == y); }
};

struct NilpotencyInfo {
  bool nilpotent = false;
  JordanType type;  // empty unless nilpotent
};

// Jordan type from the rank sequence r_k = rank(a^k): the number of blocks
// of size k is r_{k-1} - 2 r_k + r_{k+1}.
NilpotencyInfo nilpotency_and_type(const Mat& a);
JordanType jordan_type(const Mat& a);  // requires nilpotent

// Element of F[eps]/(eps^2).
struct DualScalar {
  Scalar val, der;
};

// char_poly of a + eps*dir over F[eps]/(eps^2); the eps-parts are the exact
// directional derivatives of the coefficients. Berkowitz, since dual numbers
// with nilpotent value part have no inverses to pivot with.
std::vector<DualScalar> dual_char_poly(const Mat& a, const Mat& dir);

// Incrementally maintained reduced echelon basis of a subspace of F^width.
class EchelonSpan {
 public:
  EchelonSpan(const Fq& F, int width) : F_(&F), width_(width) {}
  // Inserts v; returns true when the dimension grew.
  bool insert(std::vector<Scalar> v);
  bool contains(std::vector<Scalar> v) const;
  int dim() const { return static_cast<int>(rows_.size()); }

 private:
  const Fq* F_;
  int width_;
  std::vector<std::vector<Scalar>> rows_;
  std::vector<int> pivots_;
  void reduce(std::vector<Scalar>& v) const;
};

// Jordan chain decomposition of a nilpotent matrix: chains[c][j] = a^j w_c,
// ordered by weakly decreasing chain length. The concatenation of all chain
// vectors is a basis in which a becomes jordan_rep of its type.
struct JordanChains {
  std::vector<std::vector<std::vector<Scalar>>> chains;
  std::vector<int> heights;
};
JordanChains jordan_chains(const Mat& a);
// Basis matrix whose columns are the chain vectors in order.
Mat chain_basis(const Fq& F, const JordanChains& ch);

}  // namespace nilpair
