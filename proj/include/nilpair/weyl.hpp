#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "nilpair/matrix.hpp"

namespace nilpair {
namespace weyl {

// Element of the first Weyl algebra k<x,y>/(xy - yx - 1) in normal form:
// a finite sum of monomials x^i y^j with nonzero coefficients. Equality is
// equality of term maps.
class Element {
 public:
  explicit Element(const Fq& F) : F_(&F) {}
  static Element zero(const Fq& F) { return Element(F); }
  static Element one(const Fq& F) { return monomial(F, 0, 0, F.one()); }
  static Element monomial(const Fq& F, int i, int j, Scalar c);
  static Element gen_x(const Fq& F) { return monomial(F, 1, 0, F.one()); }
  static Element gen_y(const Fq& F) { return monomial(F, 0, 1, F.one()); }

  const Fq& field() const { return *F_; }
  const std::map<std::pair<int, int>, Scalar>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(int i, int j, Scalar c);  // accumulates, drops zeros

  friend Element operator+(const Element& u, const Element& v);
  friend Element operator-(const Element& u, const Element& v);
  friend Element operator*(const Element& u, const Element& v);
  friend bool operator==(const Element& u, const Element& v) {
    return u.terms_ == v.terms_;
  }
  friend bool operator!=(const Element& u, const Element& v) { return !(u == v); }

  Element scaled(Scalar c) const;
  Element pow(int e) const;
  std::string str() const;

 private:
  const Fq* F_;
  std::map<std::pair<int, int>, Scalar> terms_;
};

Element commutator(const Element& u, const Element& v);  // uv - vu

// x and y generate, so u is central iff it commutes with both.
bool is_central_against_generators(const Element& u);

// Finite-dimensional truncation W / (x^{p^a}, y^{p^a})W over F_p: monomial
// basis x^i y^j with 0 <= i,j < p^a, multiplication inherited from the
// normal-form product followed by dropping any monomial with an exponent
// >= p^a. dim = p^{2a}.
class Truncated {
 public:
  Truncated(const Fq& F, int a);  // F prime; 1 <= a <= 2; p <= 3 when a = 2

  int p() const { return p_; }
  int level() const { return a_; }
  int cap() const { return cap_; }  // p^a
  int dim() const { return dim_; }  // p^{2a}
  const Fq& field() const { return *F_; }

  int index(int i, int j) const { return i * cap_ + j; }
  std::pair<int, int> exponents(int idx) const { return {idx / cap_, idx % cap_}; }

  using Vec = std::vector<Scalar>;  // coefficients on the monomial basis
  Vec zero() const { return Vec(dim_, F_->zero()); }
  Vec basis_vec(int idx) const;
  Vec from_element(const Element& e) const;  // truncates
  Vec mul(const Vec& u, const Vec& v) const;
  Vec add(const Vec& u, const Vec& v) const;
  Vec sub(const Vec& u, const Vec& v) const;

 private:
  const Fq* F_;
  int p_, a_, cap_, dim_;
  std::vector<Scalar> table_;  // structure constants, dim^3
};

struct Check {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct CheckReport {
  std::vector<Check> checks;
  bool all_pass = true;
  void add(const std::string& name, bool pass, const std::string& detail = "");
};

// Certifies the matrix-algebra structure of the truncation.
//
// Level 1: builds the p-dimensional representation x -> raising shift,
// y -> -d/dt on k[t]/(t^p), checks the defining relation, nilpotency of the
// images, that monomials map homomorphically, and that the image spans the
// full p x p matrix algebra -- together with dim = p^2 this pins the
// truncation as M_p(k).
//
// Level 2: checks dim = p^2 * dim(center image) and that the p^2 monomials
// x^i y^j (i,j < p) are a free basis over the image of the center.
CheckReport verify_matrix_structure(const Truncated& T);

}  // namespace weyl
}  // namespace nilpair
