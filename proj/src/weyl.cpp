#include "nilpair/weyl.hpp"

#include <stdexcept>

#include "nilpair/subalgebra.hpp"

namespace nilpair {
namespace weyl {

Element Element::monomial(const Fq& F, int i, int j, Scalar c) {
  Element e(F);
  e.add_term(i, j, c);
  return e;
}

void Element::add_term(int i, int j, Scalar c) {
  if (i < 0 || j < 0) throw std::invalid_argument("negative exponent");
  if (F_->is_zero(c)) return;
  auto key = std::make_pair(i, j);
  auto it = terms_.find(key);
  if (it == terms_.end()) {
    terms_.emplace(key, c);
  } else {
    it->second = F_->add(it->second, c);
    if (F_->is_zero(it->second)) terms_.erase(it);
  }
}

Element operator+(const Element& u, const Element& v) {
  Element r = u;
  for (const auto& [e, c] : v.terms_) r.add_term(e.first, e.second, c);
  return r;
}

Element operator-(const Element& u, const Element& v) {
  Element r = u;
  for (const auto& [e, c] : v.terms_) r.add_term(e.first, e.second, v.F_->neg(c));
  return r;
}

Element Element::scaled(Scalar c) const {
  Element r(*F_);
  for (const auto& [e, coef] : terms_) r.add_term(e.first, e.second, F_->mul(coef, c));
  return r;
}

namespace {

// (x^a y^b) * x in normal form: x^{a+1} y^b - b x^a y^{b-1}, the defining
// relation y x = x y - 1 pushed through y^b.
void append_x(const Fq& F, std::map<std::pair<int, int>, Scalar>& terms) {
  std::map<std::pair<int, int>, Scalar> next;
  auto acc = [&](int i, int j, Scalar c) {
    if (F.is_zero(c)) return;
    auto key = std::make_pair(i, j);
    auto it = next.find(key);
    if (it == next.end())
      next.emplace(key, c);
    else {
      it->second = F.add(it->second, c);
      if (F.is_zero(it->second)) next.erase(it);
    }
  };
  for (const auto& [e, c] : terms) {
    acc(e.first + 1, e.second, c);
    if (e.second > 0) acc(e.first, e.second - 1, F.mul(c, F.neg(F.from_int(e.second))));
  }
  terms = std::move(next);
}

}  // namespace

Element operator*(const Element& u, const Element& v) {
  if (*u.F_ != *v.F_) throw std::invalid_argument("field mismatch");
  const Fq& F = *u.F_;
  Element out(F);
  for (const auto& [eu, cu] : u.terms_) {
    for (const auto& [ev, cv] : v.terms_) {
      // x^{i1} y^{j1} x^{i2} y^{j2}: commute y^{j1} past x^{i2} one x at a time
      std::map<std::pair<int, int>, Scalar> mid;
      mid.emplace(std::make_pair(0, eu.second), F.one());
      for (int t = 0; t < ev.first; ++t) append_x(F, mid);
      Scalar c = F.mul(cu, cv);
      for (const auto& [em, cm] : mid)
        out.add_term(eu.first + em.first, ev.second + em.second, F.mul(c, cm));
    }
  }
  return out;
}

Element Element::pow(int e) const {
  Element r = one(*F_);
  for (int i = 0; i < e; ++i) r = r * *this;
  return r;
}

std::string Element::str() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& [e, c] : terms_) {
    if (!s.empty()) s += " + ";
    s += F_->str(c);
    if (e.first) s += "*x^" + std::to_string(e.first);
    if (e.second) s += "*y^" + std::to_string(e.second);
  }
  return s;
}

Element commutator(const Element& u, const Element& v) { return u * v - v * u; }

bool is_central_against_generators(const Element& u) {
  const Fq& F = u.field();
  return commutator(u, Element::gen_x(F)).is_zero() &&
         commutator(u, Element::gen_y(F)).is_zero();
}

Truncated::Truncated(const Fq& F, int a) : F_(&F), a_(a) {
  if (F.degree() != 1) throw std::invalid_argument("truncation requires a prime field");
  if (a < 1 || a > 2) throw std::invalid_argument("truncation level out of range [1,2]");
  p_ = F.characteristic();
  if (a == 2 && p_ > 3) throw std::invalid_argument("level 2 truncation supported for p <= 3 only");
  cap_ = 1;
  for (int i = 0; i < a; ++i) cap_ *= p_;
  dim_ = cap_ * cap_;

  table_.assign(static_cast<size_t>(dim_) * dim_ * dim_, F.zero());
  for (int u = 0; u < dim_; ++u) {
    auto [i1, j1] = exponents(u);
    for (int v = 0; v < dim_; ++v) {
      auto [i2, j2] = exponents(v);
      Element prod = Element::monomial(F, i1, j1, F.one()) *
                     Element::monomial(F, i2, j2, F.one());
      Scalar* row = &table_[(static_cast<size_t>(u) * dim_ + v) * dim_];
      for (const auto& [e, c] : prod.terms()) {
        if (e.first >= cap_ || e.second >= cap_) continue;  // truncated away
        row[index(e.first, e.second)] = c;
      }
    }
  }
}

Truncated::Vec Truncated::basis_vec(int idx) const {
  Vec v = zero();
  v[idx] = F_->one();
  return v;
}

Truncated::Vec Truncated::from_element(const Element& e) const {
  Vec v = zero();
  for (const auto& [ex, c] : e.terms()) {
    if (ex.first >= cap_ || ex.second >= cap_) continue;
    v[index(ex.first, ex.second)] = F_->add(v[index(ex.first, ex.second)], c);
  }
  return v;
}

Truncated::Vec Truncated::mul(const Vec& u, const Vec& v) const {
  Vec out = zero();
  for (int a = 0; a < dim_; ++a) {
    if (F_->is_zero(u[a])) continue;
    for (int b = 0; b < dim_; ++b) {
      if (F_->is_zero(v[b])) continue;
      Scalar c = F_->mul(u[a], v[b]);
      const Scalar* row = &table_[(static_cast<size_t>(a) * dim_ + b) * dim_];
      for (int k = 0; k < dim_; ++k)
        if (!F_->is_zero(row[k])) out[k] = F_->add(out[k], F_->mul(c, row[k]));
    }
  }
  return out;
}

Truncated::Vec Truncated::add(const Vec& u, const Vec& v) const {
  Vec out = u;
  for (int k = 0; k < dim_; ++k) out[k] = F_->add(out[k], v[k]);
  return out;
}

Truncated::Vec Truncated::sub(const Vec& u, const Vec& v) const {
  Vec out = u;
  for (int k = 0; k < dim_; ++k) out[k] = F_->sub(out[k], v[k]);
  return out;
}

void CheckReport::add(const std::string& name, bool pass, const std::string& detail) {
  checks.push_back({name, pass, detail});
  all_pass = all_pass && pass;
}

namespace {

// Standard p-dimensional representation on k[t]/(t^p):
// x acts as multiplication by t (raising shift), y as -d/dt.
void standard_rep(const Fq& F, int p, Mat& X, Mat& Y) {
  X = Mat::jordan_block(F, p);
  Y = Mat(F, p, p);
  for (int i = 1; i < p; ++i) Y.at(i - 1, i) = F.neg(F.from_int(i));
}

}  // namespace

CheckReport verify_matrix_structure(const Truncated& T) {
  const Fq& F = T.field();
  int p = T.p();
  CheckReport rep;

  if (T.level() == 1) {
    Mat X(F, p, p), Y(F, p, p);
    standard_rep(F, p, X, Y);
    rep.add("defining relation [rho(x),rho(y)] = I",
            nilpair::commutator(X, Y) == Mat::identity(F, p));
    rep.add("rho(x)^p = rho(y)^p = 0", X.pow(p).is_zero() && Y.pow(p).is_zero());
    rep.add("quotient dimension = p^2", T.dim() == p * p,
            "dim = " + std::to_string(T.dim()));

    // rho is multiplicative on every pair of basis monomials, so it factors
    // through the truncation.
    bool hom = true;
    std::vector<Mat> images(T.dim(), Mat(F, p, p));
    for (int idx = 0; idx < T.dim(); ++idx) {
      auto [i, j] = T.exponents(idx);
      images[idx] = X.pow(i) * Y.pow(j);
    }
    for (int u = 0; u < T.dim() && hom; ++u)
      for (int v = 0; v < T.dim() && hom; ++v) {
        auto prod = T.mul(T.basis_vec(u), T.basis_vec(v));
        Mat expect(F, p, p);
        for (int k = 0; k < T.dim(); ++k)
          if (!F.is_zero(prod[k])) add_scaled_into(expect, prod[k], images[k]);
        if (images[u] * images[v] != expect) hom = false;
      }
    rep.add("monomial products map homomorphically", hom);

    int span = algebra_dim({X, Y});
    rep.add("image spans all of M_p", span == p * p,
            "span dimension = " + std::to_string(span));

    // p^2 basis monomials are independent in the truncation by construction;
    // checked anyway on the coefficient vectors.
    EchelonSpan es(F, T.dim());
    bool indep = true;
    for (int idx = 0; idx < T.dim(); ++idx)
      if (!es.insert(T.basis_vec(idx))) indep = false;
    rep.add("monomials x^i y^j independent", indep);
    return rep;
  }

  // Level 2: free of rank p^2 over the image of the center.
  int cap = T.cap();           // p^2
  int e = (cap / p) * (cap / p);  // dim of the center image p^{2(a-1)}
  rep.add("quotient dimension = p^{2a}", T.dim() == cap * cap,
          "dim = " + std::to_string(T.dim()));
  rep.add("dimension = p^2 * dim(center image)", T.dim() == p * p * e);

  std::vector<Truncated::Vec> center;
  for (int u = 0; u < cap / p; ++u)
    for (int v = 0; v < cap / p; ++v) center.push_back(T.basis_vec(T.index(p * u, p * v)));

  bool central = true;
  auto xv = T.basis_vec(T.index(1, 0));
  auto yv = T.basis_vec(T.index(0, 1));
  for (const auto& z : center) {
    if (T.sub(T.mul(z, xv), T.mul(xv, z)) != T.zero()) central = false;
    if (T.sub(T.mul(z, yv), T.mul(yv, z)) != T.zero()) central = false;
  }
  rep.add("center images commute with x and y", central);

  // products z * x^i y^j for i,j < p must be a basis of the truncation
  EchelonSpan es(F, T.dim());
  int rank = 0;
  for (const auto& z : center)
    for (int i = 0; i < p; ++i)
      for (int j = 0; j < p; ++j) {
        auto prod = T.mul(z, T.basis_vec(T.index(i, j)));
        if (es.insert(prod)) ++rank;
      }
  rep.add("monomials x^i y^j free over center image", rank == T.dim(),
          "free-span rank = " + std::to_string(rank));
  return rep;
}

}  // namespace weyl
}  // namespace nilpair
