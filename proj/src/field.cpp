#include "nilpair/field.hpp"

#include <map>
#include <mutex>
#include <stdexcept>
#include <utility>

namespace nilpair {

namespace {

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

// Dense F_p[x] helpers on ascending int coefficient vectors.

void trim(std::vector<int>& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

// f mod g, g monic.
std::vector<int> poly_rem(std::vector<int> f, const std::vector<int>& g, int p) {
  int dg = static_cast<int>(g.size()) - 1;
  trim(f);
  while (static_cast<int>(f.size()) - 1 >= dg) {
    int df = static_cast<int>(f.size()) - 1;
    int c = f[df];
    if (c != 0) {
      for (int i = 0; i <= dg; ++i) {
        int& t = f[df - dg + i];
        t = ((t - c * g[i]) % p + p) % p;
      }
    }
    f.pop_back();
    trim(f);
  }
  return f;
}

uint64_t upow(uint64_t b, int e) {
  uint64_t r = 1;
  for (int i = 0; i < e; ++i) r *= b;
  return r;
}

}  // namespace

Fq::Fq(int p, int m) : p_(p), m_(m) {
  if (!is_prime(p)) throw std::invalid_argument("not prime");
  if (m < 1 || m > 8) throw std::invalid_argument("extension degree out of range [1,8]");
  uint64_t q = upow(static_cast<uint64_t>(p), m);
  if (q > (uint64_t(1) << 16)) throw std::invalid_argument("field order exceeds 2^16");
  q_ = static_cast<uint32_t>(q);

  // Smallest monic irreducible of degree m: scan packed lower-coefficient
  // values ascending, reject anything with a monic factor of degree <= m/2.
  modulus_.assign(m + 1, 0);
  modulus_[m] = 1;
  if (m > 1) {
    bool found = false;
    for (uint64_t v = 0; v < q && !found; ++v) {
      std::vector<int> f(m + 1, 0);
      f[m] = 1;
      uint64_t t = v;
      for (int i = 0; i < m; ++i) {
        f[i] = static_cast<int>(t % p);
        t /= p;
      }
      bool reducible = false;
      for (int d = 1; d <= m / 2 && !reducible; ++d) {
        uint64_t nd = upow(static_cast<uint64_t>(p), d);
        for (uint64_t w = 0; w < nd && !reducible; ++w) {
          std::vector<int> g(d + 1, 0);
          g[d] = 1;
          uint64_t s = w;
          for (int i = 0; i < d; ++i) {
            g[i] = static_cast<int>(s % p);
            s /= p;
          }
          if (poly_rem(f, g, p).empty()) reducible = true;
        }
      }
      if (!reducible) {
        modulus_ = f;
        found = true;
      }
    }
    if (!found) throw std::logic_error("internal error: no irreducible found");
  }
  build_tables();
}

Scalar Fq::element(uint32_t i) const {
  if (i >= q_) throw std::out_of_range("element index out of range");
  return {i};
}

Scalar Fq::from_int(int64_t v) const {
  int64_t r = v % p_;
  if (r < 0) r += p_;
  return {static_cast<uint32_t>(r)};
}

std::vector<int> Fq::coeffs(Scalar a) const {
  std::vector<int> c(m_, 0);
  uint32_t t = a.rep;
  for (int i = 0; i < m_; ++i) {
    c[i] = static_cast<int>(t % p_);
    t /= p_;
  }
  return c;
}

Scalar Fq::from_coeffs(const std::vector<int>& c) const {
  if (static_cast<int>(c.size()) > m_) throw std::invalid_argument("coefficient vector too long");
  uint32_t rep = 0;
  for (int i = static_cast<int>(c.size()) - 1; i >= 0; --i) {
    if (c[i] < 0 || c[i] >= p_) throw std::invalid_argument("coefficient out of [0,p)");
    rep = rep * p_ + static_cast<uint32_t>(c[i]);
  }
  return {rep};
}

Scalar Fq::add_direct(Scalar a, Scalar b) const {
  uint32_t rep = 0, mul = 1, x = a.rep, y = b.rep;
  for (int i = 0; i < m_; ++i) {
    uint32_t d = (x % p_ + y % p_) % p_;
    rep += d * mul;
    mul *= p_;
    x /= p_;
    y /= p_;
  }
  return {rep};
}

Scalar Fq::neg_direct(Scalar a) const {
  uint32_t rep = 0, mul = 1, x = a.rep;
  for (int i = 0; i < m_; ++i) {
    uint32_t d = (p_ - x % p_) % p_;
    rep += d * mul;
    mul *= p_;
    x /= p_;
  }
  return {rep};
}

Scalar Fq::mul_direct(Scalar a, Scalar b) const {
  if (m_ == 1) return {static_cast<uint32_t>((uint64_t(a.rep) * b.rep) % p_)};
  std::vector<int> fa = coeffs(a), fb = coeffs(b);
  std::vector<int> prod(2 * m_ - 1, 0);
  for (int i = 0; i < m_; ++i) {
    if (fa[i] == 0) continue;
    for (int j = 0; j < m_; ++j) prod[i + j] = (prod[i + j] + fa[i] * fb[j]) % p_;
  }
  std::vector<int> r = poly_rem(std::move(prod), modulus_, p_);
  r.resize(m_, 0);
  return from_coeffs(r);
}

Scalar Fq::inv(Scalar a) const {
  if (a.rep == 0) throw std::domain_error("division by zero");
  if (!inv_table_.empty()) return {inv_table_[a.rep]};
  return pow(a, q_ - 2);
}

Scalar Fq::pow(Scalar a, uint64_t e) const {
  Scalar r = one(), base = a;
  while (e) {
    if (e & 1) r = mul(r, base);
    base = mul(base, base);
    e >>= 1;
  }
  return r;
}

void Fq::build_tables() {
  if (q_ > 256) return;
  neg_table_.resize(q_);
  for (uint32_t i = 0; i < q_; ++i) neg_table_[i] = static_cast<uint16_t>(neg_direct({i}).rep);
  if (p_ != 2) {
    add_table_.resize(static_cast<size_t>(q_) * q_);
    for (uint32_t i = 0; i < q_; ++i)
      for (uint32_t j = 0; j < q_; ++j)
        add_table_[i * q_ + j] = static_cast<uint16_t>(add_direct({i}, {j}).rep);
  }
  mul_table_.resize(static_cast<size_t>(q_) * q_);
  for (uint32_t i = 0; i < q_; ++i)
    for (uint32_t j = 0; j < q_; ++j)
      mul_table_[i * q_ + j] = static_cast<uint16_t>(mul_direct({i}, {j}).rep);
  inv_table_.resize(q_);
  inv_table_[0] = 0;
  for (uint32_t i = 1; i < q_; ++i) {
    Scalar v = {i}, r = one();
    uint64_t e = q_ - 2;
    while (e) {
      if (e & 1) r = mul_direct(r, v);
      v = mul_direct(v, v);
      e >>= 1;
    }
    inv_table_[i] = static_cast<uint16_t>(r.rep);
  }
}

std::string Fq::str(Scalar a) const {
  if (m_ == 1) return std::to_string(a.rep);
  std::string s = "[";
  auto c = coeffs(a);
  for (int i = 0; i < m_; ++i) {
    if (i) s += ",";
    s += std::to_string(c[i]);
  }
  return s + "]";
}

const Fq& field_cache(int p, int m) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, Fq> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find({p, m});
  if (it == cache.end()) it = cache.emplace(std::make_pair(p, m), Fq(p, m)).first;
  return it->second;
}

}  // namespace nilpair
