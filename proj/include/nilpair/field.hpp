#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace nilpair {

// Element of GF(p^m) in polynomial representation, packed base p:
// rep = c0 + c1*p + ... + c_{m-1}*p^{m-1} with 0 <= ci < p.
// A Scalar is only meaningful relative to the Fq that produced it.
struct Scalar {
  uint32_t rep = 0;
};

inline bool operator==(Scalar a, Scalar b) { return a.rep == b.rep; }
inline bool operator!=(Scalar a, Scalar b) { return a.rep != b.rep; }
inline bool operator<(Scalar a, Scalar b) { return a.rep < b.rep; }

// The finite field GF(p^m), q = p^m.
//
// The modulus is the smallest monic irreducible of degree m over F_p
// (candidates ordered by their packed coefficient value, leading
// coefficient excluded), so every run on every machine constructs the
// same field and produces comparable counts.
//
// Supported range: p prime, 1 <= m <= 8, q <= 2^16. Arithmetic is exact;
// for q <= 256 multiplication and inversion go through precomputed tables.
//
// Immutable after construction and safe to share across threads.
class Fq {
 public:
  Fq(int p, int m = 1);

  int characteristic() const { return p_; }
  int degree() const { return m_; }
  uint32_t order() const { return q_; }
  // Monic modulus, coefficients ascending, length m+1, last entry 1.
  const std::vector<int>& modulus() const { return modulus_; }

  Scalar zero() const { return {0}; }
  Scalar one() const { return {1}; }
  bool is_zero(Scalar a) const { return a.rep == 0; }

  // i-th element of the fixed enumeration order: 0, 1, then the remaining
  // packed representations ascending. index() is its inverse.
  Scalar element(uint32_t i) const;
  uint32_t index(Scalar a) const { return a.rep; }

  // Image of an integer under Z -> F_p c GF(p^m).
  Scalar from_int(int64_t v) const;
  std::vector<int> coeffs(Scalar a) const;
  Scalar from_coeffs(const std::vector<int>& c) const;

  Scalar add(Scalar a, Scalar b) const {
    if (p_ == 2) return {a.rep ^ b.rep};
    if (!add_table_.empty()) return {add_table_[a.rep * q_ + b.rep]};
    return add_direct(a, b);
  }
  Scalar neg(Scalar a) const {
    if (p_ == 2) return a;
    if (!neg_table_.empty()) return {neg_table_[a.rep]};
    return neg_direct(a);
  }
  Scalar sub(Scalar a, Scalar b) const { return add(a, neg(b)); }
  Scalar mul(Scalar a, Scalar b) const {
    if (!mul_table_.empty()) return {mul_table_[a.rep * q_ + b.rep]};
    return mul_direct(a, b);
  }
  Scalar inv(Scalar a) const;
  Scalar pow(Scalar a, uint64_t e) const;
  Scalar frobenius(Scalar a) const { return pow(a, static_cast<uint64_t>(p_)); }

  std::string str(Scalar a) const;

  friend bool operator==(const Fq& x, const Fq& y) {
    return x.p_ == y.p_ && x.m_ == y.m_;
  }
  friend bool operator!=(const Fq& x, const Fq& y) { return !(x == y); }

 private:
  int p_ = 0, m_ = 0;
  uint32_t q_ = 0;
  std::vector<int> modulus_;
  std::vector<uint16_t> add_table_, mul_table_, neg_table_, inv_table_;

  Scalar add_direct(Scalar a, Scalar b) const;
  Scalar neg_direct(Scalar a) const;
  Scalar mul_direct(Scalar a, Scalar b) const;
  void build_tables();
};

// Canonical shared context per (p, m); the returned reference stays valid
// for the life of the process. Matrices keep plain pointers to their field,
// so long-lived structures (loaded pairs, reports) should use this.
const Fq& field_cache(int p, int m = 1);

}  // namespace nilpair
