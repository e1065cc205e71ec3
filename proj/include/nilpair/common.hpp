#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>

namespace nilpair {

// Raised when a run produces evidence *against* one of the structural
// claims this suite probes (a certified conjugacy disagreement, a
// two-generated commutative subalgebra above the Gerstenhaber bound, ...).
// The CLI maps it to exit status 1 so CI can gate on it.
class falsification_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Enumeration / sampling budgets shared by witness searches and the census.
struct Budgets {
  uint64_t enum_cap = uint64_t(1) << 20;  // max points visited exhaustively
  uint64_t sample_budget = 100000;        // draws when a space exceeds enum_cap
};

// Deterministic RNG wrapper. mt19937_64's raw output sequence is pinned by
// the standard, and no std::*_distribution (whose output is not pinned) is
// used anywhere, so seeded runs reproduce bit-for-bit across toolchains.
class Rng {
 public:
  explicit Rng(uint64_t seed) : gen_(seed) {}

  uint64_t next() { return gen_(); }

  // Uniform on [0, n) by rejection.
  uint64_t below(uint64_t n) {
    if (n == 0) throw std::invalid_argument("Rng::below(0)");
    uint64_t limit = ~uint64_t(0) - (~uint64_t(0) % n);
    uint64_t v;
    do {
      v = gen_();
    } while (v >= limit);
    return v % n;
  }

 private:
  std::mt19937_64 gen_;
};

// splitmix64 finalizer; derives independent per-cell streams from a master
// seed so results do not depend on work scheduling.
inline uint64_t mix_seed(uint64_t master, uint64_t stream) {
  uint64_t z = master + 0x9e3779b97f4a7c15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace nilpair
