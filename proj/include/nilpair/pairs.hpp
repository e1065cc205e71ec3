#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nilpair/common.hpp"
#include "nilpair/matrix.hpp"

namespace nilpair {

// A point of the scalar-commutator variety: A, B nilpotent with
// [A,B] = lambda * I. When lambda != 0 the characteristic divides n
// (trace of a commutator vanishes) and r = n/p; otherwise r = 0.
struct NilpPair {
  Mat A, B;
  Scalar lambda;
  int n = 0;
  int p = 0;
  int r = 0;
};

struct CommutingPair {
  Mat C, D;  // nilpotent, [C,D] = 0
};

// Thrown by pair validation; what() names the violated clause
// ("nilpotency(A)", "commutator", "trace-obstruction", ...).
class pair_invariant_error : public std::runtime_error {
 public:
  explicit pair_invariant_error(const std::string& clause)
      : std::runtime_error(clause) {}
};

// Re-checks every invariant and fills the derived fields; all constructors
// below route their output through this.
NilpPair checked_pair(Mat A, Mat B, Scalar lambda);

// The p x p pair A = raising shift, B(e_i) = -lambda*(i-1)*e_{i-1}, with
// [A,B] = lambda*I and A^p = B^p = 0. F may be any field of characteristic
// p; the pair size is p. lambda must be nonzero.
NilpPair standard_pair(const Fq& F, Scalar lambda);

// A nilpotent M commuting with L such that k[L,M] has dimension r and the
// natural module is generated by the leading Jordan-chain vector of L:
// M sends L^j w_i -> L^j w_{i+1} across chains of weakly decreasing length
// and annihilates the last chain.
Mat cyclic_commuting_partner(const Mat& L);

// Block model on k^p (x) k^r for commuting nilpotent r x r inputs:
//   A(e_i (x) v) = e_{i+1} (x) v  (i < p),   A(e_p (x) v) = e_1 (x) Cv,
//   B = B_sh + I (x) D,   B_sh(e_i (x) v) = -lambda*(i-1)*e_{i-1} (x) v.
// Then [A,B] = lambda*I, A^p = I (x) C, B^p = I (x) D^p; everything is
// re-verified on construction.
NilpPair build_pair(const Mat& C, const Mat& D, Scalar lambda);

// build_pair(J_r, J_r, lambda): k[A^p,B^p] = k[I (x) J_r] has dimension
// exactly r, so the output is good, and A is regular nilpotent.
NilpPair good_pair(const Fq& F, int r, Scalar lambda);

// lambda != 0 and dim k[A^p,B^p] = r. Raises falsification_error if the
// dimension ever exceeds r (Gerstenhaber bound at size r via the block form).
bool is_good(const NilpPair& P);

struct PartnerSearch {
  bool solvable = false;          // the linear system [A,X] = lambda*I has a solution
  uint64_t space_dim = 0;         // affine solution space dimension when solvable
  std::optional<Mat> witness;     // a *nilpotent* solution, when one was found
  bool exhaustive = false;        // witness search covered the whole space
};

// Decides solvability of [A,X] = lambda*I exactly, then looks for a
// nilpotent witness: full enumeration when q^dim <= budgets.enum_cap,
// otherwise seeded sampling. Absence of a witness is certified only when
// exhaustive is true.
PartnerSearch exists_partner(const Mat& A, Scalar lambda, uint64_t seed = 0,
                             const Budgets& budgets = {});

enum class PerturbMode { CentralizingUpper, PolyInA };

// Deterministic cores. perturb_centralizing needs [A,C] = 0; the
// poly-in-A variant needs A regular nilpotent, b != 0 and f(0) = 0
// (f given by coefficients of t, t^2, ... ) and rescales lambda to
// b*lambda.
NilpPair perturb_centralizing(const NilpPair& P, const Mat& C);
NilpPair perturb_poly_in_a(const NilpPair& P, Scalar b, const std::vector<Scalar>& f);

// Seeded wrapper; resamples (<= 100 attempts) when the perturbed second
// coordinate fails nilpotency.
NilpPair perturb_pair(const NilpPair& P, PerturbMode mode, uint64_t seed);

// Basis of {C : [A,C] = 0, C strictly upper with respect to the Jordan
// chain block decomposition of A}, expressed in the original coordinates.
std::vector<Mat> centralizing_upper_basis(const Mat& A);

// All partitions of n, descending-lex order.
std::vector<std::vector<int>> partitions_of(int n);

}  // namespace nilpair
