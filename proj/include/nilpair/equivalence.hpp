#pragma once

#include <optional>
#include <string>

#include "nilpair/pairs.hpp"

namespace nilpair {

// Intertwiners S with S A = C S and S B = D S between the pairs (A,B) and
// (C,D); invertible elements are exactly the conjugations carrying one pair
// to the other.
struct HomSpace {
  std::vector<Mat> basis;
};

HomSpace hom_space(const Mat& A, const Mat& B, const Mat& C, const Mat& D);
HomSpace hom_space(const NilpPair& P, const NilpPair& Q);
HomSpace hom_space(const CommutingPair& P, const CommutingPair& Q);

// Tri-state conjugacy answer. "certified" means the verdict is backed by a
// proof object: a verified witness, an invariant mismatch, a Hom-space
// dimension obstruction, or an exhausted search. When certified is false the
// only honest reading of conjugate=false is "no witness found".
struct ConjugacyResult {
  bool conjugate = false;
  bool certified = false;
  std::optional<Mat> witness;
  std::string reason;
};

// Two-step decision: cheap conjugation invariants (Jordan types of both
// coordinates, generated-algebra dimension), then Hom-space dimensions,
// then a witness hunt (basis elements, seeded random combinations, full
// enumeration when q^dim <= budgets.enum_cap).
ConjugacyResult are_conjugate(const Mat& A, const Mat& B, const Mat& C, const Mat& D,
                              uint64_t seed = 0, const Budgets& budgets = {});
// Adds the lambda-equality filter (conjugation preserves the commutator).
ConjugacyResult are_conjugate(const NilpPair& P, const NilpPair& Q,
                              uint64_t seed = 0, const Budgets& budgets = {});

struct MoritaReport {
  ConjugacyResult pair_side;   // (A,B) ~ (C,D)
  ConjugacyResult power_side;  // (A^p,B^p) ~ (C^p,D^p)
  bool comparable = false;     // both sides certified
  bool agree = false;          // flags equal (meaningful when comparable)
};

// Evaluates pair conjugacy against p-th power conjugacy. A certified
// disagreement falsifies the Morita criterion and raises
// falsification_error with a diagnostic dump.
MoritaReport morita_check(const NilpPair& P, const NilpPair& Q,
                          uint64_t seed = 0, const Budgets& budgets = {});

}  // namespace nilpair
