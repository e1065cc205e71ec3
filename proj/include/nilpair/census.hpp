#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "nilpair/pairs.hpp"

namespace nilpair {

// X: nilpotent pairs with scalar commutator (any lambda);
// Y: the subset with lambda != 0; D: commuting nilpotent pairs.
enum class Variety { X, Y, D };
std::string variety_name(Variety v);
Variety variety_from(const std::string& s);

enum class LambdaMode { All, Zero, Nonzero };

// Exact counts can exceed 64 bits at the top of the supported range.
using Count = unsigned __int128;
std::string count_str(Count c);

struct CountEntry {
  Count count = 0;
  std::string method;       // "brute" | "class-exact" | "class-sampled"
  long double radius = 0;   // 95% confidence radius, 0 when exact
};

// One stratum of the class decomposition: a Jordan type for the first
// coordinate crossed with a lambda range (zero, or one nonzero value whose
// count is multiplied by q-1 via the scaling symmetry (A,B,l) -> (A,cB,cl)).
struct CellReport {
  std::vector<int> type;
  bool lambda_zero = true;
  Count class_size = 0;
  Count inner = 0;          // nilpotent solutions above one representative
  uint64_t multiplier = 1;  // 1 or q-1
  bool solvable = false;
  bool exact = true;
  long double inner_radius = 0;
  uint64_t space_dim = 0;
};

// Fine-Herstein: the number of nilpotent n x n matrices over F_q.
Count nilpotent_count_closed_form(int n, uint32_t q);

// Literal enumeration of the definition. Guarded by the equivalent-work
// bound q^(2n^2) <= 2^26.
Count brute_count(Variety v, int n, const Fq& F);

// Sum over Jordan types of class size times the nilpotent-solution count of
// the linear system [A,B] = lambda I above one representative. Cells run
// concurrently with per-cell seeds derived from `seed`; results do not
// depend on scheduling. The all-ones type at lambda = 0 uses the closed
// form. Guarded to n <= 6, q <= 4.
CountEntry class_count(Variety v, int n, const Fq& F, LambdaMode mode,
                       const Budgets& budgets, uint64_t seed,
                       std::vector<CellReport>* cells = nullptr);

// Conjugacy class size of the nilpotent with the given Jordan type:
// |GL_n(F_q)| divided by the centralizer unit-group order
// q^(D-T) * prod_j prod_{t<=m_j} (q^t - 1), D = sum of squared conjugate
// parts, T = sum_j m_j(m_j+1)/2.
Count class_size_of(const std::vector<int>& type, const Fq& F);

struct DimFit {
  double fitted = 0;
  double residual = 0;      // max deviation of a single ratio from the mean
  bool flagged = false;     // residual > 0.15
  std::vector<double> ratios;
};

// Exponent fit log(N2/N1)/log(q2/q1) over consecutive field sizes,
// averaged. Needs >= 2 nonzero counts.
DimFit estimate_dimension(const std::vector<std::pair<uint32_t, Count>>& counts);

struct TangentReport {
  int n = 0;
  int ambient = 0;        // 2n^2 + 1
  int jacobian_rank = 0;
  int tangent_dim = 0;    // ambient - rank
};

// Exact Jacobian at (A,B,lambda) of the defining equations: the n lower
// characteristic-polynomial coefficients of A and of B (nilpotency) and the
// n^2 entries of [A,B] - lambda I. Nilpotency rows come from dual-number
// lifts, commutator rows from bilinearity.
TangentReport tangent_report(const NilpPair& P);

struct FiberCounts {
  uint32_t q = 0;
  Count fixed_lambda = 0;  // preimage points with one fixed lambda
  Count all_lambda = 0;    // lambda ranging over nonzero values
};

struct FiberReport {
  int c_power = 0;          // dim centralizer of {A^p, B^p}
  int c_pair = 0;           // dim centralizer of {A, B}
  int difference = 0;
  int expected_difference = 0;  // p^2 r - r
  int expected_c_pair = 0;      // r
  bool dims_ok = false;
  std::vector<FiberCounts> counts;
  std::optional<DimFit> fixed_fit, all_fit;
};

// Centralizer-difference computation at a good pair.
FiberReport fiber_report(const NilpPair& P);

// Additionally counts the preimage of (A^p, B^p) under (A,B) -> (A^p,B^p)
// inside the lambda != 0 locus, per field size, with the observed growth
// exponents. Requires A^p = B^p = 0 so the target transfers between fields.
FiberReport fiber_report_all_lambda(const NilpPair& P, const std::vector<uint32_t>& qs,
                                    const Budgets& budgets, uint64_t seed);

}  // namespace nilpair
