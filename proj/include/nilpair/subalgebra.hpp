#pragma once

#include <vector>

#include "nilpair/matrix.hpp"

namespace nilpair {

// Basis of the unital subalgebra generated by a matrix set, plus the
// generators it came from. basis always contains the identity's span and is
// closed under multiplication by every generator on both sides.
struct AlgebraSpan {
  std::vector<Mat> basis;
  std::vector<Mat> generators;
  bool closed = false;
};

// Smallest unital subalgebra of M_n containing gens. Iterated closure:
// start from {I} u gens, left-multiply the current basis by generators and
// keep products that grow the span; a final audit confirms right products
// land in the span too.
AlgebraSpan algebra_span(const Fq& F, int n, const std::vector<Mat>& gens);
AlgebraSpan algebra_span(const std::vector<Mat>& gens);  // gens nonempty
int algebra_dim(const std::vector<Mat>& gens);

// Basis of {X : [X,s] = 0 for all s in gens}, the kernel of the stacked
// commutator maps on coordinate space. Every returned element is re-checked.
std::vector<Mat> centralizer_basis(const Fq& F, int n, const std::vector<Mat>& gens);
std::vector<Mat> centralizer_basis(const std::vector<Mat>& gens);
int centralizer_dim(const std::vector<Mat>& gens);

// Dimension of the smallest subspace containing v and stable under every
// generator (the submodule generated by v).
int module_span_dim(const std::vector<Mat>& gens, const std::vector<Scalar>& v);

}  // namespace nilpair
