#include "nilpair/subalgebra.hpp"

#include <stdexcept>

namespace nilpair {

namespace {

void check_gens(const Fq& F, int n, const std::vector<Mat>& gens) {
  for (const auto& g : gens) {
    if (g.rows() != n || g.cols() != n) throw std::invalid_argument("generator shape mismatch");
    if (g.field() != F) throw std::invalid_argument("generator field mismatch");
  }
}

}  // namespace

AlgebraSpan algebra_span(const Fq& F, int n, const std::vector<Mat>& gens) {
  check_gens(F, n, gens);
  AlgebraSpan out;
  out.generators = gens;
  EchelonSpan span(F, n * n);
  std::vector<Mat> basis;
  auto push = [&](const Mat& m) {
    if (span.insert(m.flatten())) basis.push_back(m);
  };
  push(Mat::identity(F, n));
  for (const auto& g : gens) push(g);
  // Left products of generators reach every word when seeded with I.
  for (size_t i = 0; i < basis.size(); ++i) {
    for (const auto& g : gens) push(g * basis[i]);
  }
  // Two-sided closure audit.
  out.closed = true;
  for (const auto& b : basis)
    for (const auto& g : gens)
      if (!span.contains((b * g).flatten())) out.closed = false;
  if (!out.closed) throw std::logic_error("internal error: span not right-closed");
  out.basis = std::move(basis);
  return out;
}

AlgebraSpan algebra_span(const std::vector<Mat>& gens) {
  if (gens.empty()) throw std::invalid_argument("empty generator list needs explicit field/size");
  return algebra_span(gens[0].field(), gens[0].rows(), gens);
}

int algebra_dim(const std::vector<Mat>& gens) {
  return static_cast<int>(algebra_span(gens).basis.size());
}

std::vector<Mat> centralizer_basis(const Fq& F, int n, const std::vector<Mat>& gens) {
  check_gens(F, n, gens);
  int nn = n * n;
  int rows = static_cast<int>(gens.size()) * nn;
  if (gens.empty()) {
    std::vector<Mat> all;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) all.push_back(Mat::unit(F, n, i, j));
    return all;
  }
  Mat sys(F, rows, nn);
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v) {
      int col = u * n + v;
      Mat e = Mat::unit(F, n, u, v);
      for (size_t s = 0; s < gens.size(); ++s) {
        Mat c = commutator(e, gens[s]);
        for (int i = 0; i < n; ++i)
          for (int j = 0; j < n; ++j)
            sys.at(static_cast<int>(s) * nn + i * n + j, col) = c.at(i, j);
      }
    }
  auto rk = rank_kernel(sys);
  std::vector<Mat> out;
  for (const auto& v : rk.kernel) {
    Mat m = Mat::from_flat(F, n, n, v);
    for (const auto& g : gens)
      if (!commutator(m, g).is_zero())
        throw std::logic_error("internal error: centralizer element fails to centralize");
    out.push_back(std::move(m));
  }
  return out;
}

std::vector<Mat> centralizer_basis(const std::vector<Mat>& gens) {
  if (gens.empty()) throw std::invalid_argument("empty generator list needs explicit field/size");
  return centralizer_basis(gens[0].field(), gens[0].rows(), gens);
}

int centralizer_dim(const std::vector<Mat>& gens) {
  return static_cast<int>(centralizer_basis(gens).size());
}

int module_span_dim(const std::vector<Mat>& gens, const std::vector<Scalar>& v) {
  if (gens.empty()) throw std::invalid_argument("module_span_dim needs generators");
  const Fq& F = gens[0].field();
  int n = gens[0].rows();
  EchelonSpan span(F, n);
  std::vector<std::vector<Scalar>> work;
  if (span.insert(v)) work.push_back(v);
  for (size_t i = 0; i < work.size(); ++i) {
    for (const auto& g : gens) {
      auto img = mat_vec(g, work[i]);
      if (span.insert(img)) work.push_back(img);
    }
  }
  return span.dim();
}

}  // namespace nilpair
