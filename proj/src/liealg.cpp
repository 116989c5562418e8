#include "toricbundle/liealg.hpp"

namespace toricbundle {

bool ZeroPattern::admits(const QMatrix& m) const {
  if (m.rows() != r_ || m.cols() != r_) throw DimensionMismatch("pattern and matrix sizes differ");
  for (std::size_t i = 0; i < r_; ++i)
    for (std::size_t j = 0; j < r_; ++j)
      if (m(i, j) != 0 && !allowed(i, j)) return false;
  return true;
}

MatrixSubspace::MatrixSubspace(std::size_t r, std::vector<RationalVector> spanning)
    : r_(r), basis_(reduced_echelon(std::move(spanning), r * r)) {}

MatrixSubspace MatrixSubspace::full(std::size_t r) {
  std::vector<RationalVector> rows;
  for (std::size_t k = 0; k < r * r; ++k) {
    RationalVector v(r * r);
    v[k] = 1;
    rows.push_back(std::move(v));
  }
  return MatrixSubspace(r, std::move(rows));
}

MatrixSubspace MatrixSubspace::span(std::size_t r, const std::vector<QMatrix>& matrices) {
  std::vector<RationalVector> rows;
  for (const auto& m : matrices) {
    if (m.rows() != r || m.cols() != r) throw DimensionMismatch("spanning matrix has the wrong size");
    rows.push_back(m.flat());
  }
  return MatrixSubspace(r, std::move(rows));
}

std::vector<QMatrix> MatrixSubspace::basis() const {
  std::vector<QMatrix> out;
  for (const auto& v : basis_) out.push_back(QMatrix::from_flat(r_, r_, v));
  return out;
}

bool MatrixSubspace::contains(const QMatrix& m) const {
  if (m.rows() != r_ || m.cols() != r_) throw DimensionMismatch("matrix size differs from the subspace rank");
  RationalVector v = m.flat();
  for (const auto& b : basis_) {
    std::size_t pivot = 0;
    while (b[pivot] == 0) ++pivot;
    if (v[pivot] == 0) continue;
    const Rational f = v[pivot];
    for (std::size_t k = pivot; k < v.size(); ++k) v[k] -= f * b[k];
  }
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

bool MatrixSubspace::contains(const MatrixSubspace& other) const {
  for (const auto& m : other.basis())
    if (!contains(m)) return false;
  return true;
}

std::vector<RationalVector> MatrixSubspace::annihilator() const {
  const std::size_t n = r_ * r_;
  QMatrix b(basis_.size(), n);
  for (std::size_t i = 0; i < basis_.size(); ++i)
    for (std::size_t k = 0; k < n; ++k) b(i, k) = basis_[i][k];
  return kernel_basis(b);
}

ZeroPattern parabolic_pattern(const WeightVector& w) {
  ZeroPattern p(w.size());
  for (std::size_t i = 0; i < w.size(); ++i)
    for (std::size_t j = 0; j < w.size(); ++j) p.set(i, j, w.weights[i] >= w.weights[j]);
  return p;
}

MatrixSubspace pattern_subspace(const ZeroPattern& p) {
  const std::size_t r = p.rank();
  std::vector<RationalVector> rows;
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < r; ++j) {
      if (!p.allowed(i, j)) continue;
      RationalVector v(r * r);
      v[i * r + j] = 1;
      rows.push_back(std::move(v));
    }
  }
  return MatrixSubspace(r, std::move(rows));
}

MatrixSubspace conjugate_subspace(const MatrixSubspace& s, const QMatrix& c) {
  if (c.rows() != s.rank() || c.cols() != s.rank()) throw DimensionMismatch("conjugator size differs from the subspace rank");
  const QMatrix c_inv = rational_inverse(c);
  std::vector<QMatrix> images;
  for (const auto& x : s.basis()) images.push_back(c * x * c_inv);
  return MatrixSubspace::span(s.rank(), images);
}

MatrixSubspace intersect_subspaces(const MatrixSubspace& a, const MatrixSubspace& b) {
  if (a.rank() != b.rank()) throw DimensionMismatch("subspaces of different matrix size");
  const std::size_t n = a.rank() * a.rank();
  auto constraints = a.annihilator();
  for (auto& row : b.annihilator()) constraints.push_back(std::move(row));
  QMatrix system(constraints.size(), n);
  for (std::size_t i = 0; i < constraints.size(); ++i)
    for (std::size_t k = 0; k < n; ++k) system(i, k) = constraints[i][k];
  return MatrixSubspace(a.rank(), kernel_basis(system));
}

MatrixSubspace sum_subspaces(const MatrixSubspace& a, const MatrixSubspace& b) {
  if (a.rank() != b.rank()) throw DimensionMismatch("subspaces of different matrix size");
  auto rows = a.echelon_basis();
  for (const auto& v : b.echelon_basis()) rows.push_back(v);
  return MatrixSubspace(a.rank(), std::move(rows));
}

MatrixSubspace trace_zero_restrict(const MatrixSubspace& s) {
  const std::size_t r = s.rank();
  std::vector<RationalVector> traceless;
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < r; ++j) {
      if (i == j && i + 1 == r) continue;
      RationalVector v(r * r);
      v[i * r + j] = 1;
      if (i == j) v[(r - 1) * r + (r - 1)] = -1;
      traceless.push_back(std::move(v));
    }
  }
  return intersect_subspaces(s, MatrixSubspace(r, std::move(traceless)));
}

bool contains_matrix(const MatrixSubspace& s, const QMatrix& m) { return s.contains(m); }

std::size_t subspace_dim(const MatrixSubspace& s) { return s.dim(); }

MatrixSubspace centralizer(const QMatrix& x) {
  if (!x.is_square()) throw DimensionMismatch("centralizer of a non-square matrix");
  const std::size_t r = x.rows();
  const std::size_t n = r * r;
  // Column (a, b) of the commutator map is X E_ab - E_ab X.
  QMatrix map(n, n);
  for (std::size_t a = 0; a < r; ++a) {
    for (std::size_t b = 0; b < r; ++b) {
      const std::size_t col = a * r + b;
      for (std::size_t i = 0; i < r; ++i) map(i * r + b, col) += x(i, a);
      for (std::size_t j = 0; j < r; ++j) map(a * r + j, col) -= x(b, j);
    }
  }
  return MatrixSubspace(r, kernel_basis(map));
}

}  // namespace toricbundle
