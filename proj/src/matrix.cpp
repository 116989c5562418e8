#include "toricbundle/matrix.hpp"

#include <algorithm>
#include <sstream>

namespace toricbundle {

QMatrix to_rational(const IntMatrix& m) {
  QMatrix q(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) q(i, j) = Rational(m(i, j));
  return q;
}

IntMatrix to_integer(const QMatrix& m) {
  IntMatrix z(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (!is_integral(m(i, j))) throw InputError("non-integral entry " + to_string(m(i, j)));
      const auto v = to_int64(numerator_of(m(i, j)));
      if (!v) throw InputError("entry out of 64-bit range");
      z(i, j) = *v;
    }
  }
  return z;
}

QMatrix matrix_product(const QMatrix& a, const QMatrix& b) { return a * b; }

namespace {

// Gaussian elimination in place; returns the pivot column of each nonzero row.
std::vector<std::size_t> eliminate(std::vector<RationalVector>& rows, std::size_t width, bool reduce) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < width && r < rows.size(); ++c) {
    std::size_t p = r;
    while (p < rows.size() && is_zero(rows[p][c])) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[r], rows[p]);
    const Rational inv = 1 / rows[r][c];
    for (std::size_t k = c; k < width; ++k)
      if (!is_zero(rows[r][k])) rows[r][k] *= inv;
    for (std::size_t i = reduce ? 0 : r + 1; i < rows.size(); ++i) {
      if (i == r || is_zero(rows[i][c])) continue;
      const Rational f = rows[i][c];
      for (std::size_t k = c; k < width; ++k)
        if (!is_zero(rows[r][k])) rows[i][k] -= f * rows[r][k];
    }
    pivots.push_back(c);
    ++r;
  }
  rows.resize(r);
  return pivots;
}

std::vector<RationalVector> rows_of(const QMatrix& a) {
  std::vector<RationalVector> rows(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) rows[i].assign(a.row(i).begin(), a.row(i).end());
  return rows;
}

}  // namespace

Rational determinant(const QMatrix& a) {
  if (!a.is_square()) throw DimensionMismatch("determinant of a non-square matrix");
  const std::size_t n = a.rows();
  QMatrix m = a;
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m(p, c) == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      for (std::size_t k = 0; k < n; ++k) std::swap(m(p, k), m(c, k));
      det = -det;
    }
    det *= m(c, c);
    for (std::size_t i = c + 1; i < n; ++i) {
      if (m(i, c) == 0) continue;
      const Rational f = m(i, c) / m(c, c);
      for (std::size_t k = c; k < n; ++k) m(i, k) -= f * m(c, k);
    }
  }
  return det;
}

QMatrix rational_inverse(const QMatrix& a) {
  if (!a.is_square()) throw DimensionMismatch("inverse of a non-square matrix");
  const std::size_t n = a.rows();
  std::vector<RationalVector> rows(n, RationalVector(2 * n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) rows[i][j] = a(i, j);
    rows[i][n + i] = 1;
  }
  const auto pivots = eliminate(rows, 2 * n, true);
  if (pivots.size() < n || pivots[n - 1] != n - 1) throw SingularMatrix("matrix is singular");
  QMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = rows[i][n + j];
  return inv;
}

std::size_t rank(const QMatrix& a) {
  auto rows = rows_of(a);
  return eliminate(rows, a.cols(), false).size();
}

Rational trace(const QMatrix& a) {
  if (!a.is_square()) throw DimensionMismatch("trace of a non-square matrix");
  Rational t = 0;
  for (std::size_t i = 0; i < a.rows(); ++i) t += a(i, i);
  return t;
}

std::vector<RationalVector> reduced_echelon(std::vector<RationalVector> rows, std::size_t width) {
  for (const auto& r : rows)
    if (r.size() != width) throw DimensionMismatch("row width differs from the declared width");
  eliminate(rows, width, true);
  return rows;
}

std::vector<RationalVector> kernel_basis(const QMatrix& a) {
  const std::size_t n = a.cols();
  auto rows = rows_of(a);
  const auto pivots = eliminate(rows, n, true);
  std::vector<bool> is_pivot(n, false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<RationalVector> basis;
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    RationalVector x(n);
    x[f] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = -rows[i][f];
    basis.push_back(std::move(x));
  }
  return reduced_echelon(std::move(basis), n);
}

QMatrix diagonal(std::span<const Rational> entries) {
  QMatrix d(entries.size(), entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) d(i, i) = entries[i];
  return d;
}

QMatrix unit_matrix(std::size_t n, std::size_t i, std::size_t j) {
  QMatrix e(n, n);
  e(i, j) = 1;
  return e;
}

std::string to_string(const QMatrix& m) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < m.rows(); ++i) {
    os << (i ? ",[" : "[");
    for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? "," : "") << to_string(m(i, j));
    os << ']';
  }
  os << ']';
  return os.str();
}

}  // namespace toricbundle
