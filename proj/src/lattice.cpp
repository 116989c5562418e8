#include "toricbundle/lattice.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace toricbundle {

namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("lattice arithmetic overflow");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("lattice arithmetic overflow");
  return r;
}

template <class V>
V add(const V& a, const V& b) {
  if (a.dim() != b.dim()) throw DimensionMismatch("lattice elements of different dimension");
  V c = a;
  for (std::size_t k = 0; k < a.dim(); ++k) c.coords[k] = checked_add(a.coords[k], b.coords[k]);
  return c;
}

template <class V>
V scale(std::int64_t s, const V& a) {
  V c = a;
  for (auto& x : c.coords) x = checked_mul(s, x);
  return c;
}

template <class V>
std::string format(const V& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t k = 0; k < v.coords.size(); ++k) os << (k ? "," : "") << v.coords[k];
  os << ')';
  return os.str();
}

}  // namespace

Character operator+(const Character& a, const Character& b) { return add(a, b); }
Character operator-(const Character& a) { return scale(-1, a); }
Character operator-(const Character& a, const Character& b) { return add(a, -b); }
Character operator*(std::int64_t k, const Character& a) { return scale(k, a); }
LatticeVector operator+(const LatticeVector& a, const LatticeVector& b) { return add(a, b); }
LatticeVector operator*(std::int64_t k, const LatticeVector& a) { return scale(k, a); }

std::int64_t pairing(const Character& u, const LatticeVector& v) {
  if (u.dim() != v.dim()) {
    throw DimensionMismatch("pairing: character has dimension " + std::to_string(u.dim()) +
                            ", lattice vector has dimension " + std::to_string(v.dim()));
  }
  std::int64_t s = 0;
  for (std::size_t k = 0; k < u.dim(); ++k) s = checked_add(s, checked_mul(u.coords[k], v.coords[k]));
  return s;
}

bool is_primitive(const LatticeVector& v) {
  std::int64_t g = 0;
  for (auto x : v.coords) g = std::gcd(g, x);
  return g == 1;
}

IntMatrix columns_matrix(const std::vector<LatticeVector>& columns) {
  const std::size_t n = columns.empty() ? 0 : columns.front().dim();
  IntMatrix b(n, columns.size());
  for (std::size_t j = 0; j < columns.size(); ++j) {
    if (columns[j].dim() != n) throw DimensionMismatch("generators of different dimension");
    for (std::size_t i = 0; i < n; ++i) b(i, j) = columns[j].coords[i];
  }
  return b;
}

IntMatrix dual_basis(const IntMatrix& generators) {
  if (!generators.is_square()) throw DimensionMismatch("dual_basis needs a square generator matrix");
  const QMatrix b = to_rational(generators);
  const Rational det = determinant(b);
  if (det != 1 && det != -1) {
    throw SingularMatrix("generator matrix is not unimodular (determinant " + to_string(det) + ")");
  }
  return to_integer(rational_inverse(b));
}

std::vector<Character> dual_characters(const std::vector<LatticeVector>& generators) {
  const IntMatrix u = dual_basis(columns_matrix(generators));
  std::vector<Character> out(u.rows());
  for (std::size_t i = 0; i < u.rows(); ++i) out[i].coords.assign(u.row(i).begin(), u.row(i).end());
  return out;
}

std::string to_string(const Character& u) { return format(u); }
std::string to_string(const LatticeVector& v) { return format(v); }

}  // namespace toricbundle
