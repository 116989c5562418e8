#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "toricbundle/matrix.hpp"

namespace toricbundle {

/// Exponents of a diagonal one-parameter subgroup z -> diag(z^{w_1}, ..., z^{w_r}).
struct WeightVector {
  std::vector<std::int64_t> weights;

  std::size_t size() const noexcept { return weights.size(); }
  friend bool operator==(const WeightVector&, const WeightVector&) = default;
};

/// Which entries of an r x r matrix may be nonzero.
class ZeroPattern {
 public:
  ZeroPattern() = default;
  explicit ZeroPattern(std::size_t r, bool fill = false) : r_(r), allowed_(r * r, fill) {}

  std::size_t rank() const noexcept { return r_; }
  bool allowed(std::size_t i, std::size_t j) const { return allowed_.at(i * r_ + j); }
  void set(std::size_t i, std::size_t j, bool value) { allowed_.at(i * r_ + j) = value; }

  /// Every nonzero entry of m sits in an allowed slot.
  bool admits(const QMatrix& m) const;

  friend bool operator==(const ZeroPattern&, const ZeroPattern&) = default;

 private:
  std::size_t r_ = 0;
  std::vector<bool> allowed_;
};

/// Linear subspace of r x r rational matrices, stored as the reduced echelon basis of the
/// row-major flattenings. Equality of objects is equality of subspaces.
class MatrixSubspace {
 public:
  MatrixSubspace() = default;
  MatrixSubspace(std::size_t r, std::vector<RationalVector> spanning);

  static MatrixSubspace zero(std::size_t r) { return MatrixSubspace(r, {}); }
  static MatrixSubspace full(std::size_t r);
  static MatrixSubspace span(std::size_t r, const std::vector<QMatrix>& matrices);

  std::size_t rank() const noexcept { return r_; }
  std::size_t dim() const noexcept { return basis_.size(); }
  const std::vector<RationalVector>& echelon_basis() const noexcept { return basis_; }
  std::vector<QMatrix> basis() const;

  bool contains(const QMatrix& m) const;
  bool contains(const MatrixSubspace& other) const;

  /// Basis of the linear functionals vanishing on the subspace (coordinates in the flat basis).
  std::vector<RationalVector> annihilator() const;

  friend bool operator==(const MatrixSubspace&, const MatrixSubspace&) = default;

 private:
  std::size_t r_ = 0;
  std::vector<RationalVector> basis_;
};

/// allowed(i, j) iff w_i >= w_j: the matrices whose conjugate by the one-parameter subgroup has a
/// limit at z -> 0.
ZeroPattern parabolic_pattern(const WeightVector& w);

MatrixSubspace pattern_subspace(const ZeroPattern& p);

/// {C X C^{-1} : X in S}. Throws SingularMatrix for singular C.
MatrixSubspace conjugate_subspace(const MatrixSubspace& s, const QMatrix& c);

MatrixSubspace intersect_subspaces(const MatrixSubspace& a, const MatrixSubspace& b);

/// Span of the union.
MatrixSubspace sum_subspaces(const MatrixSubspace& a, const MatrixSubspace& b);

MatrixSubspace trace_zero_restrict(const MatrixSubspace& s);

bool contains_matrix(const MatrixSubspace& s, const QMatrix& m);

std::size_t subspace_dim(const MatrixSubspace& s);

/// {Y : XY = YX}.
MatrixSubspace centralizer(const QMatrix& x);

}  // namespace toricbundle
