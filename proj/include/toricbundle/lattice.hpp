#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "toricbundle/matrix.hpp"

namespace toricbundle {

/// Element of the cocharacter lattice N: a ray generator or one-parameter subgroup exponent.
struct LatticeVector {
  std::vector<std::int64_t> coords;

  std::size_t dim() const noexcept { return coords.size(); }
  friend auto operator<=>(const LatticeVector&, const LatticeVector&) = default;
};

/// Element of the character lattice M.
struct Character {
  std::vector<std::int64_t> coords;

  std::size_t dim() const noexcept { return coords.size(); }
  static Character zero(std::size_t n) { return Character{std::vector<std::int64_t>(n, 0)}; }
  friend auto operator<=>(const Character&, const Character&) = default;
};

Character operator+(const Character& a, const Character& b);
Character operator-(const Character& a, const Character& b);
Character operator-(const Character& a);
Character operator*(std::int64_t k, const Character& a);
LatticeVector operator+(const LatticeVector& a, const LatticeVector& b);
LatticeVector operator*(std::int64_t k, const LatticeVector& a);

/// The natural pairing <u, v> = sum u_k v_k. Throws DimensionMismatch, or std::overflow_error
/// if the exact value leaves int64.
std::int64_t pairing(const Character& u, const LatticeVector& v);

/// gcd of the coordinates is 1.
bool is_primitive(const LatticeVector& v);

/// Square matrix whose columns are the given vectors.
IntMatrix columns_matrix(const std::vector<LatticeVector>& columns);

/// For unimodular B (columns = cone generators) returns U with U * B = I, so that the rows of U
/// are the dual characters. Throws SingularMatrix if |det B| != 1.
IntMatrix dual_basis(const IntMatrix& generators);

/// Rows of dual_basis as Characters.
std::vector<Character> dual_characters(const std::vector<LatticeVector>& generators);

std::string to_string(const Character& u);
std::string to_string(const LatticeVector& v);

}  // namespace toricbundle
