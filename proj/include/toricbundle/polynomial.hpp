#pragma once

#include <string>
#include <vector>

#include "toricbundle/matrix.hpp"

namespace toricbundle {

/// Univariate polynomial over Q, coefficients from the constant term upward, no trailing zeros.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coeffs);

  /// -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  const std::vector<Rational>& coefficients() const noexcept { return coeffs_; }
  const Rational& leading() const { return coeffs_.back(); }

  Rational operator()(const Rational& z) const;

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  std::vector<Rational> coeffs_;
};

Polynomial derivative(const Polynomial& p);

/// Remainder of division by a nonzero divisor.
Polynomial remainder(const Polynomial& p, const Polynomial& divisor);

/// Monic gcd; the zero polynomial only when both inputs are zero.
Polynomial gcd(Polynomial a, Polynomial b);

/// det(zI - A), computed by the Faddeev-LeVerrier recursion.
Polynomial characteristic_polynomial(const QMatrix& a);

/// gcd(p, p') is constant.
bool is_squarefree(const Polynomial& p);

std::string to_string(const Polynomial& p);

}  // namespace toricbundle
