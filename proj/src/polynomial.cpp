#include "toricbundle/polynomial.hpp"

#include <sstream>

namespace toricbundle {

Polynomial::Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational Polynomial::operator()(const Rational& z) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * z + *it;
  return acc;
}

Polynomial derivative(const Polynomial& p) {
  std::vector<Rational> d;
  for (std::size_t k = 1; k < p.coefficients().size(); ++k) d.push_back(Rational(k) * p.coefficients()[k]);
  return Polynomial(std::move(d));
}

Polynomial remainder(const Polynomial& p, const Polynomial& divisor) {
  if (divisor.is_zero()) throw std::domain_error("polynomial division by zero");
  std::vector<Rational> r = p.coefficients();
  const auto& d = divisor.coefficients();
  const std::size_t dd = d.size() - 1;
  while (r.size() > dd && !r.empty()) {
    const Rational f = r.back() / d.back();
    const std::size_t shift = r.size() - 1 - dd;
    for (std::size_t k = 0; k <= dd; ++k) r[shift + k] -= f * d[k];
    r.pop_back();
    while (!r.empty() && r.back() == 0) r.pop_back();
  }
  return Polynomial(std::move(r));
}

Polynomial gcd(Polynomial a, Polynomial b) {
  while (!b.is_zero()) {
    Polynomial r = remainder(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  if (a.is_zero()) return a;
  std::vector<Rational> c = a.coefficients();
  const Rational lead = c.back();
  for (auto& x : c) x /= lead;
  return Polynomial(std::move(c));
}

Polynomial characteristic_polynomial(const QMatrix& a) {
  if (!a.is_square()) throw DimensionMismatch("characteristic polynomial of a non-square matrix");
  const std::size_t n = a.rows();
  std::vector<Rational> c(n + 1);
  c[n] = 1;
  QMatrix m(n, n);
  const QMatrix id = QMatrix::identity(n);
  for (std::size_t k = 1; k <= n; ++k) {
    m = a * m + c[n - k + 1] * id;
    c[n - k] = -trace(a * m) / Rational(k);
  }
  return Polynomial(std::move(c));
}

bool is_squarefree(const Polynomial& p) {
  if (p.is_zero()) return false;
  return gcd(p, derivative(p)).degree() == 0;
}

std::string to_string(const Polynomial& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = p.degree(); k >= 0; --k) {
    const Rational& c = p.coefficients()[static_cast<std::size_t>(k)];
    if (c == 0) continue;
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    const Rational mag = c < 0 ? Rational(-c) : c;
    if (mag != 1 || k == 0) os << to_string(mag);
    if (k >= 1) os << "z";
    if (k >= 2) os << "^" << k;
    first = false;
  }
  return os.str();
}

}  // namespace toricbundle
