#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace toricbundle {

using BigInt = boost::multiprecision::cpp_int;

/// Exact fraction with positive denominator, always in lowest terms.
using Rational = boost::multiprecision::cpp_rational;

inline BigInt numerator_of(const Rational& q) { return boost::multiprecision::numerator(q); }
inline BigInt denominator_of(const Rational& q) { return boost::multiprecision::denominator(q); }

inline bool is_zero(const Rational& q) { return q.is_zero(); }
inline bool is_zero(std::int64_t v) { return v == 0; }

inline bool is_integral(const Rational& q) { return denominator_of(q) == 1; }

/// num/den in lowest terms with the sign moved to the numerator; den must be nonzero.
Rational make_rational(const BigInt& num, const BigInt& den);

/// "p" or "p/q".
std::string to_string(const Rational& q);

/// Parses "p", "-p", "p/q"; throws InputError on anything else or a zero denominator.
Rational parse_rational(std::string_view text);

/// The value as int64 if it fits, nullopt otherwise.
std::optional<std::int64_t> to_int64(const BigInt& v);

}  // namespace toricbundle
