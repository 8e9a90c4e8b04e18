#pragma once

#include <gmpxx.h>

#include <cmath>
#include <optional>
#include <string>
#include <string_view>
#include <type_traits>

namespace eikq {

/// Exact rational number, always kept in lowest terms with a positive
/// denominator (GMP canonical form).
using Rational = mpq_class;

/// "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& value);

/// Parses "p" or "p/q" (optional sign on p). Throws InvalidArgument on a
/// malformed token or a zero denominator. The result is canonicalized.
Rational parse_rational(std::string_view token);

/// Exact square root when `value` is the square of a rational.
std::optional<Rational> exact_sqrt(const Rational& value);

/// Best rational approximation of `x` with denominator at most `max_den`
/// (continued-fraction convergents and semiconvergents).
Rational best_rational_approximation(double x, long max_den);

// Coefficient-type helpers shared by the exact and floating-point code paths.

inline bool is_zero(const Rational& r) { return sgn(r) == 0; }
inline bool is_zero(double d) { return d == 0.0; }

inline double magnitude(const Rational& r) { return std::fabs(r.get_d()); }
inline double magnitude(double d) { return std::fabs(d); }

inline double to_double(const Rational& r) { return r.get_d(); }
inline double to_double(double d) { return d; }

template <typename T>
T coefficient_cast(const Rational& r);

template <>
inline Rational coefficient_cast<Rational>(const Rational& r) {
  return r;
}

template <>
inline double coefficient_cast<double>(const Rational& r) {
  return r.get_d();
}

/// Exact rational value of a finite double.
Rational rational_from_double(double d);

template <typename T>
inline constexpr bool is_exact_v = std::is_same_v<T, Rational>;

}  // namespace eikq
