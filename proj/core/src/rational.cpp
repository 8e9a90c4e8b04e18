#include "eikq/rational.hpp"

#include <cctype>
#include <cmath>
#include <limits>

#include "eikq/error.hpp"

namespace eikq {

std::string to_string(const Rational& value) { return value.get_str(); }

namespace {

bool is_integer_token(std::string_view s, bool allow_sign) {
  if (s.empty()) return false;
  std::size_t i = 0;
  if (allow_sign && (s[0] == '-' || s[0] == '+')) i = 1;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

mpz_class parse_integer(std::string_view s) {
  if (!s.empty() && s[0] == '+') s.remove_prefix(1);
  return mpz_class(std::string(s), 10);
}

}  // namespace

Rational parse_rational(std::string_view token) {
  const auto slash = token.find('/');
  if (slash == std::string_view::npos) {
    if (!is_integer_token(token, true)) {
      throw InvalidArgument("malformed rational '" + std::string(token) + "'");
    }
    return Rational(parse_integer(token));
  }
  const auto num = token.substr(0, slash);
  const auto den = token.substr(slash + 1);
  if (!is_integer_token(num, true) || !is_integer_token(den, false)) {
    throw InvalidArgument("malformed rational '" + std::string(token) + "'");
  }
  mpz_class d = parse_integer(den);
  if (d == 0) throw InvalidArgument("zero denominator in '" + std::string(token) + "'");
  Rational r(parse_integer(num), d);
  r.canonicalize();
  return r;
}

std::optional<Rational> exact_sqrt(const Rational& value) {
  if (sgn(value) < 0) return std::nullopt;
  if (mpz_perfect_square_p(value.get_num_mpz_t()) == 0) return std::nullopt;
  if (mpz_perfect_square_p(value.get_den_mpz_t()) == 0) return std::nullopt;
  mpz_class num;
  mpz_class den;
  mpz_sqrt(num.get_mpz_t(), value.get_num_mpz_t());
  mpz_sqrt(den.get_mpz_t(), value.get_den_mpz_t());
  return Rational(num, den);
}

Rational best_rational_approximation(double x, long max_den) {
  if (!std::isfinite(x)) throw InvalidArgument("cannot approximate a non-finite value");
  if (max_den < 1) max_den = 1;
  const bool negative = x < 0;
  double y = std::fabs(x);
  // Convergents h/k of the continued fraction of y.
  long long h_prev = 1, h = static_cast<long long>(std::floor(y));
  long long k_prev = 0, k = 1;
  double frac = y - std::floor(y);
  Rational best(static_cast<long>(h), 1);
  while (frac > 1e-15) {
    const double inv = 1.0 / frac;
    const double a_d = std::floor(inv);
    if (a_d > static_cast<double>(std::numeric_limits<long>::max() / 4)) break;
    const long long a = static_cast<long long>(a_d);
    frac = inv - a_d;
    const long long k_next = a * k + k_prev;
    if (k_next > max_den) {
      // Largest admissible semiconvergent.
      const long long m = (max_den - k_prev) / k;
      if (m > 0) {
        const Rational semi(static_cast<long>(m * h + h_prev), static_cast<long>(m * k + k_prev));
        const Rational conv(static_cast<long>(h), static_cast<long>(k));
        const Rational target = rational_from_double(y);
        Rational ds = semi - target;
        Rational dc = conv - target;
        if (abs(ds) < abs(dc)) best = semi;
      }
      break;
    }
    const long long h_next = a * h + h_prev;
    h_prev = h;
    h = h_next;
    k_prev = k;
    k = k_next;
    best = Rational(static_cast<long>(h), static_cast<long>(k));
  }
  best.canonicalize();
  return negative ? Rational(-best) : best;
}

Rational rational_from_double(double d) {
  if (!std::isfinite(d)) throw InvalidArgument("non-finite coefficient");
  Rational r(d);  // exact: mpq_set_d
  r.canonicalize();
  return r;
}

}  // namespace eikq
