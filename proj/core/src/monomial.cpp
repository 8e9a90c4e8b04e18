#include "eikq/monomial.hpp"

#include <limits>
#include <string>

#include "eikq/error.hpp"

namespace eikq {

namespace {

Monomial::Exponent checked_exponent(int e) {
  if (e < 0) throw InvalidArgument("negative exponent " + std::to_string(e));
  if (e > std::numeric_limits<Monomial::Exponent>::max()) {
    throw InvalidArgument("exponent " + std::to_string(e) + " exceeds 255");
  }
  return static_cast<Monomial::Exponent>(e);
}

}  // namespace

Monomial::Monomial(std::initializer_list<int> exps) {
  exps_.reserve(exps.size());
  for (int e : exps) exps_.push_back(checked_exponent(e));
}

Monomial::Monomial(std::span<const int> exps) {
  exps_.reserve(exps.size());
  for (int e : exps) exps_.push_back(checked_exponent(e));
}

Monomial Monomial::unit(std::size_t dimension, std::size_t var, int power) {
  if (var >= dimension) throw InvalidArgument("variable index out of range");
  Monomial m(dimension);
  m.exps_[var] = checked_exponent(power);
  return m;
}

void Monomial::set(std::size_t i, int e) {
  if (i >= exps_.size()) throw InvalidArgument("variable index out of range");
  exps_[i] = checked_exponent(e);
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial out;
  out.assign_product(*this, other);
  return out;
}

void Monomial::assign_product(const Monomial& a, const Monomial& b) {
  if (a.dimension() != b.dimension()) throw DimensionError("monomial dimension mismatch");
  exps_.resize(a.dimension());
  for (std::size_t i = 0; i < a.exps_.size(); ++i) {
    const unsigned sum = static_cast<unsigned>(a.exps_[i]) + b.exps_[i];
    if (sum > std::numeric_limits<Exponent>::max()) throw InvalidArgument("exponent overflow in product");
    exps_[i] = static_cast<Exponent>(sum);
  }
}

bool grlex_greater(const Monomial& a, const Monomial& b) noexcept {
  const int da = a.degree();
  const int db = b.degree();
  if (da != db) return da > db;
  const std::size_t n = a.dimension() < b.dimension() ? a.dimension() : b.dimension();
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i] != b[i]) return a[i] > b[i];
  }
  return a.dimension() > b.dimension();
}

}  // namespace eikq
