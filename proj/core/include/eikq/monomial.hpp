#pragma once

#include <boost/container/small_vector.hpp>
#include <boost/container_hash/hash.hpp>

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace eikq {

/// Exponent vector over a fixed variable space. Exponents are stored as
/// bytes; products whose exponents exceed 255 are rejected.
class Monomial {
 public:
  using Exponent = std::uint8_t;

  Monomial() = default;
  explicit Monomial(std::size_t dimension) : exps_(dimension, 0) {}
  Monomial(std::initializer_list<int> exps);
  explicit Monomial(std::span<const int> exps);

  static Monomial unit(std::size_t dimension, std::size_t var, int power = 1);

  std::size_t dimension() const noexcept { return exps_.size(); }
  int operator[](std::size_t i) const noexcept { return exps_[i]; }
  void set(std::size_t i, int e);

  int degree() const noexcept {
    int d = 0;
    for (auto e : exps_) d += e;
    return d;
  }

  /// Sum of exponents over variables [first, last).
  int degree_in(std::size_t first, std::size_t last) const noexcept {
    int d = 0;
    for (std::size_t i = first; i < last; ++i) d += exps_[i];
    return d;
  }

  bool is_constant() const noexcept {
    for (auto e : exps_)
      if (e != 0) return false;
    return true;
  }

  Monomial operator*(const Monomial& other) const;

  /// Overwrites *this with a*b; both operands must share the dimension.
  void assign_product(const Monomial& a, const Monomial& b);

  friend bool operator==(const Monomial& a, const Monomial& b) noexcept { return a.exps_ == b.exps_; }

  std::size_t hash() const noexcept { return boost::hash_range(exps_.begin(), exps_.end()); }

  std::vector<int> exponents() const { return {exps_.begin(), exps_.end()}; }

 private:
  boost::container::small_vector<Exponent, 16> exps_;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept { return m.hash(); }
};

/// Graded-lexicographic "a precedes b" in descending order: higher total
/// degree first, ties broken by the larger exponent of x1, then x2, ...
bool grlex_greater(const Monomial& a, const Monomial& b) noexcept;

struct GrlexDescending {
  bool operator()(const Monomial& a, const Monomial& b) const noexcept { return grlex_greater(a, b); }
};

}  // namespace eikq
