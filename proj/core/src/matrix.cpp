#include "eikq/matrix.hpp"

#include <algorithm>
#include <array>
#include <cmath>

namespace eikq {

namespace {

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(RationalMatrix& a) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
    std::size_t pivot = row;
    while (pivot < a.rows() && is_zero(a(pivot, col))) ++pivot;
    if (pivot == a.rows()) continue;
    if (pivot != row) {
      for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(pivot, j), a(row, j));
    }
    const Rational inv = 1 / Rational(a(row, col));
    for (std::size_t j = col; j < a.cols(); ++j) a(row, j) *= inv;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == row || is_zero(a(i, col))) continue;
      const Rational factor = a(i, col);
      for (std::size_t j = col; j < a.cols(); ++j) a(i, j) -= factor * a(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

void make_primitive_integer(std::vector<Rational>& v) {
  mpz_class lcm_den = 1;
  for (const auto& x : v) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), x.get_den_mpz_t());
  mpz_class g = 0;
  for (auto& x : v) {
    x *= lcm_den;
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_num_mpz_t());
  }
  if (g == 0) return;
  int lead_sign = 0;
  for (const auto& x : v) {
    if (sgn(x) != 0) {
      lead_sign = sgn(x);
      break;
    }
  }
  if (lead_sign < 0) g = -g;
  for (auto& x : v) x /= Rational(g);
}

}  // namespace

std::size_t rank(const RationalMatrix& m) {
  RationalMatrix a = m;
  return rref(a).size();
}

std::vector<std::vector<Rational>> nullspace(const RationalMatrix& m) {
  RationalMatrix a = m;
  const auto pivots = rref(a);
  std::vector<bool> is_pivot(a.cols(), false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<std::vector<Rational>> basis;
  for (std::size_t free = 0; free < a.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rational> v(a.cols(), Rational(0));
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -a(r, free);
    make_primitive_integer(v);
    basis.push_back(std::move(v));
  }
  return basis;
}

RationalMatrix inverse(const RationalMatrix& m) {
  if (!m.is_square()) throw DimensionError("inverse of a non-square matrix");
  const std::size_t n = m.rows();
  RationalMatrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  const auto pivots = rref(aug);
  if (pivots.size() < n || pivots[n - 1] != n - 1) throw InvalidArgument("matrix is singular");
  RationalMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
  return inv;
}

bool is_orthogonal(const RationalMatrix& u) {
  if (!u.is_square()) return false;
  return u.transpose() * u == RationalMatrix::identity(u.rows());
}

RationalMatrix cayley_orthogonal(const RationalMatrix& s) {
  if (!s.is_square()) throw DimensionError("Cayley transform needs a square matrix");
  if (!(s.transpose() == s * Rational(-1))) throw InvalidArgument("Cayley transform needs an antisymmetric matrix");
  const auto id = RationalMatrix::identity(s.rows());
  return (id - s) * inverse(id + s);
}

RationalMatrix random_cayley_orthogonal(std::size_t n, std::mt19937_64& rng) {
  static const std::array<Rational, 7> kEntries = {Rational(-2), Rational(-1), Rational(-1, 2), Rational(0),
                                                   Rational(1, 2), Rational(1), Rational(2)};
  RationalMatrix s(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const auto& e = kEntries[rng() % kEntries.size()];
      s(i, j) = e;
      s(j, i) = -e;
    }
  return cayley_orthogonal(s);
}

RationalMatrix permutation_matrix(const std::vector<std::size_t>& perm) {
  const std::size_t n = perm.size();
  std::vector<bool> seen(n, false);
  RationalMatrix p(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    if (perm[j] >= n || seen[perm[j]]) throw InvalidArgument("not a permutation");
    seen[perm[j]] = true;
    p(perm[j], j) = 1;
  }
  return p;
}

template <typename T>
BasicMatrix<T> householder_to_last(const std::vector<T>& v) {
  const std::size_t n = v.size();
  if (n == 0) throw DimensionError("empty vector");
  std::vector<T> w = v;
  w[n - 1] -= T(1);
  T norm2(0);
  for (const auto& x : w) norm2 += x * x;
  if constexpr (is_exact_v<T>) {
    if (is_zero(norm2)) return BasicMatrix<T>::identity(n);
  } else {
    if (norm2 < 1e-30) return BasicMatrix<T>::identity(n);
  }
  BasicMatrix<T> h = BasicMatrix<T>::identity(n);
  const T scale = T(2) / norm2;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) h(i, j) -= scale * w[i] * w[j];
  return h;
}

template RationalMatrix householder_to_last<Rational>(const std::vector<Rational>&);
template RealMatrix householder_to_last<double>(const std::vector<double>&);

}  // namespace eikq
