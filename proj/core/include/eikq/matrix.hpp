#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "eikq/error.hpp"
#include "eikq/rational.hpp"

namespace eikq {

/// Dense row-major matrix over an exact (Rational) or floating (double)
/// coefficient type.
template <typename T>
class BasicMatrix {
 public:
  BasicMatrix() = default;
  BasicMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, T(0)) {}
  BasicMatrix(std::size_t rows, std::size_t cols, std::vector<T> data)
      : rows_(rows), cols_(cols), data_(std::move(data)) {
    if (data_.size() != rows_ * cols_) throw DimensionError("matrix data size does not match shape");
  }

  static BasicMatrix identity(std::size_t n) {
    BasicMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  static BasicMatrix diagonal(const std::vector<T>& diag) {
    BasicMatrix m(diag.size(), diag.size());
    for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  const std::vector<T>& data() const noexcept { return data_; }

  BasicMatrix transpose() const {
    BasicMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  T trace() const {
    if (!is_square()) throw DimensionError("trace of a non-square matrix");
    T s(0);
    for (std::size_t i = 0; i < rows_; ++i) s += (*this)(i, i);
    return s;
  }

  bool is_zero() const {
    for (const auto& v : data_)
      if (!eikq::is_zero(v)) return false;
    return true;
  }

  bool is_symmetric() const {
    if (!is_square()) return false;
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = i + 1; j < cols_; ++j)
        if ((*this)(i, j) != (*this)(j, i)) return false;
    return true;
  }

  bool is_diagonal() const {
    if (!is_square()) return false;
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j)
        if (i != j && !eikq::is_zero((*this)(i, j))) return false;
    return true;
  }

  /// Largest absolute entry.
  double max_abs() const {
    double m = 0.0;
    for (const auto& v : data_) m = std::max(m, magnitude(v));
    return m;
  }

  BasicMatrix& operator+=(const BasicMatrix& o) {
    check_same_shape(o);
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
    return *this;
  }
  BasicMatrix& operator-=(const BasicMatrix& o) {
    check_same_shape(o);
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
    return *this;
  }
  BasicMatrix& operator*=(const T& s) {
    for (auto& v : data_) v *= s;
    return *this;
  }

  friend BasicMatrix operator+(BasicMatrix a, const BasicMatrix& b) { return a += b; }
  friend BasicMatrix operator-(BasicMatrix a, const BasicMatrix& b) { return a -= b; }
  friend BasicMatrix operator*(BasicMatrix a, const T& s) { return a *= s; }
  friend BasicMatrix operator*(const T& s, BasicMatrix a) { return a *= s; }

  friend BasicMatrix operator*(const BasicMatrix& a, const BasicMatrix& b) {
    if (a.cols_ != b.rows_) throw DimensionError("matrix product shape mismatch");
    BasicMatrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const T& aik = a(i, k);
        if (eikq::is_zero(aik)) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
      }
    return c;
  }

  friend std::vector<T> operator*(const BasicMatrix& a, const std::vector<T>& v) {
    if (a.cols_ != v.size()) throw DimensionError("matrix-vector shape mismatch");
    std::vector<T> out(a.rows_, T(0));
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t j = 0; j < a.cols_; ++j) out[i] += a(i, j) * v[j];
    return out;
  }

  friend bool operator==(const BasicMatrix& a, const BasicMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  void check_same_shape(const BasicMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionError("matrix shape mismatch");
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using RationalMatrix = BasicMatrix<Rational>;
using RealMatrix = BasicMatrix<double>;

template <typename To, typename From>
BasicMatrix<To> matrix_cast(const BasicMatrix<From>& m) {
  std::vector<To> data;
  data.reserve(m.data().size());
  for (const auto& v : m.data()) {
    if constexpr (std::is_same_v<To, From>) {
      data.push_back(v);
    } else if constexpr (std::is_same_v<To, double>) {
      data.push_back(to_double(v));
    } else {
      data.push_back(rational_from_double(v));
    }
  }
  return BasicMatrix<To>(m.rows(), m.cols(), std::move(data));
}

// Exact linear algebra over the rationals.

/// Rank by fraction-exact Gaussian elimination.
std::size_t rank(const RationalMatrix& m);

/// Basis of {x : m x = 0}, one column vector per entry, each scaled to a
/// primitive integer vector with positive leading nonzero entry.
std::vector<std::vector<Rational>> nullspace(const RationalMatrix& m);

/// Inverse of a square matrix; throws InvalidArgument when singular.
RationalMatrix inverse(const RationalMatrix& m);

/// Exact test U^T U = I.
bool is_orthogonal(const RationalMatrix& u);

/// Cayley transform (I - S)(I + S)^{-1} of an antisymmetric S: an exactly
/// orthogonal rational matrix without -1 eigenvalues.
RationalMatrix cayley_orthogonal(const RationalMatrix& antisymmetric);

/// Cayley transform of a pseudo-random antisymmetric matrix whose entries
/// are drawn from {-2,-1,-1/2,0,1/2,1,2}. Deterministic in `rng`.
RationalMatrix random_cayley_orthogonal(std::size_t n, std::mt19937_64& rng);

/// Permutation matrix P with P e_{perm[j]} ... defined by (P)_{perm[j], j} = 1,
/// so that f(Px) renames x_j to x_{perm[j]}.
RationalMatrix permutation_matrix(const std::vector<std::size_t>& perm);

/// Householder reflection I - 2 w w^T / (w^T w) exchanging the unit vector
/// v with e_last (identity when v == e_last).
template <typename T>
BasicMatrix<T> householder_to_last(const std::vector<T>& v);

/// Block-diagonal embedding diag(a, 1).
template <typename T>
BasicMatrix<T> extend_with_one(const BasicMatrix<T>& a) {
  BasicMatrix<T> out(a.rows() + 1, a.cols() + 1);
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j);
  out(a.rows(), a.cols()) = T(1);
  return out;
}

}  // namespace eikq
