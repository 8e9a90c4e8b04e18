#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <span>
#include <unordered_map>
#include <utility>
#include <vector>

#include "eikq/error.hpp"
#include "eikq/matrix.hpp"
#include "eikq/monomial.hpp"
#include "eikq/rational.hpp"

namespace eikq {

/// Sparse multivariate polynomial over `dimension` variables x_1..x_n
/// (indexed 0..n-1 in the API). Terms are kept in graded-lexicographic
/// descending order with no zero coefficients. Values are immutable once
/// built; every operation returns a new polynomial.
template <typename T>
class BasicPolynomial {
 public:
  using Coefficient = T;

  struct Term {
    Monomial monomial;
    T coefficient;
  };

  BasicPolynomial() = default;
  explicit BasicPolynomial(std::size_t dimension) : dimension_(dimension) {}

  static BasicPolynomial constant(std::size_t dimension, const T& c) {
    BasicPolynomial p(dimension);
    if (!eikq::is_zero(c)) p.terms_.push_back({Monomial(dimension), c});
    return p;
  }

  static BasicPolynomial variable(std::size_t dimension, std::size_t index) {
    BasicPolynomial p(dimension);
    p.terms_.push_back({Monomial::unit(dimension, index), T(1)});
    return p;
  }

  static BasicPolynomial term(const Monomial& m, const T& c) {
    BasicPolynomial p(m.dimension());
    if (!eikq::is_zero(c)) p.terms_.push_back({m, c});
    return p;
  }

  /// Builds a polynomial from terms in any order; duplicates are added.
  static BasicPolynomial from_terms(std::size_t dimension, std::vector<Term> terms) {
    std::unordered_map<Monomial, T, MonomialHash> acc;
    acc.reserve(terms.size());
    for (auto& t : terms) {
      if (t.monomial.dimension() != dimension) throw DimensionError("term dimension mismatch");
      auto it = acc.find(t.monomial);
      if (it == acc.end()) {
        acc.emplace(std::move(t.monomial), std::move(t.coefficient));
      } else {
        it->second += t.coefficient;
      }
    }
    return from_map(dimension, std::move(acc));
  }

  std::size_t dimension() const noexcept { return dimension_; }
  std::span<const Term> terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }

  /// Total degree; -1 for the zero polynomial.
  int degree() const noexcept { return terms_.empty() ? -1 : terms_.front().monomial.degree(); }

  /// The zero polynomial counts as homogeneous of every degree.
  bool is_homogeneous() const noexcept {
    if (terms_.empty()) return true;
    return terms_.back().monomial.degree() == terms_.front().monomial.degree();
  }

  bool is_homogeneous_of(int d) const noexcept {
    return terms_.empty() || (is_homogeneous() && degree() == d);
  }

  T coefficient(const Monomial& m) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                               [](const Term& t, const Monomial& key) { return grlex_greater(t.monomial, key); });
    if (it != terms_.end() && it->monomial == m) return it->coefficient;
    return T(0);
  }

  double max_abs_coefficient() const {
    double m = 0.0;
    for (const auto& t : terms_) m = std::max(m, magnitude(t.coefficient));
    return m;
  }

  BasicPolynomial operator-() const {
    BasicPolynomial r = *this;
    for (auto& t : r.terms_) t.coefficient = -t.coefficient;
    return r;
  }

  friend BasicPolynomial operator+(const BasicPolynomial& a, const BasicPolynomial& b) { return merge(a, b, false); }
  friend BasicPolynomial operator-(const BasicPolynomial& a, const BasicPolynomial& b) { return merge(a, b, true); }
  BasicPolynomial& operator+=(const BasicPolynomial& b) { return *this = merge(*this, b, false); }
  BasicPolynomial& operator-=(const BasicPolynomial& b) { return *this = merge(*this, b, true); }

  friend BasicPolynomial operator*(const BasicPolynomial& a, const T& s) {
    if (eikq::is_zero(s)) return BasicPolynomial(a.dimension_);
    BasicPolynomial r = a;
    for (auto& t : r.terms_) t.coefficient *= s;
    if constexpr (!is_exact_v<T>) r.drop_zeros();
    return r;
  }
  friend BasicPolynomial operator*(const T& s, const BasicPolynomial& a) { return a * s; }

  friend BasicPolynomial operator*(const BasicPolynomial& a, const BasicPolynomial& b) {
    if (a.dimension_ != b.dimension_) throw DimensionError("polynomial dimension mismatch in product");
    if (a.is_zero() || b.is_zero()) return BasicPolynomial(a.dimension_);
    std::unordered_map<Monomial, T, MonomialHash> acc;
    acc.reserve(a.size() * b.size() / 2 + 16);
    Monomial key(a.dimension_);
    T product(0);
    for (const auto& ta : a.terms_) {
      for (const auto& tb : b.terms_) {
        key.assign_product(ta.monomial, tb.monomial);
        product = ta.coefficient * tb.coefficient;
        auto it = acc.find(key);
        if (it == acc.end()) {
          acc.emplace(key, product);
        } else {
          it->second += product;
        }
      }
    }
    return from_map(a.dimension_, std::move(acc));
  }

  BasicPolynomial& operator*=(const BasicPolynomial& b) { return *this = *this * b; }

  friend bool operator==(const BasicPolynomial& a, const BasicPolynomial& b) {
    if (a.dimension_ != b.dimension_ || a.terms_.size() != b.terms_.size()) return false;
    for (std::size_t k = 0; k < a.terms_.size(); ++k) {
      if (!(a.terms_[k].monomial == b.terms_[k].monomial)) return false;
      if (!(a.terms_[k].coefficient == b.terms_[k].coefficient)) return false;
    }
    return true;
  }

 private:
  template <typename Map>
  static BasicPolynomial from_map(std::size_t dimension, Map&& acc) {
    BasicPolynomial p(dimension);
    p.terms_.reserve(acc.size());
    for (auto& [m, c] : acc) {
      if (!eikq::is_zero(c)) p.terms_.push_back({m, std::move(c)});
    }
    std::sort(p.terms_.begin(), p.terms_.end(),
              [](const Term& x, const Term& y) { return grlex_greater(x.monomial, y.monomial); });
    return p;
  }

  static BasicPolynomial merge(const BasicPolynomial& a, const BasicPolynomial& b, bool subtract) {
    if (a.dimension_ != b.dimension_) throw DimensionError("polynomial dimension mismatch in sum");
    BasicPolynomial r(a.dimension_);
    r.terms_.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
      if (j == b.size() || (i < a.size() && grlex_greater(a.terms_[i].monomial, b.terms_[j].monomial))) {
        r.terms_.push_back(a.terms_[i++]);
      } else if (i == a.size() || grlex_greater(b.terms_[j].monomial, a.terms_[i].monomial)) {
        r.terms_.push_back({b.terms_[j].monomial, subtract ? T(-b.terms_[j].coefficient) : b.terms_[j].coefficient});
        ++j;
      } else {
        T c = subtract ? T(a.terms_[i].coefficient - b.terms_[j].coefficient)
                       : T(a.terms_[i].coefficient + b.terms_[j].coefficient);
        if (!eikq::is_zero(c)) r.terms_.push_back({a.terms_[i].monomial, std::move(c)});
        ++i;
        ++j;
      }
    }
    return r;
  }

  void drop_zeros() {
    std::erase_if(terms_, [](const Term& t) { return eikq::is_zero(t.coefficient); });
  }

  std::size_t dimension_ = 0;
  std::vector<Term> terms_;
};

using Polynomial = BasicPolynomial<Rational>;
using RealPolynomial = BasicPolynomial<double>;

template <typename To, typename From>
BasicPolynomial<To> polynomial_cast(const BasicPolynomial<From>& f) {
  if constexpr (std::is_same_v<To, From>) {
    return f;
  } else {
    std::vector<typename BasicPolynomial<To>::Term> terms;
    terms.reserve(f.size());
    for (const auto& t : f.terms()) {
      if constexpr (std::is_same_v<To, double>) {
        terms.push_back({t.monomial, to_double(t.coefficient)});
      } else {
        terms.push_back({t.monomial, rational_from_double(t.coefficient)});
      }
    }
    return BasicPolynomial<To>::from_terms(f.dimension(), std::move(terms));
  }
}

/// f^k by repeated squaring.
template <typename T>
BasicPolynomial<T> pow(const BasicPolynomial<T>& f, int k) {
  if (k < 0) throw InvalidArgument("negative power");
  BasicPolynomial<T> result = BasicPolynomial<T>::constant(f.dimension(), T(1));
  BasicPolynomial<T> base = f;
  while (k > 0) {
    if (k & 1) result = result * base;
    k >>= 1;
    if (k > 0) base = base * base;
  }
  return result;
}

/// Sum of x_i^2 over the listed variables.
template <typename T>
BasicPolynomial<T> sum_of_squares(std::size_t dimension, std::size_t first, std::size_t last) {
  if (first > last || last > dimension) throw InvalidArgument("variable range out of bounds");
  std::vector<typename BasicPolynomial<T>::Term> terms;
  for (std::size_t i = first; i < last; ++i) terms.push_back({Monomial::unit(dimension, i, 2), T(1)});
  return BasicPolynomial<T>::from_terms(dimension, std::move(terms));
}

/// |x|^(2m) = (x_1^2 + ... + x_n^2)^m, expanded.
template <typename T>
BasicPolynomial<T> radial_power(std::size_t dimension, int m) {
  return pow(sum_of_squares<T>(dimension, 0, dimension), m);
}

/// Exact partial derivative with respect to variable `index` (0-based).
template <typename T>
BasicPolynomial<T> partial_derivative(const BasicPolynomial<T>& f, std::size_t index) {
  if (index >= f.dimension()) throw InvalidArgument("derivative variable index out of range");
  std::vector<typename BasicPolynomial<T>::Term> terms;
  terms.reserve(f.size());
  for (const auto& t : f.terms()) {
    const int e = t.monomial[index];
    if (e == 0) continue;
    Monomial m = t.monomial;
    m.set(index, e - 1);
    terms.push_back({std::move(m), T(t.coefficient * T(e))});
  }
  // Differentiation preserves distinctness of monomials but may change order.
  return BasicPolynomial<T>::from_terms(f.dimension(), std::move(terms));
}

/// Partial derivatives with respect to the variables [first, last).
template <typename T>
std::vector<BasicPolynomial<T>> gradient(const BasicPolynomial<T>& f, std::size_t first, std::size_t last) {
  std::vector<BasicPolynomial<T>> g;
  g.reserve(last - first);
  for (std::size_t i = first; i < last; ++i) g.push_back(partial_derivative(f, i));
  return g;
}

template <typename T>
std::vector<BasicPolynomial<T>> gradient(const BasicPolynomial<T>& f) {
  return gradient(f, 0, f.dimension());
}

/// Sum of products a_i b_i of two equally long polynomial vectors.
template <typename T>
BasicPolynomial<T> dot(const std::vector<BasicPolynomial<T>>& a, const std::vector<BasicPolynomial<T>>& b,
                       std::size_t dimension) {
  if (a.size() != b.size()) throw DimensionError("vector length mismatch in dot product");
  BasicPolynomial<T> s(dimension);
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

/// |grad f|^2.
template <typename T>
BasicPolynomial<T> gradient_norm_sq(const BasicPolynomial<T>& f) {
  const auto g = gradient(f);
  return dot(g, g, f.dimension());
}

/// Sum of pure second derivatives over the variables [first, last).
template <typename T>
BasicPolynomial<T> laplacian(const BasicPolynomial<T>& f, std::size_t first, std::size_t last) {
  if (first > last || last > f.dimension()) throw InvalidArgument("variable range out of bounds");
  std::vector<typename BasicPolynomial<T>::Term> terms;
  for (const auto& t : f.terms()) {
    for (std::size_t i = first; i < last; ++i) {
      const int e = t.monomial[i];
      if (e < 2) continue;
      Monomial m = t.monomial;
      m.set(i, e - 2);
      terms.push_back({std::move(m), T(t.coefficient * T(e * (e - 1)))});
    }
  }
  return BasicPolynomial<T>::from_terms(f.dimension(), std::move(terms));
}

template <typename T>
BasicPolynomial<T> laplacian(const BasicPolynomial<T>& f) {
  return laplacian(f, 0, f.dimension());
}

/// f(Mx): variable x_i is replaced by the linear form sum_j M_ij x_j.
template <typename T>
BasicPolynomial<T> substitute_linear(const BasicPolynomial<T>& f, const BasicMatrix<T>& m) {
  const std::size_t n = f.dimension();
  if (m.rows() != n || m.cols() != n) throw DimensionError("substitution matrix must be n x n");
  if (f.is_zero()) return f;
  std::vector<BasicPolynomial<T>> linear;
  linear.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<typename BasicPolynomial<T>::Term> terms;
    for (std::size_t j = 0; j < n; ++j) {
      if (!is_zero(m(i, j))) terms.push_back({Monomial::unit(n, j), m(i, j)});
    }
    linear.push_back(BasicPolynomial<T>::from_terms(n, std::move(terms)));
  }
  // Cache powers of each linear form up to the maximal exponent used.
  std::vector<std::vector<BasicPolynomial<T>>> powers(n);
  for (const auto& t : f.terms()) {
    for (std::size_t i = 0; i < n; ++i) {
      auto& p = powers[i];
      if (p.empty()) p.push_back(BasicPolynomial<T>::constant(n, T(1)));
      while (static_cast<int>(p.size()) <= t.monomial[i]) p.push_back(p.back() * linear[i]);
    }
  }
  BasicPolynomial<T> result(n);
  for (const auto& t : f.terms()) {
    BasicPolynomial<T> prod = BasicPolynomial<T>::constant(n, t.coefficient);
    for (std::size_t i = 0; i < n; ++i) {
      if (t.monomial[i] > 0) prod = prod * powers[i][t.monomial[i]];
    }
    result += prod;
  }
  return result;
}

/// Exact value at a point.
template <typename T>
T evaluate(const BasicPolynomial<T>& f, std::span<const T> point) {
  if (point.size() != f.dimension()) throw DimensionError("evaluation point has wrong length");
  T sum(0);
  T prod(0);
  for (const auto& t : f.terms()) {
    prod = t.coefficient;
    for (std::size_t i = 0; i < point.size(); ++i) {
      for (int k = 0; k < t.monomial[i]; ++k) prod *= point[i];
    }
    sum += prod;
  }
  return sum;
}

template <typename T>
T evaluate(const BasicPolynomial<T>& f, const std::vector<T>& point) {
  return evaluate(f, std::span<const T>(point));
}

/// Splits f into components homogeneous in each block of variables.
/// Variables not covered by `blocks` form one extra trailing block (only
/// when there are any). Keys are the per-block degrees.
template <typename T>
std::map<std::vector<int>, BasicPolynomial<T>> homogeneous_split(
    const BasicPolynomial<T>& f, const std::vector<std::vector<std::size_t>>& blocks) {
  const std::size_t n = f.dimension();
  std::vector<int> owner(n, -1);
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    for (auto v : blocks[b]) {
      if (v >= n) throw InvalidArgument("block variable index out of range");
      if (owner[v] != -1) throw InvalidArgument("overlapping variable blocks");
      owner[v] = static_cast<int>(b);
    }
  }
  std::size_t nblocks = blocks.size();
  if (std::find(owner.begin(), owner.end(), -1) != owner.end()) {
    for (auto& o : owner)
      if (o == -1) o = static_cast<int>(nblocks);
    ++nblocks;
  }
  std::map<std::vector<int>, std::vector<typename BasicPolynomial<T>::Term>> parts;
  for (const auto& t : f.terms()) {
    std::vector<int> key(nblocks, 0);
    for (std::size_t i = 0; i < n; ++i) key[owner[i]] += t.monomial[i];
    parts[key].push_back(t);
  }
  std::map<std::vector<int>, BasicPolynomial<T>> out;
  for (auto& [key, terms] : parts) out.emplace(key, BasicPolynomial<T>::from_terms(n, std::move(terms)));
  return out;
}

/// Renames variables: x_i of f becomes y_{mapping[i]} in a space of
/// `new_dimension` variables. Used to embed or permute variables.
template <typename T>
BasicPolynomial<T> remap_variables(const BasicPolynomial<T>& f, std::size_t new_dimension,
                                   const std::vector<std::size_t>& mapping) {
  if (mapping.size() != f.dimension()) throw DimensionError("variable mapping has wrong length");
  std::vector<typename BasicPolynomial<T>::Term> terms;
  terms.reserve(f.size());
  for (const auto& t : f.terms()) {
    Monomial m(new_dimension);
    for (std::size_t i = 0; i < mapping.size(); ++i) {
      if (t.monomial[i] == 0) continue;
      if (mapping[i] >= new_dimension) throw InvalidArgument("variable mapping out of range");
      m.set(mapping[i], m[mapping[i]] + t.monomial[i]);
    }
    terms.push_back({std::move(m), t.coefficient});
  }
  return BasicPolynomial<T>::from_terms(new_dimension, std::move(terms));
}

/// Terms of f whose exponent of `var` equals `power`, with that variable
/// removed from the monomials (result has dimension n, exponent set to 0).
template <typename T>
BasicPolynomial<T> coefficient_of_power(const BasicPolynomial<T>& f, std::size_t var, int power) {
  std::vector<typename BasicPolynomial<T>::Term> terms;
  for (const auto& t : f.terms()) {
    if (t.monomial[var] != power) continue;
    Monomial m = t.monomial;
    m.set(var, 0);
    terms.push_back({std::move(m), t.coefficient});
  }
  return BasicPolynomial<T>::from_terms(f.dimension(), std::move(terms));
}

/// Drops the last variable; f must not depend on it.
template <typename T>
BasicPolynomial<T> drop_last_variable(const BasicPolynomial<T>& f) {
  if (f.dimension() == 0) throw DimensionError("no variable to drop");
  const std::size_t n = f.dimension() - 1;
  std::vector<typename BasicPolynomial<T>::Term> terms;
  for (const auto& t : f.terms()) {
    if (t.monomial[n] != 0) throw InvalidArgument("polynomial depends on the dropped variable");
    Monomial m(n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, t.monomial[i]);
    terms.push_back({std::move(m), t.coefficient});
  }
  return BasicPolynomial<T>::from_terms(n, std::move(terms));
}

/// Matrix of the quadratic form q(x) = x^T Q x (q must be homogeneous of degree 2).
template <typename T>
BasicMatrix<T> quadratic_form_matrix(const BasicPolynomial<T>& q) {
  if (!q.is_homogeneous_of(2)) throw InvalidArgument("not a quadratic form");
  const std::size_t n = q.dimension();
  BasicMatrix<T> m(n, n);
  for (const auto& t : q.terms()) {
    std::size_t a = n, b = n;
    for (std::size_t i = 0; i < n; ++i) {
      if (t.monomial[i] == 2) a = b = i;
      if (t.monomial[i] == 1) (a == n ? a : b) = i;
    }
    if (a == b) {
      m(a, a) = t.coefficient;
    } else {
      m(a, b) = t.coefficient / T(2);
      m(b, a) = t.coefficient / T(2);
    }
  }
  return m;
}

/// x^T A x over the variables starting at `offset`, in a space of `dimension` variables.
template <typename T>
BasicPolynomial<T> quadratic_form(const BasicMatrix<T>& a, std::size_t dimension, std::size_t offset = 0) {
  if (!a.is_square() || offset + a.rows() > dimension) throw DimensionError("quadratic form does not fit");
  std::vector<typename BasicPolynomial<T>::Term> terms;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (is_zero(a(i, j))) continue;
      Monomial m(dimension);
      m.set(offset + i, m[offset + i] + 1);
      m.set(offset + j, m[offset + j] + 1);
      terms.push_back({std::move(m), a(i, j)});
    }
  return BasicPolynomial<T>::from_terms(dimension, std::move(terms));
}

/// The linear forms (A x)_k over the variables starting at `offset`.
template <typename T>
std::vector<BasicPolynomial<T>> linear_map(const BasicMatrix<T>& a, std::size_t dimension, std::size_t offset = 0) {
  if (offset + a.cols() > dimension) throw DimensionError("linear map does not fit");
  std::vector<BasicPolynomial<T>> out;
  out.reserve(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    std::vector<typename BasicPolynomial<T>::Term> terms;
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (!is_zero(a(i, j))) terms.push_back({Monomial::unit(dimension, offset + j), a(i, j)});
    }
    out.push_back(BasicPolynomial<T>::from_terms(dimension, std::move(terms)));
  }
  return out;
}

}  // namespace eikq
