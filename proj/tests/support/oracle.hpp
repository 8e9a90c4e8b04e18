#pragma once

// Independent brute-force arithmetic used as a reference in tests. Nothing
// here calls into the eikq polynomial code: polynomials are dense maps from
// exponent vectors to GMP rationals, multiplied and differentiated term by
// term.

#include <gmpxx.h>

#include <map>
#include <vector>

#include "eikq/polynomial.hpp"

namespace oracle {

using Exps = std::vector<int>;

struct Poly {
  int n = 0;
  std::map<Exps, mpq_class> c;

  explicit Poly(int dim = 0) : n(dim) {}

  void add(const Exps& e, const mpq_class& v) {
    auto& slot = c[e];
    slot += v;
    if (slot == 0) c.erase(e);
  }
};

inline Poly constant(int n, const mpq_class& v) {
  Poly p(n);
  if (v != 0) p.add(Exps(n, 0), v);
  return p;
}

inline Poly var(int n, int i) {
  Poly p(n);
  Exps e(n, 0);
  e[i] = 1;
  p.add(e, 1);
  return p;
}

inline Poly operator+(const Poly& a, const Poly& b) {
  Poly r = a;
  for (const auto& [e, v] : b.c) r.add(e, v);
  return r;
}

inline Poly operator-(const Poly& a, const Poly& b) {
  Poly r = a;
  for (const auto& [e, v] : b.c) r.add(e, -v);
  return r;
}

inline Poly operator*(const Poly& a, const Poly& b) {
  Poly r(a.n);
  for (const auto& [ea, va] : a.c)
    for (const auto& [eb, vb] : b.c) {
      Exps e(a.n);
      for (int i = 0; i < a.n; ++i) e[i] = ea[i] + eb[i];
      r.add(e, va * vb);
    }
  return r;
}

inline Poly scale(const Poly& a, const mpq_class& s) {
  Poly r(a.n);
  for (const auto& [e, v] : a.c) r.add(e, v * s);
  return r;
}

inline Poly power(const Poly& a, int k) {
  Poly r = constant(a.n, 1);
  for (int i = 0; i < k; ++i) r = r * a;
  return r;
}

inline Poly deriv(const Poly& a, int i) {
  Poly r(a.n);
  for (const auto& [e, v] : a.c) {
    if (e[i] == 0) continue;
    Exps d = e;
    --d[i];
    r.add(d, v * e[i]);
  }
  return r;
}

inline Poly grad_norm_sq(const Poly& a) {
  Poly r(a.n);
  for (int i = 0; i < a.n; ++i) {
    const auto d = deriv(a, i);
    r = r + d * d;
  }
  return r;
}

inline Poly laplace(const Poly& a) {
  Poly r(a.n);
  for (int i = 0; i < a.n; ++i) r = r + deriv(deriv(a, i), i);
  return r;
}

inline Poly squares(int n, int first, int last) {
  Poly r(n);
  for (int i = first; i < last; ++i) r = r + var(n, i) * var(n, i);
  return r;
}

inline mpq_class binom(int n, int k) {
  // Pascal's triangle.
  std::vector<std::vector<mpz_class>> t(n + 1);
  for (int i = 0; i <= n; ++i) {
    t[i].assign(i + 1, 1);
    for (int j = 1; j < i; ++j) t[i][j] = t[i - 1][j - 1] + t[i - 1][j];
  }
  return mpq_class(t[n][k]);
}

/// h_{g,H} expanded from the binomial sum with H = first d coordinates.
inline Poly primitive(int g, int n, int d) {
  Poly r(n);
  if (g % 2 == 0) {
    const auto xi = squares(n, 0, d), eta = squares(n, d, n);
    for (int k = 0; 2 * k <= g; ++k)
      r = r + scale(power(xi, g / 2 - k) * power(eta, k), (k % 2 ? -1 : 1) * binom(g, 2 * k));
  } else {
    const auto xi = var(n, 0), eta = squares(n, 1, n);
    for (int k = 0; 2 * k <= g; ++k)
      r = r + scale(power(xi, g - 2 * k) * power(eta, k), (k % 2 ? -1 : 1) * binom(g, 2 * k));
  }
  return r;
}

inline mpq_class eval(const Poly& a, const std::vector<mpq_class>& x) {
  mpq_class s = 0;
  for (const auto& [e, v] : a.c) {
    mpq_class t = v;
    for (int i = 0; i < a.n; ++i)
      for (int k = 0; k < e[i]; ++k) t *= x[i];
    s += t;
  }
  return s;
}

/// Re((a + i b)^g) by repeated complex multiplication.
inline mpq_class re_power(const mpq_class& a, const mpq_class& b, int g) {
  mpq_class re = 1, im = 0;
  for (int k = 0; k < g; ++k) {
    const mpq_class r2 = re * a - im * b;
    im = re * b + im * a;
    re = r2;
  }
  return re;
}

template <typename P>
Poly from(const P& f) {
  Poly r(static_cast<int>(f.dimension()));
  for (const auto& t : f.terms()) {
    Exps e(f.dimension());
    for (std::size_t i = 0; i < f.dimension(); ++i) e[i] = t.monomial[i];
    r.add(e, t.coefficient);
  }
  return r;
}

inline bool same(const Poly& a, const eikq::Polynomial& b) { return a.c == from(b).c; }

/// Dense rational matrices for brute-force pencil identities.
using Mat = std::vector<std::vector<mpq_class>>;

inline Mat mat(const eikq::RationalMatrix& m) {
  Mat r(m.rows(), std::vector<mpq_class>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r[i][j] = m(i, j);
  return r;
}

inline Mat mul(const Mat& a, const Mat& b) {
  const std::size_t n = a.size(), m = b[0].size(), k = b.size();
  Mat r(n, std::vector<mpq_class>(m, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t l = 0; l < k; ++l) r[i][j] += a[i][l] * b[l][j];
  return r;
}

inline Mat lin(const std::vector<Mat>& ms, const std::vector<mpq_class>& w) {
  Mat r(ms[0].size(), std::vector<mpq_class>(ms[0].size(), 0));
  for (std::size_t t = 0; t < ms.size(); ++t)
    for (std::size_t i = 0; i < r.size(); ++i)
      for (std::size_t j = 0; j < r.size(); ++j) r[i][j] += w[t] * ms[t][i][j];
  return r;
}

}  // namespace oracle
