#include "eikq/normalform.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "eikq/error.hpp"
#include "eikq/pencil.hpp"

namespace eikq {

std::string to_string(Arithmetic a) { return a == Arithmetic::exact ? "exact" : "float"; }

namespace {

// ---------------------------------------------------------------------------
// Fast double evaluation of a polynomial and its derivatives.

class Evaluator {
 public:
  explicit Evaluator(const RealPolynomial& f) : n_(f.dimension()) {
    degree_ = f.is_zero() ? 0 : f.degree();
    for (const auto& t : f.terms()) {
      coeffs_.push_back(t.coefficient);
      for (std::size_t i = 0; i < n_; ++i) exps_.push_back(static_cast<std::uint8_t>(t.monomial[i]));
    }
  }

  double operator()(const std::vector<double>& x) const {
    fill_powers(x);
    double sum = 0.0;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
      double prod = coeffs_[k];
      const std::uint8_t* e = &exps_[k * n_];
      for (std::size_t i = 0; i < n_; ++i) {
        if (e[i]) prod *= powers_[i * (degree_ + 1) + e[i]];
      }
      sum += prod;
    }
    return sum;
  }

 private:
  void fill_powers(const std::vector<double>& x) const {
    powers_.assign(n_ * (degree_ + 1), 1.0);
    for (std::size_t i = 0; i < n_; ++i) {
      for (int d = 1; d <= degree_; ++d) powers_[i * (degree_ + 1) + d] = powers_[i * (degree_ + 1) + d - 1] * x[i];
    }
  }

  std::size_t n_;
  int degree_ = 0;
  std::vector<double> coeffs_;
  std::vector<std::uint8_t> exps_;
  mutable std::vector<double> powers_;
};

double norm(const std::vector<double>& v) {
  double s = 0.0;
  for (double x : v) s += x * x;
  return std::sqrt(s);
}

void normalize(std::vector<double>& v) {
  const double r = norm(v);
  for (double& x : v) x /= r;
}

double halton(std::uint64_t index, unsigned base) {
  double f = 1.0;
  double r = 0.0;
  while (index > 0) {
    f /= base;
    r += f * static_cast<double>(index % base);
    index /= base;
  }
  return r;
}

std::vector<unsigned> first_primes(std::size_t count) {
  std::vector<unsigned> primes;
  for (unsigned c = 2; primes.size() < count; ++c) {
    bool prime = true;
    for (unsigned p : primes) {
      if (p * p > c) break;
      if (c % p == 0) {
        prime = false;
        break;
      }
    }
    if (prime) primes.push_back(c);
  }
  return primes;
}

struct AscentState {
  std::vector<double> x;
  double value = 0.0;
  double gradient_norm = 0.0;
  int iterations = 0;
};

class SphereAscent {
 public:
  explicit SphereAscent(const RealPolynomial& f) : n_(f.dimension()), f_(f) {
    for (std::size_t i = 0; i < n_; ++i) {
      const auto gi = partial_derivative(f, i);
      grad_.emplace_back(gi);
      for (std::size_t j = 0; j < n_; ++j) hess_.emplace_back(partial_derivative(gi, j));
    }
  }

  std::vector<double> tangential_gradient(const std::vector<double>& x) const {
    std::vector<double> g(n_);
    for (std::size_t i = 0; i < n_; ++i) g[i] = grad_[i](x);
    double radial = 0.0;
    for (std::size_t i = 0; i < n_; ++i) radial += g[i] * x[i];
    for (std::size_t i = 0; i < n_; ++i) g[i] -= radial * x[i];
    return g;
  }

  AscentState run(std::vector<double> x, const SphereMaxOptions& options) const {
    AscentState s;
    s.x = std::move(x);
    s.value = f_(s.x);
    double step = 0.1;
    const double coarse = std::max(1e-7, options.tolerance);
    for (; s.iterations < options.max_iterations; ++s.iterations) {
      const auto g = tangential_gradient(s.x);
      s.gradient_norm = norm(g);
      if (s.gradient_norm <= coarse) break;
      bool moved = false;
      while (step > 1e-16) {
        std::vector<double> y(n_);
        for (std::size_t i = 0; i < n_; ++i) y[i] = s.x[i] + step * g[i];
        normalize(y);
        const double v = f_(y);
        if (v > s.value) {
          s.x = std::move(y);
          s.value = v;
          step = std::min(step * 2.0, 1e3);
          moved = true;
          break;
        }
        step *= 0.5;
      }
      if (!moved) break;
    }
    polish(s, options);
    return s;
  }

 private:
  // Riemannian Newton steps on grad f = lambda x, solved in the least-squares
  // sense so that maxima lying on a positive-dimensional set still converge.
  void polish(AscentState& s, const SphereMaxOptions& options) const {
    for (int k = 0; k < 30; ++k) {
      const auto g = tangential_gradient(s.x);
      s.gradient_norm = norm(g);
      if (s.gradient_norm <= options.tolerance) return;
      double lambda = 0.0;
      for (std::size_t i = 0; i < n_; ++i) lambda += grad_[i](s.x) * s.x[i];
      Eigen::MatrixXd h(n_, n_);
      for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j) h(i, j) = hess_[i * n_ + j](s.x);
      Eigen::VectorXd xv(n_), gv(n_);
      for (std::size_t i = 0; i < n_; ++i) {
        xv(i) = s.x[i];
        gv(i) = g[i];
      }
      const Eigen::MatrixXd proj = Eigen::MatrixXd::Identity(n_, n_) - xv * xv.transpose();
      const Eigen::MatrixXd m = proj * (h - lambda * Eigen::MatrixXd::Identity(n_, n_)) * proj;
      Eigen::JacobiSVD<Eigen::MatrixXd> svd(m, Eigen::ComputeThinU | Eigen::ComputeThinV);
      svd.setThreshold(1e-8);
      const Eigen::VectorXd d = proj * svd.solve(-gv);
      std::vector<double> y(n_);
      for (std::size_t i = 0; i < n_; ++i) y[i] = s.x[i] + d(i);
      normalize(y);
      const double v = f_(y);
      const auto gy = tangential_gradient(y);
      if (v < s.value - 1e-9 || norm(gy) >= s.gradient_norm) return;
      s.x = std::move(y);
      s.value = v;
    }
    s.gradient_norm = norm(tangential_gradient(s.x));
  }

  std::size_t n_;
  Evaluator f_;
  std::vector<Evaluator> grad_;
  std::vector<Evaluator> hess_;
};

// ---------------------------------------------------------------------------
// Normal form extraction shared by both arithmetic paths.

template <typename T>
bool near(const T& a, const T& b, double tol) {
  if constexpr (is_exact_v<T>) {
    return a == b;
  } else {
    return std::fabs(a - b) <= tol;
  }
}

template <typename T>
bool negligible(const BasicPolynomial<T>& f, double tol) {
  if constexpr (is_exact_v<T>) {
    return f.is_zero();
  } else {
    return f.max_abs_coefficient() <= tol;
  }
}

struct Diagonalization {
  RationalMatrix q;
  std::vector<Rational> eigenvalues;
  std::size_t p = 0;
};

std::optional<std::vector<Rational>> normalized(std::vector<Rational> v) {
  Rational s(0);
  for (const auto& x : v) s += x * x;
  const auto r = exact_sqrt(s);
  if (!r) return std::nullopt;
  for (auto& x : v) x /= *r;
  return v;
}

// Orthonormal rational basis of the column space of a projector.
std::vector<std::vector<Rational>> rational_orthonormal_columns(const RationalMatrix& proj) {
  const std::size_t m = proj.rows();
  std::vector<std::vector<Rational>> orth;    // orthogonal, unnormalized
  std::vector<std::vector<Rational>> result;  // normalized
  for (std::size_t c = 0; c < m; ++c) {
    std::vector<Rational> v(m);
    for (std::size_t r = 0; r < m; ++r) v[r] = proj(r, c);
    for (const auto& u : orth) {
      Rational uv(0), uu(0);
      for (std::size_t r = 0; r < m; ++r) {
        uv += u[r] * v[r];
        uu += u[r] * u[r];
      }
      const Rational k = uv / uu;
      for (std::size_t r = 0; r < m; ++r) v[r] -= k * u[r];
    }
    if (std::all_of(v.begin(), v.end(), [](const Rational& x) { return is_zero(x); })) continue;
    auto unit = normalized(v);
    if (!unit) throw ExactnessUnavailable("eigenspace of phi has no rational orthonormal basis from its projector");
    orth.push_back(std::move(v));
    result.push_back(std::move(*unit));
  }
  return result;
}

Diagonalization diagonalize_exact(const RationalMatrix& phi) {
  const std::size_t m = phi.rows();
  const auto id = RationalMatrix::identity(m);
  if (!((phi - id) * (phi + id * Rational(3))).is_zero()) {
    throw NotEikonalEvidence("phi has eigenvalues outside {1, -3}");
  }
  Diagonalization out;
  if (phi.is_diagonal()) {
    std::vector<std::size_t> order;
    for (std::size_t i = 0; i < m; ++i)
      if (phi(i, i) == 1) order.push_back(i);
    out.p = order.size();
    for (std::size_t i = 0; i < m; ++i)
      if (phi(i, i) != 1) order.push_back(i);
    out.q = permutation_matrix(order);
  } else {
    const auto plus = (phi + id * Rational(3)) * Rational(1, 4);
    const auto minus = id - plus;
    auto basis = rational_orthonormal_columns(plus);
    out.p = basis.size();
    auto rest = rational_orthonormal_columns(minus);
    basis.insert(basis.end(), rest.begin(), rest.end());
    out.q = RationalMatrix(m, m);
    for (std::size_t c = 0; c < m; ++c)
      for (std::size_t r = 0; r < m; ++r) out.q(r, c) = basis[c][r];
  }
  out.eigenvalues.assign(m, Rational(-3));
  std::fill(out.eigenvalues.begin(), out.eigenvalues.begin() + static_cast<long>(out.p), Rational(1));
  return out;
}

struct RealDiagonalization {
  RealMatrix q;
  std::vector<double> eigenvalues;
  std::size_t p = 0;
};

// Orthonormal basis of the column span of v, built from the projections of
// e_1, e_2, ... in order. Coordinate-aligned eigenspaces come back as
// ascending unit vectors, matching the exact path.
Eigen::MatrixXd canonical_basis(const Eigen::MatrixXd& v) {
  const Eigen::Index m = v.rows(), k = v.cols();
  Eigen::MatrixXd out(m, k);
  Eigen::Index found = 0;
  for (Eigen::Index j = 0; j < m && found < k; ++j) {
    Eigen::VectorXd w = v * v.row(j).transpose();
    for (Eigen::Index c = 0; c < found; ++c) w -= out.col(c).dot(w) * out.col(c);
    const double norm = w.norm();
    if (norm > 1e-6) out.col(found++) = w / norm;
  }
  return out;
}

RealDiagonalization diagonalize_float(const RealMatrix& phi, double tol) {
  const std::size_t m = phi.rows();
  Eigen::MatrixXd a(m, m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) a(i, j) = 0.5 * (phi(i, j) + phi(j, i));
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(a);
  std::vector<Eigen::Index> plus, minus;
  for (Eigen::Index k = 0; k < static_cast<Eigen::Index>(m); ++k) {
    const double lambda = es.eigenvalues()(k);
    if (std::fabs(lambda - 1.0) <= tol) {
      plus.push_back(k);
    } else if (std::fabs(lambda + 3.0) <= tol) {
      minus.push_back(k);
    } else {
      throw NotEikonalEvidence("phi eigenvalue " + std::to_string(lambda) + " is not 1 or -3");
    }
  }
  RealDiagonalization out;
  out.q = RealMatrix(m, m);
  out.p = plus.size();
  std::size_t col = 0;
  for (const auto* block : {&plus, &minus}) {
    if (block->empty()) continue;
    Eigen::MatrixXd v(m, static_cast<Eigen::Index>(block->size()));
    for (std::size_t c = 0; c < block->size(); ++c) v.col(static_cast<Eigen::Index>(c)) = es.eigenvectors().col((*block)[c]);
    const auto basis = canonical_basis(v);
    for (Eigen::Index c = 0; c < basis.cols(); ++c, ++col) {
      for (std::size_t r = 0; r < m; ++r) out.q(r, col) = basis(static_cast<Eigen::Index>(r), c);
      out.eigenvalues.push_back(block == &plus ? 1.0 : -3.0);
    }
  }
  return out;
}

template <typename T>
BasicPolynomial<T> x_n_coefficient(const BasicPolynomial<T>& f, int power) {
  return drop_last_variable(coefficient_of_power(f, f.dimension() - 1, power));
}

// Given F(y) = f(R y) with F(e_n) = 1, bring phi to diagonal form and read
// off all normal-form pieces.
template <typename T, typename Diagonalize>
BasicNormalForm<T> extract_rotated(const BasicPolynomial<T>& f, const BasicMatrix<T>& r0, double tol,
                                   Diagonalize diagonalize) {
  const std::size_t n = f.dimension();
  if (n < 1) throw DimensionError("normal form needs at least one variable");
  if (!f.is_homogeneous_of(4)) throw InvalidArgument("normal form requires a homogeneous quartic");

  const auto f0 = substitute_linear(f, r0);
  Monomial top(n);
  top.set(n - 1, 4);
  if (!near(f0.coefficient(top), T(1), tol)) {
    if constexpr (is_exact_v<T>) {
      throw InvalidArgument("rotation does not send a maximum point to e_n (coefficient of x_n^4 is " +
                            to_string(f0.coefficient(top)) + ")");
    } else {
      throw NotEikonalEvidence("value at the sphere maximum is not 1");
    }
  }
  if (!negligible(coefficient_of_power(f0, n - 1, 3), tol)) {
    throw NotEikonalEvidence("e_n is not a critical point (x_n^3 terms present)");
  }

  const std::size_t m = n - 1;
  const auto phi0 = x_n_coefficient(f0, 2) * T(0.5);
  BasicMatrix<T> phi_matrix(m, m);
  if (!phi0.is_zero()) phi_matrix = quadratic_form_matrix(phi0);
  const auto diag = diagonalize(phi_matrix);

  BasicNormalForm<T> nf;
  nf.arithmetic = is_exact_v<T> ? Arithmetic::exact : Arithmetic::floating;
  nf.rotation = r0 * extend_with_one(diag.q);
  nf.p = diag.p;
  nf.q = m - diag.p;
  nf.phi_eigenvalues = diag.eigenvalues;

  const auto full = substitute_linear(f0, extend_with_one(diag.q));
  nf.phi = x_n_coefficient(full, 2) * T(0.5);
  nf.psi = x_n_coefficient(full, 1) * T(0.125);
  nf.theta = x_n_coefficient(full, 0);

  std::vector<std::size_t> xi(nf.p), eta(nf.q);
  std::iota(xi.begin(), xi.end(), 0);
  std::iota(eta.begin(), eta.end(), nf.p);

  BasicPolynomial<T> psi2(m);
  for (auto& [key, part] : homogeneous_split(nf.psi, {xi, eta})) {
    if (key == std::vector<int>{2, 1}) {
      psi2 = part;
    } else if (!negligible(part, tol)) {
      throw NotEikonalEvidence("psi has components outside xi^2 (x) eta");
    }
  }

  auto parts = split_theta(nf.theta, nf.p, nf.q, tol);
  nf.theta0 = std::move(parts.theta0);
  nf.theta2 = std::move(parts.theta2);
  nf.theta4 = std::move(parts.theta4);
  nf.data.p = nf.p;
  nf.data.q = nf.q;
  nf.data.pencil = pencil_from_psi(psi2, nf.p, nf.q);
  nf.data.theta3 = std::move(parts.theta3);
  return nf;
}

}  // namespace

// ---------------------------------------------------------------------------

SphereMaxResult sphere_maximize(const RealPolynomial& f, const SphereMaxOptions& options) {
  if (f.is_zero()) throw InvalidArgument("cannot maximize the zero polynomial");
  if (!f.is_homogeneous()) throw InvalidArgument("sphere maximization requires a homogeneous polynomial");
  if (options.seeds < 1) throw InvalidArgument("at least one start is required");
  const std::size_t n = f.dimension();
  const SphereAscent ascent(f);
  const std::size_t pairs = (n + 1) / 2;
  const auto primes = first_primes(2 * pairs);
  constexpr double kTwoPi = 6.283185307179586;

  SphereMaxResult best;
  bool have = false;
  for (int s = 0; s < options.seeds; ++s) {
    const std::uint64_t index = 1 + options.seed * static_cast<std::uint64_t>(options.seeds) + static_cast<std::uint64_t>(s);
    std::vector<double> x(2 * pairs);
    for (std::size_t k = 0; k < pairs; ++k) {
      const double u1 = halton(index, primes[2 * k]);
      const double u2 = halton(index, primes[2 * k + 1]);
      const double r = std::sqrt(-2.0 * std::log(u1));
      x[2 * k] = r * std::cos(kTwoPi * u2);
      x[2 * k + 1] = r * std::sin(kTwoPi * u2);
    }
    x.resize(n);
    if (norm(x) < 1e-12) {
      x.assign(n, 0.0);
      x[0] = 1.0;
    }
    normalize(x);
    const auto state = ascent.run(std::move(x), options);
    if (!have || state.value > best.value + 1e-12) {
      have = true;
      best.point = state.x;
      best.value = state.value;
      best.seed_index = s;
      best.iterations = state.iterations;
      best.gradient_norm = state.gradient_norm;
      best.converged = state.gradient_norm <= options.tolerance;
    }
  }
  return best;
}

template <typename T>
ThetaComponents<T> split_theta(const BasicPolynomial<T>& theta, std::size_t p, std::size_t q, double tolerance) {
  if (theta.dimension() != p + q) throw DimensionError("theta must live in p+q variables");
  if (!theta.is_zero() && !theta.is_homogeneous_of(4)) throw InvalidArgument("theta must be a homogeneous quartic");
  std::vector<std::size_t> xi(p), eta(q);
  std::iota(xi.begin(), xi.end(), 0);
  std::iota(eta.begin(), eta.end(), p);
  ThetaComponents<T> out{BasicPolynomial<T>(p + q), BasicPolynomial<T>(p + q), BasicPolynomial<T>(p + q),
                         BasicPolynomial<T>(p + q)};
  for (auto& [key, part] : homogeneous_split(theta, {xi, eta})) {
    switch (key[0]) {
      case 0: out.theta0 = part; break;
      case 2: out.theta2 = part; break;
      case 3: out.theta3 = part; break;
      case 4: out.theta4 = part; break;
      default:
        if (!negligible(part, tolerance)) throw NotEikonalEvidence("theta has a nonzero xi (x) eta^3 component");
    }
  }
  return out;
}

NormalForm extract_normal_form(const Polynomial& f, const RationalMatrix& rotation) {
  if (rotation.rows() != f.dimension() || rotation.cols() != f.dimension()) {
    throw DimensionError("rotation must be n x n");
  }
  if (!is_orthogonal(rotation)) throw InvalidArgument("rotation is not exactly orthogonal");
  return extract_rotated<Rational>(f, rotation, 0.0, [](const RationalMatrix& phi) {
    auto d = diagonalize_exact(phi);
    return d;
  });
}

RealNormalForm extract_normal_form_float_at(const RealPolynomial& f, const std::vector<double>& maximizer,
                                            double snap_tolerance) {
  if (maximizer.size() != f.dimension()) throw DimensionError("maximizer has wrong length");
  const auto r0 = householder_to_last(maximizer);
  return extract_rotated<double>(f, r0, snap_tolerance,
                                 [&](const RealMatrix& phi) { return diagonalize_float(phi, snap_tolerance); });
}

RealNormalForm extract_normal_form_float(const RealPolynomial& f, const FloatExtractOptions& options) {
  const auto max = sphere_maximize(f, options.maximize);
  return extract_normal_form_float_at(f, max.point, options.snap_tolerance);
}

std::vector<Rational> rational_unit_vector(const std::vector<double>& v, long max_den) {
  const std::size_t n = v.size();
  if (n == 0) throw DimensionError("empty vector");
  const double last = v[n - 1];
  // Project from the pole opposite to v's last coordinate for stability.
  const double sign = last >= 0 ? 1.0 : -1.0;
  std::vector<Rational> w(n - 1);
  Rational s(0);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    w[i] = best_rational_approximation(v[i] / (1.0 + sign * last), max_den);
    s += w[i] * w[i];
  }
  std::vector<Rational> out(n);
  for (std::size_t i = 0; i + 1 < n; ++i) out[i] = 2 * w[i] / (1 + s);
  out[n - 1] = Rational(1 - s) / (1 + s);
  if (sign < 0) out[n - 1] = -out[n - 1];
  return out;
}

std::optional<RationalMatrix> find_exact_normal_rotation(const Polynomial& f, std::uint64_t seed) {
  const std::size_t n = f.dimension();
  if (n == 0 || !f.is_homogeneous_of(4)) return std::nullopt;
  auto attempt = [&](const RationalMatrix& r) -> bool {
    try {
      (void)extract_normal_form(f, r);
      return true;
    } catch (const Error&) {
      return false;
    }
  };
  auto axis_value = [&](std::size_t i) {
    Monomial m(n);
    m.set(i, 4);
    return f.coefficient(m);
  };

  if (axis_value(n - 1) == 1) {
    auto id = RationalMatrix::identity(n);
    if (attempt(id)) return id;
  }
  for (std::size_t i = 0; i + 1 < n; ++i) {
    if (axis_value(i) != 1) continue;
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::swap(perm[i], perm[n - 1]);
    auto r = permutation_matrix(perm);
    if (attempt(r)) return r;
  }

  SphereMaxOptions opts;
  opts.seed = seed;
  const auto max = sphere_maximize(polynomial_cast<double>(f), opts);
  if (std::fabs(max.value - 1.0) > 1e-6) return std::nullopt;
  for (long den = 1; den <= (1L << 20); den *= 2) {
    const auto w = rational_unit_vector(max.point, den);
    if (evaluate(f, w) != 1) continue;
    auto r = householder_to_last(w);
    if (attempt(r)) return r;
  }
  return std::nullopt;
}

template struct BasicNormalForm<Rational>;
template struct BasicNormalForm<double>;
template ThetaComponents<Rational> split_theta<Rational>(const Polynomial&, std::size_t, std::size_t, double);
template ThetaComponents<double> split_theta<double>(const RealPolynomial&, std::size_t, std::size_t, double);

}  // namespace eikq
