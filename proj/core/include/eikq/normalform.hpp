#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "eikq/constructors.hpp"
#include "eikq/matrix.hpp"
#include "eikq/polynomial.hpp"

namespace eikq {

enum class Arithmetic { exact, floating };

/// "exact" or "float".
std::string to_string(Arithmetic a);

/// A quartic written as x_n^4 + 2 phi x_n^2 + 8 psi x_n + theta in the
/// coordinates y = rotation^T x, i.e. f(rotation * y) is the normal form.
/// The barred variables are ordered xi (phi = +1 block, dimension p) first,
/// then eta (phi = -3 block, dimension q).
template <typename T>
struct BasicNormalForm {
  BasicMatrix<T> rotation;
  std::size_t p = 0;
  std::size_t q = 0;
  std::vector<T> phi_eigenvalues;
  BasicNormalFormData<T> data;

  // Raw pieces in the p+q barred variables.
  BasicPolynomial<T> phi;
  BasicPolynomial<T> psi;
  BasicPolynomial<T> theta;
  BasicPolynomial<T> theta4;
  BasicPolynomial<T> theta2;
  BasicPolynomial<T> theta0;

  Arithmetic arithmetic = Arithmetic::exact;

  std::size_t dimension() const noexcept { return p + q + 1; }
};

using NormalForm = BasicNormalForm<Rational>;
using RealNormalForm = BasicNormalForm<double>;

struct SphereMaxOptions {
  int seeds = 64;
  std::uint64_t seed = 0;  // shifts the deterministic start sequence
  int max_iterations = 10000;
  double tolerance = 1e-12;  // on the norm of the tangential gradient
};

struct SphereMaxResult {
  std::vector<double> point;
  double value = 0.0;
  bool converged = false;
  int seed_index = 0;
  int iterations = 0;
  double gradient_norm = 0.0;
};

/// Multi-start projected gradient ascent of f on the unit sphere. Starts are
/// Halton points pushed through Box-Muller; the best value wins, ties going
/// to the lowest start index. Throws InvalidArgument for zero or
/// inhomogeneous f.
SphereMaxResult sphere_maximize(const RealPolynomial& f, const SphereMaxOptions& options = {});

/// theta in p+q variables split into (theta0, theta2, theta3, theta4) by
/// degree in eta; the xi-degree-1 component must vanish.
template <typename T>
struct ThetaComponents {
  BasicPolynomial<T> theta0;
  BasicPolynomial<T> theta2;
  BasicPolynomial<T> theta3;
  BasicPolynomial<T> theta4;
};

/// Throws NotEikonalEvidence when theta has a nonzero xi^1 (x) eta^3 part
/// (beyond `tolerance` in floating point).
template <typename T>
ThetaComponents<T> split_theta(const BasicPolynomial<T>& theta, std::size_t p, std::size_t q,
                               double tolerance = 1e-6);

/// Exact extraction with a caller-supplied rational rotation R. Requires R
/// exactly orthogonal and f(R e_n) = 1. Diagonalizes phi by a permutation
/// when phi is already diagonal, otherwise by rational Gram-Schmidt on its
/// eigenspaces (ExactnessUnavailable when a norm is not a rational square).
/// Throws NotEikonalEvidence when the quartic violates a necessary condition.
NormalForm extract_normal_form(const Polynomial& f, const RationalMatrix& rotation);

struct FloatExtractOptions {
  SphereMaxOptions maximize;
  double snap_tolerance = 1e-6;
};

/// Floating-point extraction: rotation from sphere_maximize and a symmetric
/// eigendecomposition of phi, eigenvalues snapped to {1, -3}.
RealNormalForm extract_normal_form_float(const RealPolynomial& f, const FloatExtractOptions& options = {});

/// Rotation taking a known unit maximizer to e_n, then the float extraction.
RealNormalForm extract_normal_form_float_at(const RealPolynomial& f, const std::vector<double>& maximizer,
                                            double snap_tolerance = 1e-6);

/// Looks for an exact rational rotation under which f has a normal form:
/// the identity, coordinate transpositions onto a unit value, then a
/// Householder reflection through a rationalized sphere maximizer.
/// Returns the rotation only if exact extraction succeeds with it.
std::optional<RationalMatrix> find_exact_normal_rotation(const Polynomial& f, std::uint64_t seed = 0);

/// Rational unit vector close to the unit vector v, via stereographic
/// projection with each coordinate rounded to denominator <= max_den.
std::vector<Rational> rational_unit_vector(const std::vector<double>& v, long max_den);

extern template struct BasicNormalForm<Rational>;
extern template struct BasicNormalForm<double>;

}  // namespace eikq
