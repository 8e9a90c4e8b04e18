#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "eikq/constructors.hpp"
#include "eikq/pencil.hpp"
#include "eikq/polynomial.hpp"

namespace eikq {

/// Default zero threshold for floating-point residuals.
inline constexpr double kDefaultResidualTolerance = 1e-9;

/// One checked identity. On the exact path the full residual polynomial is
/// kept and `zero` means identically zero; on the float path only the largest
/// absolute coefficient survives and `zero` compares it with a tolerance.
struct Residual {
  std::string name;
  bool exact = true;
  bool zero = true;
  double max_coeff = 0.0;
  std::optional<Rational> max_coeff_exact;
  std::optional<Polynomial> polynomial;
};

struct ResidualSet {
  std::vector<Residual> residuals;
  bool all_zero = true;

  void add(Residual r) {
    all_zero = all_zero && r.zero;
    residuals.push_back(std::move(r));
  }

  const Residual* find(const std::string& name) const {
    for (const auto& r : residuals)
      if (r.name == name) return &r;
    return nullptr;
  }

  double max_magnitude() const {
    double m = 0.0;
    for (const auto& r : residuals) m = std::max(m, r.max_coeff);
    return m;
  }
};

/// Wraps a residual polynomial. `tolerance` only matters for double.
template <typename T>
Residual make_residual(std::string name, const BasicPolynomial<T>& value, double tolerance = kDefaultResidualTolerance);

/// |grad f|^2 - g^2 |x|^(2g-2). Throws InvalidArgument unless f is
/// homogeneous of degree g.
template <typename T>
Residual check_eikonal(const BasicPolynomial<T>& f, int g, double tolerance = kDefaultResidualTolerance);

/// Outcome of testing the second Muenzner-Cartan equation
/// Delta f = c |x|^(g-2) = ((m2 - m1)/2) g^2 |x|^(g-2).
struct MunznerSecond {
  Rational constant;
  /// (m1, m2), only when the caller supplied m1 + m2.
  std::optional<std::pair<Rational, Rational>> multiplicities;
};

/// Present iff Delta f is an exact rational multiple of |x|^(g-2) (for odd g
/// that means Delta f = 0).
std::optional<MunznerSecond> check_munzner_second(const Polynomial& f, int g,
                                                  std::optional<Rational> multiplicity_sum = std::nullopt);

/// The five coefficient identities (eq1..eq5) obtained by collecting powers
/// of x_n in |grad f|^2 = 16|x|^6 for f = x_n^4 + 2 phi x_n^2 + 8 psi x_n + theta.
/// All three inputs live in the n-1 barred variables.
template <typename T>
ResidualSet check_system(const BasicPolynomial<T>& phi, const BasicPolynomial<T>& psi,
                         const BasicPolynomial<T>& theta, double tolerance = kDefaultResidualTolerance);

template <typename T>
ResidualSet check_system(const BasicNormalFormData<T>& data, double tolerance = kDefaultResidualTolerance);

/// er1, er2, eta (the Clifford-type identity A_eta^3 = |eta|^2 A_eta, as the
/// quadratic form xi^T (A_eta^3 - |eta|^2 A_eta) xi) and es1..es4, with
/// theta4, theta2, theta0 derived from the pencil.
template <typename T>
ResidualSet check_structure_identities(const BasicNormalFormData<T>& data,
                                       double tolerance = kDefaultResidualTolerance);

struct PencilReport {
  std::size_t p = 0;
  std::size_t q = 0;
  std::optional<int> nu;
  std::optional<int> mu;
  bool trace_free = false;
  bool cube_identity = false;         // A_i^3 = A_i
  bool symmetrized_identity = false;  // A_s^2 A_t + A_s A_t A_s + A_t A_s^2 = |s|^2 A_t for s _|_ t
  bool spectrum_constant = false;     // tr(A_i A_j) = 2 nu delta_ij
  bool clifford_identity = false;     // A_eta^3 = |eta|^2 A_eta as a polynomial identity

  /// True when every check required for this q passes (q = 1 only needs
  /// the cube identity).
  bool passes() const;
};

/// Checks the consequences of A_eta^3 = |eta|^2 A_eta for q >= 2, or the
/// reduced A_1^3 = A_1 for q = 1. Throws on q = 0 or non-symmetric input.
template <typename T>
PencilReport check_pencil(const BasicPencil<T>& pencil, double tolerance = kDefaultResidualTolerance);

/// (nu, mu) of a pencil passing check_pencil, computed from traces.
std::pair<int, int> pencil_spectrum(const Pencil& pencil);

}  // namespace eikq
