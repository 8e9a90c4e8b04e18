#pragma once

#include <cstddef>
#include <vector>

#include "eikq/matrix.hpp"
#include "eikq/polynomial.hpp"

namespace eikq {

/// q symmetric p x p matrices A_1..A_q; A_eta = sum_i eta_i A_i.
template <typename T>
using BasicPencil = std::vector<BasicMatrix<T>>;
using Pencil = BasicPencil<Rational>;
using RealPencil = BasicPencil<double>;

/// The polynomials a pencil induces in the barred variables (xi_1..xi_p,
/// eta_1..eta_q) of a quartic normal form, all over p+q variables.
template <typename T>
struct PencilForms {
  std::size_t p = 0;
  std::size_t q = 0;
  BasicPolynomial<T> xi_sq;                  // |xi|^2
  BasicPolynomial<T> eta_sq;                 // |eta|^2
  std::vector<BasicPolynomial<T>> tau;       // xi^T A_i xi
  std::vector<BasicPolynomial<T>> a_eta_xi;  // components of A_eta xi
  BasicPolynomial<T> psi;                    // xi^T A_eta xi
  BasicPolynomial<T> theta4;                 // |xi|^4 - 2 sum tau_i^2
  BasicPolynomial<T> theta2;                 // 8 |A_eta xi|^2 - 6 |xi|^2 |eta|^2
  BasicPolynomial<T> theta0;                 // |eta|^4

  /// A_eta applied to a vector of polynomials (length p).
  std::vector<BasicPolynomial<T>> apply_a_eta(const std::vector<BasicPolynomial<T>>& v) const;

  BasicPencil<T> pencil;
};

/// Checks shape and symmetry: q matrices, each p x p and symmetric.
template <typename T>
void validate_pencil(const BasicPencil<T>& pencil, std::size_t p, std::size_t q);

template <typename T>
PencilForms<T> pencil_forms(const BasicPencil<T>& pencil, std::size_t p, std::size_t q);

/// Pencil (A_i)_{jk} read off a cubic psi in xi^2 (x) eta: the coefficient of
/// xi_j xi_k eta_i, halved off the diagonal.
template <typename T>
BasicPencil<T> pencil_from_psi(const BasicPolynomial<T>& psi, std::size_t p, std::size_t q);

extern template struct PencilForms<Rational>;
extern template struct PencilForms<double>;

}  // namespace eikq
