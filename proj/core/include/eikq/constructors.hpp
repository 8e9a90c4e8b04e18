#pragma once

#include <cstddef>
#include <string>
#include <string_view>

#include "eikq/pencil.hpp"
#include "eikq/polynomial.hpp"

namespace eikq {

/// Parameters of the primitive eikonal polynomial Re(|xi| + i|eta|)^g, where
/// xi collects the first `dim_h` coordinates and eta the rest.
struct PrimitiveSpec {
  int g = 4;
  int n = 2;
  int dim_h = 1;
};

/// Expanded h_{g,H} = sum_k (-1)^k C(g,2k) |xi|^(g-2k) |eta|^(2k). For odd g
/// the subspace H must be a line (dim_h == 1) and xi is the signed x_1.
Polynomial make_primitive(const PrimitiveSpec& spec);

/// (sum x_i^2)^2 - 8 (x_1^2 + ... + x_k^2)(x_{k+1}^2 + ... + x_n^2), 0 <= k <= n/2.
Polynomial make_canonical_quartic(int n, int k);

/// Data fixing a quartic normal form x_n^4 + 2 phi x_n^2 + 8 psi x_n + theta:
/// the split p + q of the barred variables, the pencil defining psi, and the
/// free cubic part theta3 in xi^3 (x) eta. The other theta components are
/// determined by the pencil.
template <typename T>
struct BasicNormalFormData {
  std::size_t p = 0;
  std::size_t q = 0;
  BasicPencil<T> pencil;
  BasicPolynomial<T> theta3;

  std::size_t dimension() const noexcept { return p + q + 1; }

  /// Throws on asymmetric or misshapen pencil matrices and on theta3 outside xi^3 (x) eta.
  void validate() const;

  friend bool operator==(const BasicNormalFormData&, const BasicNormalFormData&) = default;
};

using NormalFormData = BasicNormalFormData<Rational>;
using RealNormalFormData = BasicNormalFormData<double>;

/// phi, psi and theta of the normal form in the p+q barred variables.
template <typename T>
struct NormalFormParts {
  BasicPolynomial<T> phi;
  BasicPolynomial<T> psi;
  BasicPolynomial<T> theta;
};

template <typename T>
NormalFormParts<T> normal_form_parts(const BasicNormalFormData<T>& data);

/// Builds the quartic in n = p+q+1 variables with x_n last. Eikonality is
/// not implied; it holds exactly when the structure identities vanish.
template <typename T>
BasicPolynomial<T> assemble_from_normal_form(const BasicNormalFormData<T>& data);

/// x_n^4 + 2 phi x_n^2 + 8 psi x_n + theta from parts over n-1 variables.
template <typename T>
BasicPolynomial<T> assemble_quartic(const BasicPolynomial<T>& phi, const BasicPolynomial<T>& psi,
                                    const BasicPolynomial<T>& theta);

/// Textual form: a header line "p q", then the q pencil matrices as p rows
/// of p rationals each, then theta3 as poly-text over p+q variables.
std::string format_normal_form_data(const NormalFormData& data);
NormalFormData parse_normal_form_data(std::string_view source);

extern template struct BasicNormalFormData<Rational>;
extern template struct BasicNormalFormData<double>;

}  // namespace eikq
