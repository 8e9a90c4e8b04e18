#include "eikq/analysis.hpp"

#include <cmath>
#include <random>
#include <string>

#include "eikq/error.hpp"

namespace eikq {

namespace {

template <typename T>
bool near_zero(const BasicMatrix<T>& m, double tolerance) {
  if constexpr (is_exact_v<T>) {
    return m.is_zero();
  } else {
    return m.max_abs() <= tolerance;
  }
}

template <typename T>
bool near_zero(const T& v, double tolerance) {
  if constexpr (is_exact_v<T>) {
    return is_zero(v);
  } else {
    return std::fabs(v) <= tolerance;
  }
}

// Nonnegative even integer value of t (exactly, or within tolerance).
template <typename T>
std::optional<int> even_integer(const T& t, double tolerance) {
  if constexpr (is_exact_v<T>) {
    if (t.get_den() != 1 || sgn(t) < 0) return std::nullopt;
    if (!t.get_num().fits_sint_p()) return std::nullopt;
    const long v = t.get_num().get_si();
    if (v % 2 != 0) return std::nullopt;
    return static_cast<int>(v);
  } else {
    const double r = std::round(t);
    if (std::fabs(t - r) > tolerance || r < 0) return std::nullopt;
    const long v = static_cast<long>(r);
    if (v % 2 != 0) return std::nullopt;
    return static_cast<int>(v);
  }
}

template <typename T>
BasicMatrix<T> pencil_combination(const BasicPencil<T>& pencil, const std::vector<T>& coeffs) {
  BasicMatrix<T> out(pencil[0].rows(), pencil[0].cols());
  for (std::size_t i = 0; i < pencil.size(); ++i) {
    if (!is_zero(coeffs[i])) out += pencil[i] * coeffs[i];
  }
  return out;
}

// A_s^2 A_t + A_s A_t A_s + A_t A_s^2 - |s|^2 A_t.
template <typename T>
BasicMatrix<T> symmetrized_defect(const BasicMatrix<T>& as, const BasicMatrix<T>& at, const T& s_norm_sq) {
  const auto as2 = as * as;
  return as2 * at + as * at * as + at * as2 - at * s_norm_sq;
}

}  // namespace

template <typename T>
Residual make_residual(std::string name, const BasicPolynomial<T>& value, double tolerance) {
  Residual r;
  r.name = std::move(name);
  if constexpr (is_exact_v<T>) {
    Rational max(0);
    for (const auto& t : value.terms()) {
      const Rational a = abs(t.coefficient);
      if (a > max) max = a;
    }
    r.exact = true;
    r.zero = value.is_zero();
    r.max_coeff = max.get_d();
    r.max_coeff_exact = max;
    r.polynomial = value;
  } else {
    r.exact = false;
    r.max_coeff = value.max_abs_coefficient();
    r.zero = r.max_coeff <= tolerance;
  }
  return r;
}

template <typename T>
Residual check_eikonal(const BasicPolynomial<T>& f, int g, double tolerance) {
  if (g < 1) throw InvalidArgument("eikonal degree must be at least 1");
  if (!f.is_homogeneous()) throw InvalidArgument("polynomial is not homogeneous");
  if (!f.is_zero() && f.degree() != g) {
    throw InvalidArgument("polynomial has degree " + std::to_string(f.degree()) + ", expected " + std::to_string(g));
  }
  const auto target = radial_power<T>(f.dimension(), g - 1) * T(g * g);
  return make_residual("eikonal", gradient_norm_sq(f) - target, tolerance);
}

std::optional<MunznerSecond> check_munzner_second(const Polynomial& f, int g, std::optional<Rational> multiplicity_sum) {
  if (g < 1) throw InvalidArgument("degree must be at least 1");
  if (!f.is_homogeneous_of(g)) throw InvalidArgument("polynomial is not homogeneous of degree " + std::to_string(g));
  const auto lap = laplacian(f);
  Rational c(0);
  if (!lap.is_zero()) {
    if (g % 2 == 1) return std::nullopt;
    const auto radial = radial_power<Rational>(f.dimension(), (g - 2) / 2);
    c = lap.coefficient(radial.terms().front().monomial);
    if (!(lap == radial * c)) return std::nullopt;
  }
  MunznerSecond out{c, std::nullopt};
  if (multiplicity_sum) {
    const Rational diff = 2 * c / (g * g);
    out.multiplicities = std::make_pair(Rational((*multiplicity_sum - diff) / 2), Rational((*multiplicity_sum + diff) / 2));
  }
  return out;
}

template <typename T>
ResidualSet check_system(const BasicPolynomial<T>& phi, const BasicPolynomial<T>& psi,
                         const BasicPolynomial<T>& theta, double tolerance) {
  const std::size_t m = phi.dimension();
  if (psi.dimension() != m || theta.dimension() != m) throw DimensionError("phi, psi, theta dimensions differ");
  const auto gphi = gradient(phi);
  const auto gpsi = gradient(psi);
  const auto gtheta = gradient(theta);
  const auto r2 = radial_power<T>(m, 1);
  const auto r4 = r2 * r2;
  const auto r6 = r4 * r2;

  ResidualSet set;
  set.add(make_residual("eq1", phi * T(8) + dot(gphi, gphi, m) - r2 * T(12), tolerance));
  set.add(make_residual("eq2", dot(gphi, gpsi, m) + psi * T(2), tolerance));
  set.add(make_residual("eq3", phi * phi * T(4) + dot(gphi, gtheta, m) + dot(gpsi, gpsi, m) * T(16) - r4 * T(12),
                        tolerance));
  set.add(make_residual("eq4", dot(gpsi, gtheta, m) + phi * psi * T(4), tolerance));
  set.add(make_residual("eq5", psi * psi * T(64) + dot(gtheta, gtheta, m) - r6 * T(16), tolerance));
  return set;
}

template <typename T>
ResidualSet check_system(const BasicNormalFormData<T>& data, double tolerance) {
  const auto parts = normal_form_parts(data);
  return check_system(parts.phi, parts.psi, parts.theta, tolerance);
}

template <typename T>
ResidualSet check_structure_identities(const BasicNormalFormData<T>& data, double tolerance) {
  data.validate();
  const std::size_t p = data.p;
  const std::size_t q = data.q;
  const std::size_t dim = p + q;
  const auto forms = pencil_forms(data.pencil, p, q);
  const auto& theta3 = data.theta3;

  auto grad_xi = [&](const BasicPolynomial<T>& f) { return gradient(f, 0, p); };
  auto grad_eta = [&](const BasicPolynomial<T>& f) { return gradient(f, p, dim); };

  const auto gx3 = grad_xi(theta3);
  const auto ge3 = grad_eta(theta3);
  const auto gx4 = grad_xi(forms.theta4);
  const auto gx2 = grad_xi(forms.theta2);
  const auto ge2 = grad_eta(forms.theta2);
  const auto ge0 = grad_eta(forms.theta0);

  const auto xi4 = forms.xi_sq * forms.xi_sq;
  const auto xi6 = xi4 * forms.xi_sq;

  // xi^T A_eta^3 xi = <A_eta xi, A_eta^2 xi>.
  const auto a2xi = forms.apply_a_eta(forms.a_eta_xi);
  const auto cubic_form = dot(forms.a_eta_xi, a2xi, dim);

  ResidualSet set;
  set.add(make_residual("er1", dot(forms.tau, ge3, dim), tolerance));
  set.add(make_residual("er2", dot(forms.a_eta_xi, gx3, dim), tolerance));
  set.add(make_residual("eta", cubic_form - forms.eta_sq * forms.psi, tolerance));
  set.add(make_residual("es1", dot(gx4, gx4, dim) + dot(ge3, ge3, dim) - xi6 * T(16), tolerance));
  set.add(make_residual("es2", dot(gx4, gx3, dim) + dot(ge3, ge2, dim), tolerance));
  set.add(make_residual("es3",
                        forms.psi * forms.psi * T(64) + dot(gx4, gx2, dim) * T(2) + dot(ge2, ge2, dim) +
                            dot(gx3, gx3, dim) - xi4 * forms.eta_sq * T(48),
                        tolerance));
  set.add(make_residual("es4", dot(gx3, gx2, dim) + dot(ge3, ge0, dim), tolerance));
  return set;
}

bool PencilReport::passes() const {
  if (q == 1) return cube_identity;
  return trace_free && cube_identity && symmetrized_identity && spectrum_constant && clifford_identity && nu.has_value();
}

template <typename T>
PencilReport check_pencil(const BasicPencil<T>& pencil, double tolerance) {
  if (pencil.empty()) throw InvalidArgument("pencil must contain at least one matrix (q >= 1)");
  const std::size_t p = pencil[0].rows();
  const std::size_t q = pencil.size();
  validate_pencil(pencil, p, q);

  PencilReport report;
  report.p = p;
  report.q = q;
  report.trace_free = true;
  report.cube_identity = true;
  for (const auto& a : pencil) {
    report.trace_free = report.trace_free && near_zero(a.trace(), tolerance);
    report.cube_identity = report.cube_identity && near_zero(a * a * a - a, tolerance);
  }

  const T t0 = (pencil[0] * pencil[0]).trace();
  const auto two_nu = even_integer(t0, tolerance);
  if (two_nu && *two_nu <= static_cast<int>(p)) {
    report.nu = *two_nu / 2;
    report.mu = static_cast<int>(p) - *two_nu;
  }

  if (q == 1) {
    report.symmetrized_identity = true;
    report.spectrum_constant = true;
    report.clifford_identity = report.cube_identity;
    return report;
  }

  report.symmetrized_identity = true;
  for (std::size_t i = 0; i < q && report.symmetrized_identity; ++i) {
    for (std::size_t j = 0; j < q; ++j) {
      if (i == j) continue;
      if (!near_zero(symmetrized_defect(pencil[i], pencil[j], T(1)), tolerance)) {
        report.symmetrized_identity = false;
        break;
      }
    }
  }
  // Orthonormal pairs (s, t) taken from fixed Cayley rotations of R^q.
  std::mt19937_64 rng(0x51ed5eedULL);
  for (int trial = 0; trial < 10 && report.symmetrized_identity; ++trial) {
    const auto u = random_cayley_orthogonal(q, rng);
    std::vector<T> s(q), t(q);
    for (std::size_t k = 0; k < q; ++k) {
      s[k] = coefficient_cast<T>(u(k, 0));
      t[k] = coefficient_cast<T>(u(k, 1));
    }
    const auto as = pencil_combination(pencil, s);
    const auto at = pencil_combination(pencil, t);
    if (!near_zero(symmetrized_defect(as, at, T(1)), tolerance)) report.symmetrized_identity = false;
  }

  report.spectrum_constant = two_nu.has_value();
  for (std::size_t i = 0; i < q && report.spectrum_constant; ++i) {
    for (std::size_t j = i; j < q; ++j) {
      const T tr = (pencil[i] * pencil[j]).trace();
      const T expected = i == j ? t0 : T(0);
      if (!near_zero(T(tr - expected), tolerance)) {
        report.spectrum_constant = false;
        break;
      }
    }
  }

  const auto forms = pencil_forms(pencil, p, q);
  const auto a2xi = forms.apply_a_eta(forms.a_eta_xi);
  const auto defect = dot(forms.a_eta_xi, a2xi, p + q) - forms.eta_sq * forms.psi;
  if constexpr (is_exact_v<T>) {
    report.clifford_identity = defect.is_zero();
  } else {
    report.clifford_identity = defect.max_abs_coefficient() <= tolerance;
  }
  return report;
}

std::pair<int, int> pencil_spectrum(const Pencil& pencil) {
  const auto report = check_pencil(pencil);
  if (!report.passes()) throw InvalidArgument("pencil fails the Clifford-type checks");
  if (!report.nu || !report.mu) throw InvalidArgument("pencil spectrum is not of the form (+1^nu, -1^nu, 0^mu)");
  return {*report.nu, *report.mu};
}

template Residual make_residual<Rational>(std::string, const Polynomial&, double);
template Residual make_residual<double>(std::string, const RealPolynomial&, double);
template Residual check_eikonal<Rational>(const Polynomial&, int, double);
template Residual check_eikonal<double>(const RealPolynomial&, int, double);
template ResidualSet check_system<Rational>(const Polynomial&, const Polynomial&, const Polynomial&, double);
template ResidualSet check_system<double>(const RealPolynomial&, const RealPolynomial&, const RealPolynomial&, double);
template ResidualSet check_system<Rational>(const NormalFormData&, double);
template ResidualSet check_system<double>(const RealNormalFormData&, double);
template ResidualSet check_structure_identities<Rational>(const NormalFormData&, double);
template ResidualSet check_structure_identities<double>(const RealNormalFormData&, double);
template PencilReport check_pencil<Rational>(const Pencil&, double);
template PencilReport check_pencil<double>(const RealPencil&, double);

}  // namespace eikq
