#include "eikq/pencil.hpp"

#include <string>

namespace eikq {

template <typename T>
void validate_pencil(const BasicPencil<T>& pencil, std::size_t p, std::size_t q) {
  if (pencil.size() != q) {
    throw DimensionError("pencil has " + std::to_string(pencil.size()) + " matrices, expected " + std::to_string(q));
  }
  for (std::size_t i = 0; i < pencil.size(); ++i) {
    const auto& a = pencil[i];
    if (a.rows() != p || a.cols() != p) throw DimensionError("pencil matrix " + std::to_string(i + 1) + " is not p x p");
    if (!a.is_symmetric()) throw InvalidArgument("pencil matrix " + std::to_string(i + 1) + " is not symmetric");
  }
}

template <typename T>
std::vector<BasicPolynomial<T>> PencilForms<T>::apply_a_eta(const std::vector<BasicPolynomial<T>>& v) const {
  const std::size_t dim = p + q;
  std::vector<BasicPolynomial<T>> out(p, BasicPolynomial<T>(dim));
  for (std::size_t i = 0; i < q; ++i) {
    const auto& a = pencil[i];
    const auto eta_i = BasicPolynomial<T>::variable(dim, p + i);
    for (std::size_t r = 0; r < p; ++r) {
      BasicPolynomial<T> row(dim);
      for (std::size_t c = 0; c < p; ++c) {
        if (!is_zero(a(r, c))) row += v[c] * a(r, c);
      }
      if (!row.is_zero()) out[r] += eta_i * row;
    }
  }
  return out;
}

template <typename T>
PencilForms<T> pencil_forms(const BasicPencil<T>& pencil, std::size_t p, std::size_t q) {
  validate_pencil(pencil, p, q);
  const std::size_t dim = p + q;
  PencilForms<T> forms;
  forms.p = p;
  forms.q = q;
  forms.pencil = pencil;
  forms.xi_sq = sum_of_squares<T>(dim, 0, p);
  forms.eta_sq = sum_of_squares<T>(dim, p, dim);
  forms.psi = BasicPolynomial<T>(dim);
  BasicPolynomial<T> tau_sq(dim);
  for (std::size_t i = 0; i < q; ++i) {
    auto t = quadratic_form(pencil[i], dim, 0);
    forms.psi += BasicPolynomial<T>::variable(dim, p + i) * t;
    tau_sq += t * t;
    forms.tau.push_back(std::move(t));
  }
  std::vector<BasicPolynomial<T>> xi;
  for (std::size_t k = 0; k < p; ++k) xi.push_back(BasicPolynomial<T>::variable(dim, k));
  forms.a_eta_xi = forms.apply_a_eta(xi);
  const auto a_eta_xi_sq = dot(forms.a_eta_xi, forms.a_eta_xi, dim);
  forms.theta4 = forms.xi_sq * forms.xi_sq - tau_sq * T(2);
  forms.theta2 = a_eta_xi_sq * T(8) - forms.xi_sq * forms.eta_sq * T(6);
  forms.theta0 = forms.eta_sq * forms.eta_sq;
  return forms;
}

template <typename T>
BasicPencil<T> pencil_from_psi(const BasicPolynomial<T>& psi, std::size_t p, std::size_t q) {
  if (psi.dimension() != p + q) throw DimensionError("psi must live in p+q variables");
  BasicPencil<T> pencil(q, BasicMatrix<T>(p, p));
  for (const auto& t : psi.terms()) {
    if (t.monomial.degree_in(0, p) != 2 || t.monomial.degree_in(p, p + q) != 1) {
      throw InvalidArgument("psi has a term outside xi^2 (x) eta");
    }
    std::size_t eta = 0;
    std::size_t a = p, b = p;
    for (std::size_t v = 0; v < p + q; ++v) {
      const int e = t.monomial[v];
      if (e == 0) continue;
      if (v >= p) {
        eta = v - p;
      } else if (e == 2) {
        a = b = v;
      } else {
        (a == p ? a : b) = v;
      }
    }
    if (a == b) {
      pencil[eta](a, a) = t.coefficient;
    } else {
      pencil[eta](a, b) = t.coefficient / T(2);
      pencil[eta](b, a) = t.coefficient / T(2);
    }
  }
  return pencil;
}

template struct PencilForms<Rational>;
template struct PencilForms<double>;
template void validate_pencil<Rational>(const Pencil&, std::size_t, std::size_t);
template void validate_pencil<double>(const RealPencil&, std::size_t, std::size_t);
template PencilForms<Rational> pencil_forms<Rational>(const Pencil&, std::size_t, std::size_t);
template PencilForms<double> pencil_forms<double>(const RealPencil&, std::size_t, std::size_t);
template Pencil pencil_from_psi<Rational>(const Polynomial&, std::size_t, std::size_t);
template RealPencil pencil_from_psi<double>(const RealPolynomial&, std::size_t, std::size_t);

}  // namespace eikq
