#include "eikq_cli/report_json.hpp"

#include <cstdio>
#include <sstream>

#include "eikq/poly_text.hpp"

namespace eikq::cli {

namespace {

template <typename V>
Json optional_json(const std::optional<V>& v) {
  return v ? Json(*v) : Json(nullptr);
}

Json value_json(const Rational& r) { return to_string(r); }
Json value_json(double d) { return d; }

template <typename T>
Json matrix_json(const BasicMatrix<T>& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(value_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string poly_text(const Polynomial& f) { return format_poly_text(f); }
std::string poly_text(const RealPolynomial& f) { return format_real_poly_text(f); }

template <typename T>
Json normal_form_json_impl(const BasicNormalForm<T>& nf) {
  Json j;
  j["p"] = nf.p;
  j["q"] = nf.q;
  Json phi = Json::array();
  for (const auto& v : nf.phi_eigenvalues) phi.push_back(value_json(v));
  j["phi"] = std::move(phi);
  Json pencil = Json::array();
  for (const auto& a : nf.data.pencil) pencil.push_back(matrix_json(a));
  j["pencil"] = std::move(pencil);
  j["theta3"] = poly_text(nf.data.theta3);
  j["rotation"] = matrix_json(nf.rotation);
  j["arithmetic"] = to_string(nf.arithmetic);
  return j;
}

}  // namespace

std::string format_real_poly_text(const RealPolynomial& f) {
  std::ostringstream out;
  out << "n " << f.dimension() << '\n';
  char buf[32];
  for (const auto& t : f.terms()) {
    for (std::size_t i = 0; i < f.dimension(); ++i) out << t.monomial[i] << ' ';
    std::snprintf(buf, sizeof buf, "%.17g", t.coefficient);
    out << buf << '\n';
  }
  return out.str();
}

Json residuals_json(const ResidualSet& set) {
  Json j = Json::object();
  for (const auto& r : set.residuals) {
    Json e;
    e["zero"] = r.zero;
    if (r.max_coeff_exact) {
      e["max_coeff"] = to_string(*r.max_coeff_exact);
    } else {
      e["max_coeff"] = r.max_coeff;
    }
    j[r.name] = std::move(e);
  }
  return j;
}

Json normal_form_json(const NormalForm& nf) { return normal_form_json_impl(nf); }
Json normal_form_json(const RealNormalForm& nf) { return normal_form_json_impl(nf); }

Json report_json(const ClassificationReport& r) {
  Json j;
  j["schema"] = kReportSchema;
  j["verdict"] = to_string(r.verdict);
  j["arithmetic"] = to_string(r.arithmetic);
  j["g"] = r.g;
  j["n"] = r.n;
  j["p"] = optional_json(r.p);
  j["q"] = optional_json(r.q);
  j["nu"] = optional_json(r.nu);
  j["mu"] = optional_json(r.mu);
  j["dimH"] = optional_json(r.dim_h);
  j["sign"] = optional_json(r.sign);
  j["m1"] = optional_json(r.m1);
  j["m2"] = optional_json(r.m2);
  j["laplacian_constant"] = r.laplacian_constant ? Json(to_string(*r.laplacian_constant)) : Json(nullptr);
  j["residual_summary"] = r.residual_summary;
  j["residuals"] = residuals_json(r.residuals);
  j["detail"] = r.detail;
  if (r.normal_form) {
    j["normal_form"] = normal_form_json(*r.normal_form);
  } else if (r.float_normal_form) {
    j["normal_form"] = normal_form_json(*r.float_normal_form);
  } else {
    j["normal_form"] = nullptr;
  }
  return j;
}

}  // namespace eikq::cli
