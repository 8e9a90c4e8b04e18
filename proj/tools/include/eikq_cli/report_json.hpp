#pragma once

#include <nlohmann/json.hpp>

#include <string>

#include "eikq/analysis.hpp"
#include "eikq/classifier.hpp"
#include "eikq/normalform.hpp"

namespace eikq::cli {

using Json = nlohmann::ordered_json;

inline constexpr const char* kReportSchema = "eikq-report-1";

/// {name: {zero, max_coeff}}; exact magnitudes as "p/q" strings.
Json residuals_json(const ResidualSet& set);

/// {p, q, phi, pencil, theta3, rotation, arithmetic}.
Json normal_form_json(const NormalForm& nf);
Json normal_form_json(const RealNormalForm& nf);

/// The full classification report, keyed in a fixed order. Absent
/// parameters are null.
Json report_json(const ClassificationReport& report);

/// Poly-text with floating coefficients printed round-trip exact.
std::string format_real_poly_text(const RealPolynomial& f);

}  // namespace eikq::cli
