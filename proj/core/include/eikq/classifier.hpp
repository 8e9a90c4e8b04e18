#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "eikq/analysis.hpp"
#include "eikq/normalform.hpp"
#include "eikq/pencil.hpp"

namespace eikq {

enum class Verdict { primitive, isoparametric, not_eikonal, inconclusive_float };

/// "primitive", "isoparametric", "not_eikonal", "inconclusive_float".
std::string to_string(Verdict v);

/// The quadratic forms tau_i = xi^T A_i xi, over the p variables xi.
struct Tau {
  std::vector<Polynomial> components;

  bool is_zero() const;
};

Tau compute_tau(const Pencil& pencil);

struct ClassifyOptions {
  /// Exact rotation R with f(R e_n) = 1; forces the exact path.
  std::optional<RationalMatrix> rotation;
  /// Never fall back to floating point; ExactnessUnavailable instead.
  bool exact_only = false;
  std::uint64_t seed = 0;
  double tolerance = kDefaultResidualTolerance;
  /// Float residuals above this reject eikonality outright.
  double reject_threshold = 1e-6;
};

struct ClassificationReport {
  Verdict verdict = Verdict::not_eikonal;
  int g = 4;
  std::size_t n = 0;
  std::optional<int> p;
  std::optional<int> q;
  std::optional<int> nu;
  std::optional<int> mu;
  std::optional<int> dim_h;  // min(d, n - d) for primitive verdicts
  std::optional<int> sign;   // f is congruent to sign * h_{4,H}
  std::optional<int> m1;
  std::optional<int> m2;
  std::optional<Rational> laplacian_constant;  // Delta f = c |x|^2
  double residual_summary = 0.0;
  Arithmetic arithmetic = Arithmetic::exact;
  ResidualSet residuals;
  std::string detail;

  std::optional<NormalForm> normal_form;
  std::optional<RealNormalForm> float_normal_form;
};

/// Decides whether the homogeneous quartic f is primitive, isoparametric or
/// not eikonal. The exact path is used when f is exactly eikonal and an
/// exact normal-form rotation is supplied or found; otherwise the verdict
/// comes from floating-point extraction and is labeled as such.
/// Throws InvalidArgument for input that is not a homogeneous quartic.
ClassificationReport classify(const Polynomial& f, const ClassifyOptions& options = {});

/// h_{4,H1} and h_{4,H2} in dimension n are congruent iff d1 = d2 or
/// d1 = n - d2. Throws InvalidArgument for dimensions outside [0, n].
bool congruent_primitive(int n, int d1, int d2);

struct SpectrumEntry {
  Rational value;
  double approx = 0.0;
  int multiplicity = 0;
};

struct LaplacianSignature {
  std::vector<SpectrumEntry> entries;  // ascending by value
  bool exact = true;

  /// Equality of multisets (exact values when both are exact).
  bool same_as(const LaplacianSignature& other, double tolerance = 1e-9) const;
};

/// Spectrum of the quadratic form Delta f of a quartic f. Exact when the
/// form is diagonal or when rounded float eigenvalues verify exactly by
/// rank; otherwise float approximations with exact = false.
LaplacianSignature laplacian_signature(const Polynomial& f);

/// Closed form for h_{4,H} with dim H = p in dimension n:
/// 8 + 16p - 12n (multiplicity p) and 4n - 16p + 8 (multiplicity n - p).
LaplacianSignature primitive_laplacian_signature(int n, int p);

}  // namespace eikq
