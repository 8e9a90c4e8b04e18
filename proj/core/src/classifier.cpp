#include "eikq/classifier.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <string>

#include "eikq/error.hpp"

namespace eikq {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::primitive: return "primitive";
    case Verdict::isoparametric: return "isoparametric";
    case Verdict::not_eikonal: return "not_eikonal";
    case Verdict::inconclusive_float: return "inconclusive_float";
  }
  return "unknown";
}

bool Tau::is_zero() const {
  return std::all_of(components.begin(), components.end(), [](const Polynomial& t) { return t.is_zero(); });
}

Tau compute_tau(const Pencil& pencil) {
  Tau tau;
  for (const auto& a : pencil) {
    if (!a.is_symmetric()) throw InvalidArgument("pencil matrix is not symmetric");
    tau.components.push_back(quadratic_form(a, a.rows(), 0));
  }
  return tau;
}

namespace {

int min_class(int d, int n) { return std::min(d, n - d); }

void set_primitive(ClassificationReport& r, int d, int sign) {
  r.verdict = Verdict::primitive;
  r.dim_h = min_class(d, static_cast<int>(r.n));
  r.sign = sign;
}

bool is_negative_radial(const Polynomial& f) {
  const auto r = radial_power<Rational>(f.dimension(), 2);
  return f + r == Polynomial(f.dimension());
}

// Exact branch selection on an extracted normal form of an exactly eikonal f.
void classify_exact(ClassificationReport& r, const Polynomial& f, const NormalForm& nf) {
  const auto& data = nf.data;
  const int p = static_cast<int>(data.p);
  const int q = static_cast<int>(data.q);
  r.p = p;
  r.q = q;

  for (auto& res : check_system(data).residuals) r.residuals.add(std::move(res));
  for (auto& res : check_structure_identities(data).residuals) r.residuals.add(std::move(res));
  r.residual_summary = r.residuals.max_magnitude();
  if (!r.residuals.all_zero) throw Error("normal form of an eikonal quartic violates a structure identity");

  const bool pencil_zero =
      std::all_of(data.pencil.begin(), data.pencil.end(), [](const RationalMatrix& a) { return a.is_zero(); });
  if (q == 0 || pencil_zero) {
    r.detail = "tau = 0: xi and x_n span H";
    set_primitive(r, p + 1, 1);
    return;
  }
  if (q == 1) {
    const auto& a = data.pencil[0];
    if (!(a * a == RationalMatrix::identity(data.p))) {
      throw Error("q = 1 pencil of an eikonal quartic must square to the identity");
    }
    const Rational plus = (Rational(p) + a.trace()) / 2;
    r.detail = "q = 1 with A_1^2 = 1";
    set_primitive(r, static_cast<int>(plus.get_num().get_si()) + 1, -1);
    return;
  }

  const auto pr = check_pencil(data.pencil);
  if (!pr.passes() || !pr.nu) throw Error("pencil of an eikonal quartic fails the Clifford-type checks");
  const int nu = *pr.nu;
  if (2 * nu != p + 1 - q) throw Error("isoparametric branch requires 2 nu = p + 1 - q");
  r.verdict = Verdict::isoparametric;
  r.nu = nu;
  r.mu = *pr.mu;
  r.m1 = q - 1;
  r.m2 = nu;
  const Rational c(8 * (nu - q + 1));
  const auto second = check_munzner_second(f, 4, Rational(static_cast<long>(r.n), 2) - 1);
  if (!second || second->constant != c) throw Error("Laplacian of the isoparametric quartic is not 8(nu - q + 1)|x|^2");
  r.laplacian_constant = c;
  r.detail = "tau != 0";
}

bool approx_zero(const RealMatrix& a, double tol) { return a.max_abs() <= tol; }

void classify_float(ClassificationReport& r, const Polynomial& f, const ClassifyOptions& options) {
  r.arithmetic = Arithmetic::floating;
  const auto fd = polynomial_cast<double>(f);
  const double reject = options.reject_threshold;
  r.residuals = ResidualSet{};
  const auto eik = check_eikonal(fd, 4, options.tolerance);
  r.residuals.add(eik);

  SphereMaxOptions mopts;
  mopts.seed = options.seed;
  const auto max = sphere_maximize(fd, mopts);
  if (max.value < 0) {
    // An eikonal quartic attains +-1 at every critical point on the sphere;
    // a negative maximum leaves only -|x|^4.
    const auto residual = fd + radial_power<double>(f.dimension(), 2);
    r.residuals.add(make_residual("negative_radial", residual, options.tolerance));
    r.residual_summary = r.residuals.max_magnitude();
    if (r.residual_summary > reject) {
      r.verdict = Verdict::not_eikonal;
      r.detail = "sphere maximum is negative but f is not -|x|^4";
    } else if (r.residual_summary > options.tolerance) {
      r.verdict = Verdict::inconclusive_float;
    } else {
      r.detail = "f = -|x|^4";
      set_primitive(r, 0, -1);
    }
    return;
  }

  RealNormalForm nf;
  try {
    nf = extract_normal_form_float_at(fd, max.point, reject);
  } catch (const NotEikonalEvidence& e) {
    r.verdict = Verdict::not_eikonal;
    r.detail = e.what();
    r.residual_summary = r.residuals.max_magnitude();
    return;
  }
  for (auto& res : check_system(nf.data, options.tolerance).residuals) r.residuals.add(std::move(res));
  for (auto& res : check_structure_identities(nf.data, options.tolerance).residuals) r.residuals.add(std::move(res));
  r.residual_summary = r.residuals.max_magnitude();
  const int p = static_cast<int>(nf.p);
  const int q = static_cast<int>(nf.q);
  r.p = p;
  r.q = q;
  r.float_normal_form = nf;
  if (r.residual_summary > reject) {
    r.verdict = Verdict::not_eikonal;
    r.detail = "float residuals exceed the rejection threshold";
    return;
  }
  if (r.residual_summary > options.tolerance) {
    r.verdict = Verdict::inconclusive_float;
    r.detail = "float residuals between tolerance and rejection threshold";
    return;
  }

  const auto& pencil = nf.data.pencil;
  const bool pencil_zero =
      std::all_of(pencil.begin(), pencil.end(), [&](const RealMatrix& a) { return approx_zero(a, reject); });
  if (q == 0 || pencil_zero) {
    r.detail = "tau = 0: xi and x_n span H";
    set_primitive(r, p + 1, 1);
    return;
  }
  if (q == 1) {
    const auto& a = pencil[0];
    if (!approx_zero(a * a - RealMatrix::identity(nf.p), reject)) {
      r.verdict = Verdict::inconclusive_float;
      r.detail = "q = 1 pencil does not square to the identity";
      return;
    }
    const int plus = static_cast<int>(std::lround((p + a.trace()) / 2.0));
    r.detail = "q = 1 with A_1^2 = 1";
    set_primitive(r, plus + 1, -1);
    return;
  }
  const auto pr = check_pencil(pencil, reject);
  if (!pr.passes() || !pr.nu || 2 * *pr.nu != p + 1 - q) {
    r.verdict = Verdict::inconclusive_float;
    r.detail = "pencil fails the Clifford-type checks in floating point";
    return;
  }
  const int nu = *pr.nu;
  const double c = 8.0 * (nu - q + 1);
  const auto lap = laplacian(fd) - radial_power<double>(f.dimension(), 1) * c;
  if (lap.max_abs_coefficient() > reject) {
    r.verdict = Verdict::inconclusive_float;
    r.detail = "Laplacian is not 8(nu - q + 1)|x|^2";
    return;
  }
  r.verdict = Verdict::isoparametric;
  r.nu = nu;
  r.mu = *pr.mu;
  r.m1 = q - 1;
  r.m2 = nu;
  r.laplacian_constant = Rational(8 * (nu - q + 1));
  r.detail = "tau != 0";
}

}  // namespace

ClassificationReport classify(const Polynomial& f, const ClassifyOptions& options) {
  if (f.dimension() == 0) throw InvalidArgument("classify needs at least one variable");
  if (f.is_zero() || !f.is_homogeneous_of(4)) throw InvalidArgument("classify expects a homogeneous quartic");

  ClassificationReport r;
  r.n = f.dimension();
  const bool forced = options.rotation.has_value() || options.exact_only;

  auto eik = check_eikonal(f, 4);
  const double eik_size = eik.max_coeff;
  const bool eikonal = eik.zero;
  if (!eikonal && (forced || eik_size > options.reject_threshold)) {
    r.residuals.add(std::move(eik));
    r.residual_summary = eik_size;
    r.verdict = Verdict::not_eikonal;
    r.detail = "|grad f|^2 != 16 |x|^6";
    return r;
  }
  if (!eikonal) {
    // Within rounding of an eikonal quartic: decide in floating point.
    classify_float(r, f, options);
    return r;
  }
  r.residuals.add(std::move(eik));

  if (is_negative_radial(f)) {
    r.detail = "f = -|x|^4";
    set_primitive(r, 0, -1);
    return r;
  }

  std::optional<RationalMatrix> rotation = options.rotation;
  if (!rotation) rotation = find_exact_normal_rotation(f, options.seed);
  if (rotation) {
    try {
      auto nf = extract_normal_form(f, *rotation);
      classify_exact(r, f, nf);
      r.normal_form = std::move(nf);
      return r;
    } catch (const ExactnessUnavailable&) {
      if (forced) throw;
    }
  } else if (forced) {
    throw ExactnessUnavailable("no exact rational normal-form rotation found; supply one");
  }
  classify_float(r, f, options);
  return r;
}

bool congruent_primitive(int n, int d1, int d2) {
  if (n < 1) throw InvalidArgument("dimension must be positive");
  if (d1 < 0 || d1 > n || d2 < 0 || d2 > n) throw InvalidArgument("dim H must lie in [0, n]");
  return d1 == d2 || d1 == n - d2;
}

bool LaplacianSignature::same_as(const LaplacianSignature& other, double tolerance) const {
  if (entries.size() != other.entries.size()) return false;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (entries[i].multiplicity != other.entries[i].multiplicity) return false;
    if (exact && other.exact) {
      if (entries[i].value != other.entries[i].value) return false;
    } else if (std::fabs(entries[i].approx - other.entries[i].approx) > tolerance) {
      return false;
    }
  }
  return true;
}

namespace {

LaplacianSignature from_values(std::vector<Rational> values) {
  std::sort(values.begin(), values.end());
  LaplacianSignature sig;
  for (const auto& v : values) {
    if (!sig.entries.empty() && sig.entries.back().value == v) {
      ++sig.entries.back().multiplicity;
    } else {
      sig.entries.push_back({v, v.get_d(), 1});
    }
  }
  return sig;
}

}  // namespace

LaplacianSignature laplacian_signature(const Polynomial& f) {
  if (!f.is_homogeneous_of(4)) throw InvalidArgument("laplacian_signature expects a homogeneous quartic");
  const std::size_t n = f.dimension();
  const auto lap = laplacian(f);
  RationalMatrix l(n, n);
  if (!lap.is_zero()) l = quadratic_form_matrix(lap);
  if (l.is_diagonal()) {
    std::vector<Rational> values;
    for (std::size_t i = 0; i < n; ++i) values.push_back(l(i, i));
    return from_values(std::move(values));
  }

  Eigen::MatrixXd a(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a(i, j) = l(i, j).get_d();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(a, Eigen::EigenvaluesOnly);
  const auto ev = es.eigenvalues();
  const double scale = std::max(1.0, a.cwiseAbs().maxCoeff());

  LaplacianSignature sig;
  sig.exact = true;
  for (Eigen::Index i = 0; i < ev.size(); ++i) {
    if (!sig.entries.empty() && std::fabs(ev(i) - sig.entries.back().approx) <= 1e-7 * scale) {
      ++sig.entries.back().multiplicity;
    } else {
      sig.entries.push_back({Rational(0), ev(i), 1});
    }
  }
  for (auto& e : sig.entries) {
    e.value = best_rational_approximation(e.approx, 1000);
    const auto shifted = l - RationalMatrix::identity(n) * e.value;
    if (rank(shifted) != n - static_cast<std::size_t>(e.multiplicity)) sig.exact = false;
  }
  if (!sig.exact) {
    for (auto& e : sig.entries) e.value = rational_from_double(e.approx);
  } else {
    for (auto& e : sig.entries) e.approx = e.value.get_d();
  }
  return sig;
}

LaplacianSignature primitive_laplacian_signature(int n, int p) {
  if (n < 1 || p < 0 || p > n) throw InvalidArgument("need 0 <= p <= n");
  std::vector<Rational> values;
  for (int i = 0; i < p; ++i) values.emplace_back(8 + 16 * p - 12 * n);
  for (int i = p; i < n; ++i) values.emplace_back(4 * n - 16 * p + 8);
  return from_values(std::move(values));
}

}  // namespace eikq
