#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "support/printing.hpp"
#include "eikq/analysis.hpp"
#include "eikq/constructors.hpp"
#include "eikq/error.hpp"
#include "eikq/normalform.hpp"
#include "eikq/pencil_search.hpp"

using namespace eikq;

namespace {

Polynomial x(std::size_t n, std::size_t i) { return Polynomial::variable(n, i); }

RationalMatrix transposition(std::size_t n, std::size_t i, std::size_t j) {
  std::vector<std::size_t> perm(n);
  for (std::size_t k = 0; k < n; ++k) perm[k] = k;
  std::swap(perm[i], perm[j]);
  return permutation_matrix(perm);
}

double norm(const std::vector<double>& v) {
  double s = 0;
  for (double c : v) s += c * c;
  return std::sqrt(s);
}

}  // namespace

TEST(SphereMaximize, PrimitiveQuarticPeaksOnAxes) {
  const auto f = polynomial_cast<double>(make_primitive({4, 2, 1}));
  const auto r = sphere_maximize(f);
  EXPECT_TRUE(r.converged);
  EXPECT_NEAR(r.value, 1.0, 1e-12);
  EXPECT_NEAR(norm(r.point), 1.0, 1e-12);
  EXPECT_NEAR(std::fabs(r.point[0]) * std::fabs(r.point[1]), 0.0, 1e-6);
}

TEST(SphereMaximize, RadialQuarticIsConstant) {
  const auto r = sphere_maximize(polynomial_cast<double>(radial_power<Rational>(4, 2)));
  EXPECT_NEAR(r.value, 1.0, 1e-12);
  EXPECT_EQ(r.seed_index, 0);  // every start ties; the first one wins
}

TEST(SphereMaximize, RotatedCanonicalQuartic) {
  std::mt19937_64 rng(7);
  const auto u = random_cayley_orthogonal(5, rng);
  const auto f = polynomial_cast<double>(substitute_linear(make_canonical_quartic(5, 2), u));
  const auto r = sphere_maximize(f);
  EXPECT_NEAR(r.value, 1.0, 1e-9);
  EXPECT_LT(r.gradient_norm, 1e-9);
}

TEST(SphereMaximize, Deterministic) {
  const auto f = polynomial_cast<double>(make_canonical_quartic(4, 1));
  const auto a = sphere_maximize(f, {.seed = 3});
  const auto b = sphere_maximize(f, {.seed = 3});
  EXPECT_EQ(a.point, b.point);
  EXPECT_EQ(a.seed_index, b.seed_index);
}

TEST(SphereMaximize, RejectsBadInput) {
  EXPECT_THROW(sphere_maximize(RealPolynomial(3)), InvalidArgument);
  EXPECT_THROW(sphere_maximize(polynomial_cast<double>(x(2, 0) + pow(x(2, 1), 2))), InvalidArgument);
}

TEST(SplitTheta, PrimitiveTheta) {
  const std::size_t m = 3;  // xi = x1, eta = x2, x3
  const auto xi2 = sum_of_squares<Rational>(m, 0, 1), eta2 = sum_of_squares<Rational>(m, 1, 3);
  const auto parts = split_theta(pow(xi2, 2) - xi2 * eta2 * Rational(6) + pow(eta2, 2), 1, 2);
  EXPECT_EQ(parts.theta4, pow(xi2, 2));
  EXPECT_EQ(parts.theta2, xi2 * eta2 * Rational(-6));
  EXPECT_EQ(parts.theta0, pow(eta2, 2));
  EXPECT_TRUE(parts.theta3.is_zero());
}

TEST(SplitTheta, ForbiddenComponent) {
  EXPECT_THROW(split_theta(x(2, 0) * pow(x(2, 1), 3), 1, 1), NotEikonalEvidence);
}

TEST(SplitTheta, Zero) {
  const auto parts = split_theta(Polynomial(4), 2, 2);
  EXPECT_TRUE(parts.theta0.is_zero() && parts.theta2.is_zero() && parts.theta3.is_zero() && parts.theta4.is_zero());
}

TEST(ExtractNormalForm, PrimitiveBothPresentations) {
  for (std::size_t n = 3; n <= 6; ++n) {
    const auto f = make_primitive({4, static_cast<int>(n), 1});
    // x_n lies in H-perp: eta-heavy presentation with the H line as the -3 block.
    const auto a = extract_normal_form(f, RationalMatrix::identity(n));
    EXPECT_EQ(a.p, n - 2);
    EXPECT_EQ(a.q, 1u);
    // Rotating the H line onto e_n gives the E_{0,n-1} presentation.
    const auto b = extract_normal_form(f, transposition(n, 0, n - 1));
    EXPECT_EQ(b.p, 0u);
    EXPECT_EQ(b.q, n - 1);
    EXPECT_TRUE(b.data.theta3.is_zero());
    EXPECT_EQ(b.arithmetic, Arithmetic::exact);
    for (const auto& e : b.phi_eigenvalues) EXPECT_EQ(e, -3);
  }
}

TEST(ExtractNormalForm, NotEikonalEvidence) {
  const auto f = pow(x(2, 0), 4) + pow(x(2, 1), 4);
  EXPECT_THROW(extract_normal_form(f, transposition(2, 0, 1)), NotEikonalEvidence);
}

TEST(ExtractNormalForm, RotationPreconditions) {
  const auto f = make_primitive({4, 3, 1});
  EXPECT_THROW(extract_normal_form(f, RationalMatrix::identity(3) * Rational(2)), InvalidArgument);
  // (1,1,0)/sqrt(2) is not a unit-value direction of f; a rational rotation sending e_3 to (3/5,4/5,0).
  RationalMatrix r(3, 3, {0, Rational(-4, 5), Rational(3, 5), 0, Rational(3, 5), Rational(4, 5), 1, 0, 0});
  ASSERT_TRUE(is_orthogonal(r));
  EXPECT_THROW(extract_normal_form(f, r), InvalidArgument);
}

TEST(ExtractNormalForm, RoundTripsAssembledData) {
  std::vector<NormalFormData> cases;
  cases.push_back({0, 3, Pencil(3, RationalMatrix(0, 0)), Polynomial(3)});
  cases.push_back({3, 0, {}, Polynomial(3)});
  cases.push_back({2, 1, {RationalMatrix::diagonal({1, -1})}, Polynomial(3)});
  const auto found = search_isoparametric_pencil(3, 2, 1);
  ASSERT_FALSE(found.results.empty());
  cases.push_back(found.results.front());
  for (const auto& d : cases) {
    const auto f = assemble_from_normal_form(d);
    const auto nf = extract_normal_form(f, RationalMatrix::identity(d.dimension()));
    EXPECT_EQ(nf.data, d);
    EXPECT_EQ(nf.p, d.p);
    EXPECT_EQ(nf.q, d.q);
  }
}

TEST(ExtractNormalForm, EikonalInvariantsHold) {
  const auto found = search_isoparametric_pencil(3, 2, 1);
  ASSERT_FALSE(found.results.empty());
  const auto f = assemble_from_normal_form(found.results.front());
  std::mt19937_64 rng(4);
  const auto u = random_cayley_orthogonal(6, rng);
  // f(U^T ...) has its maximum at U e_n.
  const auto g = substitute_linear(f, u.transpose());
  const auto nf = extract_normal_form(g, u);
  const auto forms = pencil_forms(nf.data.pencil, nf.p, nf.q);
  EXPECT_EQ(nf.theta4, forms.theta4);
  EXPECT_EQ(nf.theta2, forms.theta2);
  EXPECT_EQ(nf.theta0, forms.theta0);
  EXPECT_TRUE(laplacian(nf.data.theta3, 0, nf.p).is_zero());
  EXPECT_EQ(assemble_from_normal_form(nf.data), substitute_linear(g, nf.rotation));
}

TEST(ExtractNormalForm, FloatAgreesWithExact) {
  std::mt19937_64 rng(12);
  for (int k : {0, 1, 2}) {
    const auto f = make_canonical_quartic(5, k);
    const auto exact = extract_normal_form(f, RationalMatrix::identity(5));
    std::vector<double> en(5, 0.0);
    en[4] = 1.0;
    const auto fl = extract_normal_form_float_at(polynomial_cast<double>(f), en);
    EXPECT_EQ(fl.arithmetic, Arithmetic::floating);
    ASSERT_EQ(fl.p, exact.p);
    ASSERT_EQ(fl.q, exact.q);
    const auto a = polynomial_cast<double>(assemble_from_normal_form(exact.data));
    const auto b = assemble_from_normal_form(fl.data);
    const auto diff = a - b;
    for (const auto& t : diff.terms()) EXPECT_LT(std::fabs(t.coefficient), 1e-9);
    for (std::size_t i = 0; i < 5; ++i)
      for (std::size_t j = 0; j < 5; ++j)
        EXPECT_NEAR(fl.rotation(i, j), exact.rotation(i, j).get_d(), 1e-9);
  }
}

TEST(ExtractNormalForm, FloatPathOnRotatedInput) {
  std::mt19937_64 rng(8);
  const auto u = random_cayley_orthogonal(5, rng);
  const auto f = polynomial_cast<double>(substitute_linear(make_canonical_quartic(5, 2), u));
  const auto nf = extract_normal_form_float(f);
  EXPECT_EQ(nf.p + nf.q, 4u);
  EXPECT_TRUE(check_eikonal(assemble_from_normal_form(nf.data), 4, 1e-9).zero);
}

TEST(FindExactRotation, Cases) {
  const auto f = make_primitive({4, 4, 1});
  ASSERT_TRUE(find_exact_normal_rotation(f).has_value());
  std::mt19937_64 rng(2);
  const auto u = random_cayley_orthogonal(4, rng);
  const auto g = substitute_linear(make_canonical_quartic(4, 1), u);
  const auto r = find_exact_normal_rotation(g);
  if (r) EXPECT_NO_THROW(extract_normal_form(g, *r));
  EXPECT_FALSE(find_exact_normal_rotation(pow(x(2, 0), 4) + pow(x(2, 1), 4)).has_value());
}

TEST(RationalUnitVector, IsExactlyUnit) {
  const std::vector<double> v{0.6, -0.48, 0.64};
  const auto r = rational_unit_vector(v, 1000);
  Rational s = 0;
  for (const auto& c : r) s += c * c;
  EXPECT_EQ(s, 1);
  for (std::size_t i = 0; i < 3; ++i) EXPECT_NEAR(r[i].get_d(), v[i], 1e-3);
}
