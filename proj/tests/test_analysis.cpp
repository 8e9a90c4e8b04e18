#include <gtest/gtest.h>

#include <random>

#include "support/printing.hpp"
#include "eikq/analysis.hpp"
#include "eikq/constructors.hpp"
#include "eikq/error.hpp"
#include "eikq/normalform.hpp"
#include "eikq/pencil_search.hpp"
#include "support/oracle.hpp"

using namespace eikq;

namespace {

Polynomial x(std::size_t n, std::size_t i) { return Polynomial::variable(n, i); }

RationalMatrix diag(std::vector<Rational> d) { return RationalMatrix::diagonal(d); }

RationalMatrix offdiag() { return RationalMatrix(2, 2, {0, 1, 1, 0}); }

}  // namespace

TEST(CheckEikonal, PrimitiveExamples) {
  EXPECT_TRUE(check_eikonal(make_primitive({4, 6, 2}), 4).zero);
  EXPECT_TRUE(check_eikonal(make_primitive({6, 4, 1}), 6).zero);
  EXPECT_TRUE(check_eikonal(x(3, 2), 1).zero);
}

TEST(CheckEikonal, ResidualIsExactDifference) {
  const auto f = pow(x(2, 0), 4);
  const auto r = check_eikonal(f, 4);
  EXPECT_FALSE(r.zero);
  ASSERT_TRUE(r.polynomial.has_value());
  EXPECT_EQ(*r.polynomial, pow(x(2, 0), 6) * Rational(16) - radial_power<Rational>(2, 3) * Rational(16));
}

TEST(CheckEikonal, AgreesWithBruteForceGradient) {
  // Independent expansion of |grad h|^2 - g^2 |x|^(2g-2) from the binomial sum.
  for (int g : {2, 4, 6})
    for (int n = 2; n <= 4; ++n)
      for (int d = 0; d <= n; ++d) {
        const auto h = oracle::primitive(g, n, d);
        const auto res = oracle::grad_norm_sq(h) - oracle::scale(oracle::power(oracle::squares(n, 0, n), g - 1), g * g);
        EXPECT_TRUE(res.c.empty());
        EXPECT_TRUE(check_eikonal(make_primitive({g, n, d}), g).zero);
      }
}

TEST(CheckEikonal, RejectsWrongDegree) {
  EXPECT_THROW(check_eikonal(x(2, 0) + pow(x(2, 1), 2), 2), InvalidArgument);
  EXPECT_THROW(check_eikonal(pow(x(2, 0), 3), 4), InvalidArgument);
}

TEST(CheckEikonal, InvariantUnderOrthogonalSubstitution) {
  std::mt19937_64 rng(17);
  const auto f = make_primitive({4, 4, 1}) + pow(x(4, 2), 4);
  for (int t = 0; t < 5; ++t) {
    const auto u = random_cayley_orthogonal(4, rng);
    const auto r = check_eikonal(f, 4);
    const auto ru = check_eikonal(substitute_linear(f, u), 4);
    EXPECT_EQ(*ru.polynomial, substitute_linear(*r.polynomial, u));
  }
}

TEST(CheckEikonal, FloatPath) {
  const auto f = polynomial_cast<double>(make_primitive({4, 3, 1}));
  const auto r = check_eikonal(f, 4);
  EXPECT_TRUE(r.zero);
  EXPECT_FALSE(r.exact);
}

TEST(MunznerSecond, CartanCubicIsNotRadial) {
  EXPECT_FALSE(check_munzner_second(make_primitive({3, 5, 1}), 3).has_value());
}

TEST(MunznerSecond, RadialQuartic) {
  for (int n = 1; n <= 6; ++n) {
    const auto m = check_munzner_second(radial_power<Rational>(n, 2), 4);
    ASSERT_TRUE(m.has_value());
    EXPECT_EQ(m->constant, 4 * n + 8);
  }
}

TEST(MunznerSecond, MultiplicitiesFromSum) {
  // Delta f = 0 and m1 + m2 = 2 forces (1, 1).
  const auto result = search_isoparametric_pencil(3, 2, 1);
  ASSERT_FALSE(result.results.empty());
  const auto f = assemble_from_normal_form(result.results.front());
  const auto m = check_munzner_second(f, 4, Rational(2));
  ASSERT_TRUE(m.has_value());
  EXPECT_EQ(m->constant, 0);
  ASSERT_TRUE(m->multiplicities.has_value());
  EXPECT_EQ(m->multiplicities->first, 1);
  EXPECT_EQ(m->multiplicities->second, 1);
}

TEST(CheckSystem, PrimitiveNormalFormIsZero) {
  for (std::size_t n = 2; n <= 6; ++n) {
    const auto rest = sum_of_squares<Rational>(n - 1, 0, n - 1);
    const auto set = check_system(rest * Rational(-3), Polynomial(n - 1), pow(rest, 2));
    EXPECT_TRUE(set.all_zero);
    EXPECT_EQ(set.residuals.size(), 5u);
  }
}

TEST(CheckSystem, RadialThetaAloneFailsFirstEquation) {
  const auto r2 = sum_of_squares<Rational>(3, 0, 3);
  const auto set = check_system(Polynomial(3), Polynomial(3), pow(r2, 2));
  EXPECT_FALSE(set.all_zero);
  const auto* eq1 = set.find("eq1");
  ASSERT_NE(eq1, nullptr);
  EXPECT_EQ(*eq1->polynomial, r2 * Rational(-12));
}

TEST(CheckSystem, MixedBlocks) {
  const std::size_t m = 3;  // xi = x1, eta = x2, x3
  const auto xi2 = sum_of_squares<Rational>(m, 0, 1), eta2 = sum_of_squares<Rational>(m, 1, 3);
  const auto set = check_system(xi2 - eta2 * Rational(3), Polynomial(m),
                                pow(xi2, 2) - xi2 * eta2 * Rational(6) + pow(eta2, 2));
  EXPECT_TRUE(set.all_zero);
}

TEST(StructureIdentities, PrimitiveNormalForms) {
  NormalFormData zero{3, 2, {RationalMatrix(3, 3), RationalMatrix(3, 3)}, Polynomial(5)};
  EXPECT_TRUE(check_structure_identities(zero).all_zero);
  NormalFormData single{2, 1, {diag({1, -1})}, Polynomial(3)};
  EXPECT_TRUE(check_structure_identities(single).all_zero);
}

TEST(StructureIdentities, CliffordPairEtaZero) {
  NormalFormData d{2, 2, {diag({1, -1}), offdiag()}, Polynomial(4)};
  const auto set = check_structure_identities(d);
  ASSERT_NE(set.find("eta"), nullptr);
  EXPECT_TRUE(set.find("eta")->zero);
  // A_eta^3 - |eta|^2 A_eta computed with the dense oracle.
  const auto a1 = oracle::mat(diag({1, -1})), a2 = oracle::mat(offdiag());
  for (int s = -3; s <= 3; ++s)
    for (int t = -3; t <= 3; ++t) {
      const auto a = oracle::lin({a1, a2}, {s, t});
      const auto cube = oracle::mul(a, oracle::mul(a, a));
      for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) EXPECT_EQ(cube[i][j], (s * s + t * t) * a[i][j]);
    }
  // With theta3 = 0 the quartic is not eikonal here; the es identities say so.
  EXPECT_FALSE(set.all_zero);
  EXPECT_FALSE(check_eikonal(assemble_from_normal_form(d), 4).zero);
}

TEST(StructureIdentities, ScaledPencilBreaksClifford) {
  NormalFormData d{2, 1, {diag({2, 0})}, Polynomial(3)};
  EXPECT_FALSE(check_structure_identities(d).find("eta")->zero);
}

TEST(CheckPencil, CliffordPair) {
  const auto r = check_pencil(Pencil{diag({1, -1}), offdiag()});
  EXPECT_TRUE(r.passes());
  EXPECT_EQ(r.nu, 1);
  EXPECT_EQ(r.mu, 0);
  EXPECT_TRUE(r.trace_free && r.cube_identity && r.symmetrized_identity && r.spectrum_constant && r.clifford_identity);
}

TEST(CheckPencil, ZeroPencil) {
  const auto r = check_pencil(Pencil{RationalMatrix(3, 3), RationalMatrix(3, 3)});
  EXPECT_TRUE(r.passes());
  EXPECT_EQ(r.nu, 0);
  EXPECT_EQ(r.mu, 3);
}

TEST(CheckPencil, SymmetrizedIdentityFailure) {
  // diag(1,1,-1,-1) next to a random conjugate of itself: each matrix cubes
  // to itself, but the pair violates the symmetrized identity. Verified on
  // the dense oracle first.
  std::mt19937_64 rng(3);
  const auto a = diag({1, 1, -1, -1});
  const auto u = random_cayley_orthogonal(4, rng);
  const auto b = u * a * u.transpose();
  const auto oa = oracle::mat(a), ob = oracle::mat(b);
  const auto lhs = oracle::mul(oracle::mul(oa, oa), ob);
  const auto mid = oracle::mul(oracle::mul(oa, ob), oa);
  const auto rhs = oracle::mul(ob, oracle::mul(oa, oa));
  bool violated = false;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) violated |= lhs[i][j] + mid[i][j] + rhs[i][j] != ob[i][j];
  ASSERT_TRUE(violated);

  const auto r = check_pencil(Pencil{a, b});
  EXPECT_TRUE(r.cube_identity);
  EXPECT_FALSE(r.symmetrized_identity);
  EXPECT_FALSE(r.passes());
  EXPECT_THROW(pencil_spectrum(Pencil{a, b}), InvalidArgument);
}

TEST(CheckPencil, Errors) {
  EXPECT_THROW(check_pencil(Pencil{}), InvalidArgument);
  EXPECT_THROW(check_pencil(Pencil{RationalMatrix(2, 2, {0, 1, 0, 0})}), InvalidArgument);
}

TEST(PencilSpectrum, Examples) {
  EXPECT_EQ(pencil_spectrum(Pencil{diag({1, -1})}), std::make_pair(1, 0));
  Pencil zero(2, RationalMatrix(5, 5));
  EXPECT_EQ(pencil_spectrum(zero), std::make_pair(0, 5));
  const auto found = search_isoparametric_pencil(3, 2, 1);
  ASSERT_FALSE(found.results.empty());
  EXPECT_EQ(pencil_spectrum(found.results.front().pencil), std::make_pair(1, 1));
}

TEST(CheckPencil, TraceIdentitiesInEta) {
  // tr(A_eta) = 0 and tr(A_eta^2) = 2 nu |eta|^2 on a grid of rational eta.
  std::mt19937_64 rng(21);
  const auto u = random_cayley_orthogonal(2, rng);
  const Pencil pencil{u * diag({1, -1}) * u.transpose(), u * offdiag() * u.transpose()};
  ASSERT_TRUE(check_pencil(pencil).passes());
  for (int s = -2; s <= 2; ++s)
    for (int t = -2; t <= 2; ++t) {
      const auto a = oracle::lin({oracle::mat(pencil[0]), oracle::mat(pencil[1])}, {s, t});
      const auto a2 = oracle::mul(a, a);
      EXPECT_EQ(a[0][0] + a[1][1], 0);
      EXPECT_EQ(a2[0][0] + a2[1][1], 2 * (s * s + t * t));
    }
}

TEST(CrossValidation, IdentitiesAgreeWithEikonality) {
  std::mt19937_64 rng(99);
  std::vector<NormalFormData> cases;
  cases.push_back({0, 3, Pencil(3, RationalMatrix(0, 0)), Polynomial(3)});
  cases.push_back({3, 0, {}, Polynomial(3)});
  cases.push_back({2, 1, {diag({1, -1})}, Polynomial(3)});
  cases.push_back({2, 2, {diag({1, -1}), offdiag()}, Polynomial(4)});
  cases.push_back({2, 1, {diag({2, 0})}, Polynomial(3)});
  const auto found = search_isoparametric_pencil(3, 2, 1);
  ASSERT_FALSE(found.results.empty());
  auto iso = found.results.front();
  cases.push_back(iso);
  iso.theta3 = iso.theta3 * Rational(1, 2);
  cases.push_back(iso);
  for (const auto& d : cases) {
    const bool identities = check_system(d).all_zero && check_structure_identities(d).all_zero;
    EXPECT_EQ(identities, check_eikonal(assemble_from_normal_form(d), 4).zero);
  }
}
