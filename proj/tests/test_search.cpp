#include <gtest/gtest.h>

#include "support/printing.hpp"
#include "eikq/analysis.hpp"
#include "eikq/classifier.hpp"
#include "eikq/error.hpp"
#include "eikq/pencil_search.hpp"

using namespace eikq;

TEST(Search, FindsIsoparametricQuarticInDimensionSix) {
  const auto r = search_isoparametric_pencil(3, 2, 1);
  ASSERT_FALSE(r.results.empty());
  EXPECT_LE(r.candidates_examined, 1'000'000u);
  for (const auto& d : r.results) {
    EXPECT_EQ(d.p, 3u);
    EXPECT_EQ(d.q, 2u);
    const auto report = check_pencil(d.pencil);
    EXPECT_TRUE(report.passes());
    EXPECT_EQ(report.nu, 1);
    const auto f = assemble_from_normal_form(d);
    EXPECT_TRUE(check_eikonal(f, 4).zero);
    EXPECT_TRUE(laplacian(f).is_zero());
  }
}

TEST(Search, IsDeterministic) {
  const auto a = search_isoparametric_pencil(3, 2, 1);
  const auto b = search_isoparametric_pencil(3, 2, 1);
  ASSERT_EQ(a.results.size(), b.results.size());
  for (std::size_t i = 0; i < a.results.size(); ++i) EXPECT_EQ(a.results[i], b.results[i]);
  EXPECT_EQ(a.candidates_examined, b.candidates_examined);
}

TEST(Search, MultipleResultsAllEikonal) {
  SearchOptions opts;
  opts.max_results = 3;
  const auto r = search_isoparametric_pencil(3, 2, 1, opts);
  EXPECT_GE(r.results.size(), 1u);
  EXPECT_LE(r.results.size(), 3u);
  for (const auto& d : r.results) EXPECT_TRUE(check_eikonal(assemble_from_normal_form(d), 4).zero);
}

TEST(Search, InfeasibleParameters) {
  EXPECT_THROW(search_isoparametric_pencil(1, 3, 1), InfeasibleParameters);
  EXPECT_THROW(search_isoparametric_pencil(3, 2, 2), InfeasibleParameters);
  EXPECT_THROW(search_isoparametric_pencil(4, 2, 1), InfeasibleParameters);
}

TEST(Search, ZeroPencilCandidatesArePrimitive) {
  SearchOptions opts;
  opts.max_results = 0;
  const auto r = search_isoparametric_pencil(0, 2, 0, opts);
  ASSERT_FALSE(r.results.empty());
  for (const auto& d : r.results) {
    const auto f = assemble_from_normal_form(d);
    EXPECT_TRUE(check_eikonal(f, 4).zero);
    const auto c = classify(f, {.rotation = RationalMatrix::identity(d.dimension())});
    EXPECT_EQ(c.verdict, Verdict::primitive);
  }
}

TEST(Search, BudgetIsRespected) {
  SearchOptions opts;
  opts.budget = 1;
  const auto r = search_isoparametric_pencil(3, 2, 1, opts);
  EXPECT_LE(r.candidates_examined, 1u);
  EXPECT_FALSE(r.exhausted);
}

TEST(StructuredPencils, AllPassPencilChecks) {
  const auto pencils = structured_pencils(3, 2, 1);
  ASSERT_FALSE(pencils.empty());
  for (const auto& p : pencils) EXPECT_EQ(pencil_spectrum(p), std::make_pair(1, 1));
}

TEST(Theta3LinearSolutions, SatisfyHarmonicity) {
  const auto pencils = structured_pencils(3, 2, 1);
  ASSERT_FALSE(pencils.empty());
  for (const auto& t : theta3_linear_solutions(pencils.front(), 3, 2)) {
    EXPECT_TRUE(t.is_homogeneous_of(4));
    EXPECT_TRUE(laplacian(t, 0, 3).is_zero());
  }
}
