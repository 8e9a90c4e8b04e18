#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <nlohmann/json.hpp>
#include <sstream>

#include "support/printing.hpp"
#include "eikq/constructors.hpp"
#include "eikq/poly_text.hpp"
#include "eikq_cli/cli.hpp"

namespace fs = std::filesystem;
using namespace eikq;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run_cli(const std::vector<std::string>& args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  const int code = cli::run(args, {in, out, err, false});
  return {code, out.str(), err.str()};
}

class CliFiles : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() / ("eikq_cli_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) +
                                        "_" + ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  std::string write(const std::string& name, const std::string& text) const {
    std::ofstream(path(name)) << text;
    return path(name);
  }

  static std::string slurp(const std::string& p) {
    std::ifstream in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }

  fs::path dir_;
};

}  // namespace

TEST_F(CliFiles, ConstructThenVerify) {
  const auto f = path("f.poly");
  auto r = run_cli({"construct", "--type", "primitive", "--g", "4", "--n", "6", "--dimh", "2", "-o", f});
  ASSERT_EQ(r.code, cli::kAffirmative) << r.err;
  EXPECT_EQ(slurp(f), format_poly_text(make_primitive({4, 6, 2})));
  r = run_cli({"verify", "--g", "4", f});
  EXPECT_EQ(r.code, cli::kAffirmative) << r.err;
  EXPECT_NE(r.out.find("eikonal"), std::string::npos);
}

TEST_F(CliFiles, ClassifyCanonicalJson) {
  const auto f = write("c.poly", format_poly_text(make_canonical_quartic(5, 1)));
  const auto r = run_cli({"classify", f, "--json"});
  ASSERT_EQ(r.code, cli::kAffirmative) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["schema"], "eikq-report-1");
  EXPECT_EQ(j["verdict"], "primitive");
  EXPECT_EQ(j["dimH"], 1);
  EXPECT_EQ(j["arithmetic"], "exact");
}

TEST_F(CliFiles, JsonIsByteIdenticalAcrossRuns) {
  const auto f = write("c.poly", format_poly_text(make_canonical_quartic(4, 2)));
  const auto a = run_cli({"classify", f, "--json"});
  const auto b = run_cli({"classify", f, "--json"});
  EXPECT_EQ(a.out, b.out);
  const auto o = path("report.json");
  ASSERT_EQ(run_cli({"classify", f, "--json", "-o", o}).code, cli::kAffirmative);
  EXPECT_EQ(slurp(o), a.out);
}

TEST(Cli, VerifyNonEikonalFromStdin) {
  const auto r = run_cli({"verify", "--g", "4", "-"}, "n 2\n4 0 1\n0 4 1\n");
  EXPECT_EQ(r.code, cli::kNegative);
  EXPECT_NE(r.out.find("max|coeff|"), std::string::npos);
}

TEST(Cli, ClassifyNotEikonal) {
  EXPECT_EQ(run_cli({"classify", "-"}, "n 2\n4 0 1\n0 4 1\n").code, cli::kNegative);
}

TEST(Cli, ClassifyInconclusive) {
  auto f = make_canonical_quartic(4, 1) + pow(Polynomial::variable(4, 0), 4) * Rational(1, 100'000'000);
  EXPECT_EQ(run_cli({"classify", "-"}, format_poly_text(f)).code, cli::kInconclusive);
}

TEST_F(CliFiles, ClassifyWithRotation) {
  const auto n = 4;
  const auto f = write("h.poly", format_poly_text(make_primitive({4, n, 1})));
  RationalMatrix swap = permutation_matrix({3, 1, 2, 0});
  const auto rot = write("r.txt", format_rotation_text(swap));
  const auto r = run_cli({"classify", f, "--rotation", rot, "--exact", "--json"});
  ASSERT_EQ(r.code, cli::kAffirmative) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["q"], 3);
  EXPECT_EQ(j["dimH"], 1);
}

TEST_F(CliFiles, ConstructFromNormalFormData) {
  NormalFormData d{2, 1, {RationalMatrix::diagonal({1, -1})}, Polynomial(3)};
  const auto data = write("d.txt", format_normal_form_data(d));
  const auto r = run_cli({"construct", "--type", "normalform", "--data", data});
  ASSERT_EQ(r.code, cli::kAffirmative) << r.err;
  EXPECT_EQ(parse_poly_text(r.out), assemble_from_normal_form(d));
}

TEST(Cli, NormalformOutputs) {
  const auto r = run_cli({"normalform", "-"}, format_poly_text(make_primitive({4, 3, 1})));
  EXPECT_EQ(r.code, cli::kAffirmative) << r.err;
  EXPECT_NE(r.out.find("exact normal form"), std::string::npos);
  const auto bad = run_cli({"normalform", "-"}, "n 2\n4 0 1\n0 4 1\n");
  EXPECT_NE(bad.code, cli::kAffirmative);
}

TEST(Cli, Congruent) {
  EXPECT_EQ(run_cli({"congruent", "--n", "5", "--d1", "1", "--d2", "4"}).code, cli::kAffirmative);
  EXPECT_EQ(run_cli({"congruent", "--n", "5", "--d1", "1", "--d2", "2"}).code, cli::kNegative);
  EXPECT_EQ(run_cli({"congruent", "--n", "5", "--d1", "1", "--d2", "9"}).code, cli::kUsage);
}

TEST_F(CliFiles, SearchPencil) {
  const auto o = path("iso.txt");
  const auto r = run_cli({"search-pencil", "--p", "3", "--q", "2", "--nu", "1", "--json", "-o", o});
  ASSERT_EQ(r.code, cli::kAffirmative) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  ASSERT_FALSE(j["results"].empty());
  EXPECT_EQ(j["results"][0]["laplacian_constant"], "0");
  EXPECT_EQ(parse_normal_form_data(slurp(o)).p, 3u);
  EXPECT_EQ(run_cli({"search-pencil", "--p", "1", "--q", "3", "--nu", "1"}).code, cli::kUsage);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run_cli({}).code, cli::kUsage);
  EXPECT_EQ(run_cli({"frobnicate"}).code, cli::kUsage);
  EXPECT_EQ(run_cli({"verify", "-"}, "n 1\n1 1\n").code, cli::kUsage);  // --g missing
  EXPECT_EQ(run_cli({"construct", "--type", "canonical", "--n", "4", "--k", "1", "--dimh", "1"}).code, cli::kUsage);
  EXPECT_EQ(run_cli({"construct", "--type", "primitive", "--g", "3", "--n", "4", "--dimh", "2"}).code, cli::kUsage);
  const auto parse = run_cli({"verify", "--g", "4", "-"}, "n 2\n1 x 1\n");
  EXPECT_EQ(parse.code, cli::kUsage);
  EXPECT_NE(parse.err.find("line 2"), std::string::npos);
}

TEST(Cli, IoError) {
  const auto r = run_cli({"verify", "--g", "4", "/nonexistent/dir/f.poly"});
  EXPECT_EQ(r.code, cli::kIoError);
  EXPECT_FALSE(r.err.empty());
}

TEST(Cli, ExactRequestFindsRotation) {
  const auto r = run_cli({"classify", "--exact", "-"}, "n 2\n4 0 1\n2 2 -6\n0 4 1\n");
  EXPECT_EQ(r.code, cli::kAffirmative) << r.err;
}
