#include "eikq_cli/cli.hpp"

#include <unistd.h>

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "eikq/analysis.hpp"
#include "eikq/classifier.hpp"
#include "eikq/constructors.hpp"
#include "eikq/error.hpp"
#include "eikq/normalform.hpp"
#include "eikq/pencil_search.hpp"
#include "eikq/poly_text.hpp"
#include "eikq_cli/report_json.hpp"

namespace eikq::cli {

namespace {

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_source(const std::string& path, std::istream& in) {
  std::ostringstream buf;
  if (path == "-") {
    buf << in.rdbuf();
    return buf.str();
  }
  std::ifstream file(path);
  if (!file) throw IoError("cannot open '" + path + "'");
  buf << file.rdbuf();
  if (file.bad()) throw IoError("error reading '" + path + "'");
  return buf.str();
}

void write_target(const std::string& path, const std::string& text) {
  std::ofstream file(path);
  if (!file) throw IoError("cannot write '" + path + "'");
  file << text;
  if (!file) throw IoError("error writing '" + path + "'");
}

struct Painter {
  bool on;
  std::string green(const std::string& s) const { return on ? "\033[32m" + s + "\033[0m" : s; }
  std::string red(const std::string& s) const { return on ? "\033[31m" + s + "\033[0m" : s; }
  std::string yellow(const std::string& s) const { return on ? "\033[33m" + s + "\033[0m" : s; }
};

std::string verdict_text(Verdict v, const Painter& paint) {
  switch (v) {
    case Verdict::primitive:
    case Verdict::isoparametric: return paint.green(to_string(v));
    case Verdict::not_eikonal: return paint.red(to_string(v));
    case Verdict::inconclusive_float: return paint.yellow(to_string(v));
  }
  return to_string(v);
}

template <typename V>
std::string opt_text(const std::optional<V>& v) {
  if (!v) return "-";
  std::ostringstream s;
  s << *v;
  return s.str();
}

void print_residuals(std::ostream& out, const ResidualSet& set) {
  for (const auto& r : set.residuals) {
    out << "  " << r.name << ": " << (r.zero ? "zero" : "nonzero") << "  max|coeff| = "
        << (r.max_coeff_exact ? to_string(*r.max_coeff_exact) : std::to_string(r.max_coeff)) << '\n';
  }
}

int exit_for(Verdict v) {
  switch (v) {
    case Verdict::primitive:
    case Verdict::isoparametric: return kAffirmative;
    case Verdict::not_eikonal: return kNegative;
    case Verdict::inconclusive_float: return kInconclusive;
  }
  return kInconclusive;
}

struct Common {
  bool json = false;
  std::string output;
  std::uint64_t seed = 0;
  double tol = kDefaultResidualTolerance;
};

void add_common(CLI::App* cmd, Common& c, bool with_output) {
  cmd->add_flag("--json", c.json, "Emit a JSON report on stdout");
  if (with_output) cmd->add_option("-o,--output", c.output, "Write canonical text output to this file");
  cmd->add_option("--seed", c.seed, "Seed for every randomized step")->capture_default_str();
  cmd->add_option("--tol", c.tol, "Zero threshold for floating-point residuals")->capture_default_str();
}

void emit(Streams& s, const Common& c, const Json& j, const std::string& text) {
  if (c.json) {
    s.out << j.dump(2) << '\n';
  } else {
    s.out << text;
  }
}

// ---------------------------------------------------------------------------

struct ConstructArgs {
  std::string type = "primitive";
  int g = 4;
  int n = 2;
  int dim_h = -1;
  int k = -1;
  std::string data;
};

int do_construct(const ConstructArgs& a, const Common& c, Streams& s) {
  Polynomial f;
  if (a.type == "primitive") {
    f = make_primitive({a.g, a.n, a.dim_h < 0 ? 1 : a.dim_h});
  } else if (a.type == "canonical") {
    f = make_canonical_quartic(a.n, a.k < 0 ? 0 : a.k);
  } else if (a.type == "normalform") {
    if (a.data.empty()) throw InvalidArgument("--type normalform needs --data");
    f = assemble_from_normal_form(parse_normal_form_data(read_source(a.data, s.in)));
  } else {
    throw InvalidArgument("unknown --type '" + a.type + "'");
  }
  const auto text = format_poly_text(f);
  if (!c.output.empty()) write_target(c.output, text);
  Json j;
  j["schema"] = kReportSchema;
  j["verb"] = "construct";
  j["type"] = a.type;
  j["n"] = f.dimension();
  j["degree"] = f.degree();
  j["terms"] = f.size();
  j["polynomial"] = text;
  if (c.json) {
    s.out << j.dump(2) << '\n';
  } else if (c.output.empty()) {
    s.out << text;
  }
  return kAffirmative;
}

int do_verify(const std::string& file, int g, const Common& c, Streams& s, const Painter& paint) {
  const auto f = parse_poly_text(read_source(file, s.in));
  Json j;
  j["schema"] = kReportSchema;
  j["verb"] = "verify";
  j["g"] = g;
  j["n"] = f.dimension();
  Residual res;
  try {
    res = check_eikonal(f, g);
  } catch (const InvalidArgument& e) {
    j["eikonal"] = false;
    j["error"] = e.what();
    emit(s, c, j, paint.red("not eikonal") + ": " + e.what() + "\n");
    return kNegative;
  }
  ResidualSet set;
  set.add(res);
  const auto second = check_munzner_second(f, g);
  j["eikonal"] = res.zero;
  j["residuals"] = residuals_json(set);
  j["laplacian_constant"] = second ? Json(to_string(second->constant)) : Json(nullptr);
  std::ostringstream text;
  text << (res.zero ? paint.green("eikonal") : paint.red("not eikonal")) << " (g = " << g << ", n = " << f.dimension()
       << ")\n";
  print_residuals(text, set);
  text << "  Delta f = c |x|^(g-2): " << (second ? "c = " + to_string(second->constant) : std::string("no")) << '\n';
  emit(s, c, j, text.str());
  return res.zero ? kAffirmative : kNegative;
}

int do_classify(const std::string& file, const std::string& rotation, bool exact, const Common& c, Streams& s,
                const Painter& paint) {
  const auto f = parse_poly_text(read_source(file, s.in));
  ClassifyOptions opts;
  opts.seed = c.seed;
  opts.tolerance = c.tol;
  opts.exact_only = exact;
  if (!rotation.empty()) opts.rotation = parse_rotation_text(read_source(rotation, s.in));
  const auto r = classify(f, opts);
  std::ostringstream text;
  text << "verdict: " << verdict_text(r.verdict, paint) << " (" << to_string(r.arithmetic) << ")\n";
  text << "n = " << r.n << ", p = " << opt_text(r.p) << ", q = " << opt_text(r.q) << '\n';
  if (r.verdict == Verdict::primitive) {
    text << "dim H class = " << opt_text(r.dim_h) << ", sign = " << opt_text(r.sign) << '\n';
  } else if (r.verdict == Verdict::isoparametric) {
    text << "nu = " << opt_text(r.nu) << ", mu = " << opt_text(r.mu) << ", (m1, m2) = (" << opt_text(r.m1) << ", "
         << opt_text(r.m2) << "), Delta f = " << to_string(*r.laplacian_constant) << " |x|^2\n";
  }
  text << "residual summary: " << r.residual_summary << '\n';
  if (!r.detail.empty()) text << "detail: " << r.detail << '\n';
  auto j = report_json(r);
  if (!c.output.empty()) write_target(c.output, j.dump(2) + "\n");
  emit(s, c, j, text.str());
  return exit_for(r.verdict);
}

int do_normalform(const std::string& file, const std::string& rotation, const Common& c, Streams& s) {
  const auto f = parse_poly_text(read_source(file, s.in));
  std::optional<RationalMatrix> rot;
  if (!rotation.empty()) {
    rot = parse_rotation_text(read_source(rotation, s.in));
  } else {
    rot = find_exact_normal_rotation(f, c.seed);
  }
  Json j;
  std::ostringstream text;
  std::string canonical;
  try {
    if (rot) {
      const auto nf = extract_normal_form(f, *rot);
      j = normal_form_json(nf);
      canonical = format_normal_form_data(nf.data);
      text << "# exact normal form\n" << canonical;
    } else {
      FloatExtractOptions fo;
      fo.maximize.seed = c.seed;
      const auto nf = extract_normal_form_float(polynomial_cast<double>(f), fo);
      j = normal_form_json(nf);
      text << "# float normal form\n" << nf.p << ' ' << nf.q << '\n';
      for (std::size_t i = 0; i < nf.q; ++i) {
        text << "# A_" << (i + 1) << '\n';
        for (std::size_t r = 0; r < nf.p; ++r) {
          for (std::size_t col = 0; col < nf.p; ++col) text << (col ? " " : "") << nf.data.pencil[i](r, col);
          text << '\n';
        }
      }
      text << "# theta3\n" << format_real_poly_text(nf.data.theta3);
      canonical = text.str();
    }
  } catch (const NotEikonalEvidence& e) {
    Json err;
    err["schema"] = kReportSchema;
    err["verb"] = "normalform";
    err["error"] = e.what();
    emit(s, c, err, std::string("not eikonal: ") + e.what() + "\n");
    return kNegative;
  }
  if (!c.output.empty()) write_target(c.output, canonical);
  Json wrapped;
  wrapped["schema"] = kReportSchema;
  wrapped["verb"] = "normalform";
  wrapped["normal_form"] = std::move(j);
  emit(s, c, wrapped, text.str());
  return kAffirmative;
}

int do_congruent(int n, int d1, int d2, const Common& c, Streams& s) {
  const bool yes = congruent_primitive(n, d1, d2);
  Json j;
  j["schema"] = kReportSchema;
  j["verb"] = "congruent";
  j["n"] = n;
  j["d1"] = d1;
  j["d2"] = d2;
  j["congruent"] = yes;
  emit(s, c, j, std::string(yes ? "congruent" : "not congruent") + "\n");
  return yes ? kAffirmative : kNegative;
}

struct SearchArgs {
  int p = 0;
  int q = 0;
  int nu = 0;
  std::size_t budget = 1'000'000;
  std::size_t max_results = 1;
};

int do_search(const SearchArgs& a, const Common& c, Streams& s) {
  SearchOptions opts;
  opts.budget = a.budget;
  opts.seed = c.seed;
  opts.max_results = a.max_results;
  const auto result = search_isoparametric_pencil(a.p, a.q, a.nu, opts);
  Json j;
  j["schema"] = kReportSchema;
  j["verb"] = "search-pencil";
  j["p"] = a.p;
  j["q"] = a.q;
  j["nu"] = a.nu;
  j["candidates_examined"] = result.candidates_examined;
  j["exhausted"] = result.exhausted;
  Json list = Json::array();
  std::ostringstream text;
  text << "# " << result.results.size() << " result(s), " << result.candidates_examined << " candidates examined\n";
  for (const auto& data : result.results) {
    const auto f = assemble_from_normal_form(data);
    const auto second = check_munzner_second(f, 4);
    Json e;
    e["data"] = format_normal_form_data(data);
    e["quartic"] = format_poly_text(f);
    e["laplacian_constant"] = second ? Json(to_string(second->constant)) : Json(nullptr);
    list.push_back(std::move(e));
    text << format_normal_form_data(data);
  }
  j["results"] = std::move(list);
  if (!c.output.empty() && !result.results.empty()) write_target(c.output, format_normal_form_data(result.results[0]));
  emit(s, c, j, text.str());
  return result.results.empty() ? kNegative : kAffirmative;
}

}  // namespace

bool color_enabled() {
  if (const char* v = std::getenv("EIKQ_COLOR"); v && std::string(v) == "0") return false;
  return isatty(STDOUT_FILENO) != 0;
}

int run(const std::vector<std::string>& args, Streams s) {
  CLI::App app{"eikq: exact analysis of eikonal quartic polynomials"};
  app.name("eikq");
  app.require_subcommand(1);
  const Painter paint{s.color};

  Common common;
  ConstructArgs construct;
  SearchArgs search;
  std::string file = "-";
  std::string rotation;
  bool exact = false;
  int g = 4, n = 2, d1 = 0, d2 = 0;

  auto* c_construct = app.add_subcommand("construct", "Build a named polynomial and print it as poly-text");
  add_common(c_construct, common, true);
  c_construct->add_option("--type", construct.type, "primitive | canonical | normalform")
      ->check(CLI::IsMember({"primitive", "canonical", "normalform"}))
      ->capture_default_str();
  c_construct->add_option("--g", construct.g, "Degree of the primitive polynomial")->capture_default_str();
  c_construct->add_option("--n", construct.n, "Number of variables")->capture_default_str();
  auto* dimh = c_construct->add_option("--dimh", construct.dim_h, "dim H for --type primitive");
  auto* k = c_construct->add_option("--k", construct.k, "k for --type canonical");
  dimh->excludes(k);
  c_construct->add_option("--data", construct.data, "Normal-form data file for --type normalform");

  auto* c_verify = app.add_subcommand("verify", "Check |grad f|^2 = g^2 |x|^(2g-2) exactly");
  add_common(c_verify, common, false);
  c_verify->add_option("--g", g, "Degree")->required();
  c_verify->add_option("file", file, "Poly-text input ('-' for stdin)")->capture_default_str();

  auto* c_classify = app.add_subcommand("classify", "Classify an eikonal quartic");
  add_common(c_classify, common, true);
  c_classify->add_option("file", file, "Poly-text input ('-' for stdin)")->capture_default_str();
  c_classify->add_option("--rotation", rotation, "Exact rotation R with f(R e_n) = 1");
  c_classify->add_flag("--exact", exact, "Fail instead of falling back to floating point");

  auto* c_normalform = app.add_subcommand("normalform", "Extract the quartic normal form");
  add_common(c_normalform, common, true);
  c_normalform->add_option("file", file, "Poly-text input ('-' for stdin)")->capture_default_str();
  c_normalform->add_option("--rotation", rotation, "Exact rotation R with f(R e_n) = 1");

  auto* c_congruent = app.add_subcommand("congruent", "Congruence of two primitive quartics h_{4,H}");
  add_common(c_congruent, common, false);
  c_congruent->add_option("--n", n, "Dimension")->required();
  c_congruent->add_option("--d1", d1, "dim H_1")->required();
  c_congruent->add_option("--d2", d2, "dim H_2")->required();

  auto* c_search = app.add_subcommand("search-pencil", "Search isoparametric normal-form data");
  add_common(c_search, common, true);
  c_search->add_option("--p", search.p, "dim of the +1 block")->required();
  c_search->add_option("--q", search.q, "dim of the -3 block")->required();
  c_search->add_option("--nu", search.nu, "Pencil multiplicity nu")->required();
  c_search->add_option("--budget", search.budget, "Candidate limit")->capture_default_str();
  c_search->add_option("--max-results", search.max_results, "Stop after this many results (0 = all)")
      ->capture_default_str();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, s.out, s.err);
    return code == 0 ? kAffirmative : kUsage;
  }

  try {
    if (c_construct->parsed()) return do_construct(construct, common, s);
    if (c_verify->parsed()) return do_verify(file, g, common, s, paint);
    if (c_classify->parsed()) return do_classify(file, rotation, exact, common, s, paint);
    if (c_normalform->parsed()) return do_normalform(file, rotation, common, s);
    if (c_congruent->parsed()) return do_congruent(n, d1, d2, common, s);
    if (c_search->parsed()) return do_search(search, common, s);
  } catch (const IoError& e) {
    s.err << "eikq: " << e.what() << '\n';
    return kIoError;
  } catch (const ExactnessUnavailable& e) {
    s.err << "eikq: exactness unavailable: " << e.what() << '\n';
    return kInconclusive;
  } catch (const ParseError& e) {
    s.err << "eikq: parse error: " << e.what() << '\n';
    return kUsage;
  } catch (const Error& e) {
    s.err << "eikq: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace eikq::cli
