#include "eikq/poly_text.hpp"

#include <cctype>
#include <sstream>
#include <vector>

#include "eikq/error.hpp"

namespace eikq {

namespace {

std::string_view strip_comment(std::string_view line) {
  const auto hash = line.find('#');
  if (hash != std::string_view::npos) line = line.substr(0, hash);
  return line;
}

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

int parse_nonnegative_int(std::string_view token, int line, const char* what) {
  if (token.empty()) throw ParseError(std::string("empty ") + what, line);
  long value = 0;
  for (char c : token) {
    if (!std::isdigit(static_cast<unsigned char>(c))) {
      throw ParseError(std::string("non-integer ") + what + " '" + std::string(token) + "'", line);
    }
    value = value * 10 + (c - '0');
    if (value > 1'000'000) throw ParseError(std::string(what) + " too large", line);
  }
  return static_cast<int>(value);
}

Rational parse_coefficient(std::string_view token, int line) {
  try {
    return parse_rational(token);
  } catch (const InvalidArgument& e) {
    throw ParseError(e.what(), line);
  }
}

}  // namespace

Polynomial parse_poly_text(std::string_view source) {
  std::size_t dimension = 0;
  bool have_header = false;
  std::vector<Polynomial::Term> terms;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= source.size()) {
    auto end = source.find('\n', pos);
    if (end == std::string_view::npos) end = source.size();
    const auto line = strip_comment(source.substr(pos, end - pos));
    pos = end + 1;
    ++line_no;
    const auto tokens = split_ws(line);
    if (tokens.empty()) continue;
    if (!have_header) {
      if (tokens.size() != 2 || tokens[0] != "n") throw ParseError("dimension header 'n <dimension>' missing", line_no);
      const int n = parse_nonnegative_int(tokens[1], line_no, "dimension");
      if (n < 1) throw ParseError("dimension must be positive", line_no);
      dimension = static_cast<std::size_t>(n);
      have_header = true;
      continue;
    }
    if (tokens.size() != dimension + 1) {
      throw ParseError("expected " + std::to_string(dimension) + " exponents and a coefficient, got " +
                           std::to_string(tokens.size()) + " fields",
                       line_no);
    }
    std::vector<int> exps(dimension);
    for (std::size_t i = 0; i < dimension; ++i) {
      exps[i] = parse_nonnegative_int(tokens[i], line_no, "exponent");
      if (exps[i] > 255) throw ParseError("exponent exceeds 255", line_no);
    }
    terms.push_back({Monomial(std::span<const int>(exps)), parse_coefficient(tokens[dimension], line_no)});
  }
  if (!have_header) throw ParseError("dimension header 'n <dimension>' missing", 0);
  return Polynomial::from_terms(dimension, std::move(terms));
}

std::string format_poly_text(const Polynomial& f) {
  std::ostringstream out;
  out << "n " << f.dimension() << '\n';
  for (const auto& t : f.terms()) {
    for (std::size_t i = 0; i < f.dimension(); ++i) out << t.monomial[i] << ' ';
    out << to_string(t.coefficient) << '\n';
  }
  return out.str();
}

RationalMatrix parse_rotation_text(std::string_view source) {
  std::vector<std::pair<std::string_view, int>> tokens;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= source.size()) {
    auto end = source.find('\n', pos);
    if (end == std::string_view::npos) end = source.size();
    ++line_no;
    for (auto tok : split_ws(strip_comment(source.substr(pos, end - pos)))) tokens.emplace_back(tok, line_no);
    pos = end + 1;
  }
  if (tokens.empty()) throw ParseError("rotation file is empty", 0);
  const int n = parse_nonnegative_int(tokens[0].first, tokens[0].second, "dimension");
  if (n < 1) throw ParseError("dimension must be positive", tokens[0].second);
  const std::size_t count = static_cast<std::size_t>(n) * static_cast<std::size_t>(n);
  if (tokens.size() != count + 1) {
    throw ParseError("expected " + std::to_string(count) + " matrix entries, got " + std::to_string(tokens.size() - 1),
                     tokens.back().second);
  }
  std::vector<Rational> data;
  data.reserve(count);
  for (std::size_t k = 1; k < tokens.size(); ++k) data.push_back(parse_coefficient(tokens[k].first, tokens[k].second));
  return RationalMatrix(static_cast<std::size_t>(n), static_cast<std::size_t>(n), std::move(data));
}

std::string format_rotation_text(const RationalMatrix& m) {
  std::ostringstream out;
  out << m.rows() << '\n';
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) out << (j ? " " : "") << to_string(m(i, j));
    out << '\n';
  }
  return out.str();
}

}  // namespace eikq
