#include "eikq/constructors.hpp"

#include <cctype>
#include <sstream>
#include <vector>

#include "eikq/error.hpp"
#include "eikq/poly_text.hpp"

namespace eikq {

namespace {

mpz_class binomial(int n, int k) {
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

}  // namespace

Polynomial make_primitive(const PrimitiveSpec& spec) {
  const auto [g, n, dim_h] = spec;
  if (g < 1) throw InvalidArgument("degree g must be at least 1");
  if (n < 1) throw InvalidArgument("dimension n must be positive");
  if (dim_h < 0 || dim_h > n) throw InvalidArgument("dim H must lie in [0, n]");
  if (g % 2 == 1 && dim_h != 1) throw InvalidArgument("odd degree requires dim H = 1");

  const auto dim = static_cast<std::size_t>(n);
  const auto h = static_cast<std::size_t>(dim_h);
  const auto eta_sq = sum_of_squares<Rational>(dim, h, dim);
  Polynomial result(dim);
  if (g % 2 == 0) {
    const auto xi_sq = sum_of_squares<Rational>(dim, 0, h);
    for (int k = 0; 2 * k <= g; ++k) {
      const Rational c = (k % 2 == 0 ? 1 : -1) * Rational(binomial(g, 2 * k));
      result += pow(xi_sq, g / 2 - k) * pow(eta_sq, k) * c;
    }
  } else {
    const auto xi = Polynomial::variable(dim, 0);
    for (int k = 0; 2 * k <= g; ++k) {
      const Rational c = (k % 2 == 0 ? 1 : -1) * Rational(binomial(g, 2 * k));
      result += pow(xi, g - 2 * k) * pow(eta_sq, k) * c;
    }
  }
  return result;
}

Polynomial make_canonical_quartic(int n, int k) {
  if (n < 1) throw InvalidArgument("dimension n must be positive");
  if (k < 0 || 2 * k > n) throw InvalidArgument("k must lie in [0, n/2]");
  const auto dim = static_cast<std::size_t>(n);
  const auto r2 = sum_of_squares<Rational>(dim, 0, dim);
  const auto head = sum_of_squares<Rational>(dim, 0, static_cast<std::size_t>(k));
  const auto tail = sum_of_squares<Rational>(dim, static_cast<std::size_t>(k), dim);
  return r2 * r2 - head * tail * Rational(8);
}

template <typename T>
void BasicNormalFormData<T>::validate() const {
  validate_pencil(pencil, p, q);
  if (theta3.dimension() != p + q) throw DimensionError("theta3 must live in p+q variables");
  for (const auto& t : theta3.terms()) {
    if (t.monomial.degree_in(0, p) != 3 || t.monomial.degree_in(p, p + q) != 1) {
      throw InvalidArgument("theta3 has a term outside xi^3 (x) eta");
    }
  }
}

template <typename T>
NormalFormParts<T> normal_form_parts(const BasicNormalFormData<T>& data) {
  data.validate();
  const auto forms = pencil_forms(data.pencil, data.p, data.q);
  NormalFormParts<T> parts;
  parts.phi = forms.xi_sq - forms.eta_sq * T(3);
  parts.psi = forms.psi;
  parts.theta = forms.theta4 + data.theta3 + forms.theta2 + forms.theta0;
  return parts;
}

template <typename T>
BasicPolynomial<T> assemble_quartic(const BasicPolynomial<T>& phi, const BasicPolynomial<T>& psi,
                                    const BasicPolynomial<T>& theta) {
  const std::size_t m = phi.dimension();
  if (psi.dimension() != m || theta.dimension() != m) throw DimensionError("normal form parts disagree on dimension");
  const std::size_t n = m + 1;
  std::vector<std::size_t> embed(m);
  for (std::size_t i = 0; i < m; ++i) embed[i] = i;
  const auto xn = BasicPolynomial<T>::variable(n, m);
  const auto xn2 = xn * xn;
  return xn2 * xn2 + remap_variables(phi, n, embed) * xn2 * T(2) + remap_variables(psi, n, embed) * xn * T(8) +
         remap_variables(theta, n, embed);
}

template <typename T>
BasicPolynomial<T> assemble_from_normal_form(const BasicNormalFormData<T>& data) {
  const auto parts = normal_form_parts(data);
  return assemble_quartic(parts.phi, parts.psi, parts.theta);
}

std::string format_normal_form_data(const NormalFormData& data) {
  data.validate();
  std::ostringstream out;
  out << data.p << ' ' << data.q << '\n';
  for (std::size_t i = 0; i < data.q; ++i) {
    out << "# A_" << (i + 1) << '\n';
    for (std::size_t r = 0; r < data.p; ++r) {
      for (std::size_t c = 0; c < data.p; ++c) out << (c ? " " : "") << to_string(data.pencil[i](r, c));
      out << '\n';
    }
  }
  out << "# theta3\n";
  out << format_poly_text(data.theta3);
  return out.str();
}

NormalFormData parse_normal_form_data(std::string_view source) {
  // Header and matrix rows are consumed line by line; the remainder is poly-text.
  std::size_t pos = 0;
  int line_no = 0;
  auto next_content_line = [&](std::string_view& line) {
    while (pos <= source.size()) {
      auto end = source.find('\n', pos);
      if (end == std::string_view::npos) end = source.size();
      line = source.substr(pos, end - pos);
      pos = end + 1;
      ++line_no;
      const auto hash = line.find('#');
      if (hash != std::string_view::npos) line = line.substr(0, hash);
      for (char c : line)
        if (!std::isspace(static_cast<unsigned char>(c))) return true;
    }
    return false;
  };
  auto tokens_of = [](std::string_view line) {
    std::vector<std::string> out;
    std::istringstream in{std::string(line)};
    std::string tok;
    while (in >> tok) out.push_back(tok);
    return out;
  };
  auto to_size = [&](const std::string& tok) {
    if (tok.empty() || tok.size() > 6) throw ParseError("bad block dimension '" + tok + "'", line_no);
    for (char c : tok)
      if (!std::isdigit(static_cast<unsigned char>(c))) throw ParseError("bad block dimension '" + tok + "'", line_no);
    return static_cast<std::size_t>(std::stoul(tok));
  };

  std::string_view line;
  if (!next_content_line(line)) throw ParseError("missing 'p q' header", line_no);
  const auto header = tokens_of(line);
  if (header.size() != 2) throw ParseError("header must be 'p q'", line_no);
  NormalFormData data;
  data.p = to_size(header[0]);
  data.q = to_size(header[1]);
  if (data.p + data.q == 0) throw ParseError("p + q must be positive", line_no);
  for (std::size_t i = 0; i < data.q; ++i) {
    RationalMatrix a(data.p, data.p);
    for (std::size_t r = 0; r < data.p; ++r) {
      if (!next_content_line(line)) throw ParseError("missing pencil matrix row", line_no);
      const auto row = tokens_of(line);
      if (row.size() != data.p) throw ParseError("pencil row needs " + std::to_string(data.p) + " entries", line_no);
      for (std::size_t c = 0; c < data.p; ++c) {
        try {
          a(r, c) = parse_rational(row[c]);
        } catch (const InvalidArgument& e) {
          throw ParseError(e.what(), line_no);
        }
      }
    }
    data.pencil.push_back(std::move(a));
  }
  const int offset = line_no;
  try {
    data.theta3 = parse_poly_text(source.substr(std::min(pos, source.size())));
  } catch (const ParseError& e) {
    throw ParseError(std::string("theta3: ") + e.what(), e.line() > 0 ? e.line() + offset : 0);
  }
  try {
    data.validate();
  } catch (const Error& e) {
    throw ParseError(e.what(), 0);
  }
  return data;
}

template struct BasicNormalFormData<Rational>;
template struct BasicNormalFormData<double>;
template NormalFormParts<Rational> normal_form_parts<Rational>(const NormalFormData&);
template NormalFormParts<double> normal_form_parts<double>(const RealNormalFormData&);
template Polynomial assemble_quartic<Rational>(const Polynomial&, const Polynomial&, const Polynomial&);
template RealPolynomial assemble_quartic<double>(const RealPolynomial&, const RealPolynomial&, const RealPolynomial&);
template Polynomial assemble_from_normal_form<Rational>(const NormalFormData&);
template RealPolynomial assemble_from_normal_form<double>(const RealNormalFormData&);

}  // namespace eikq
