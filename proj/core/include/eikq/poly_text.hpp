#pragma once

#include <string>
#include <string_view>

#include "eikq/matrix.hpp"
#include "eikq/polynomial.hpp"

namespace eikq {

/// Parses poly-text:
///
///     n <dimension>
///     e_1 ... e_n coefficient      # one term per line, coefficient p or p/q
///
/// `#` starts a comment; blank lines are ignored; terms may come in any
/// order and duplicates are added. Throws ParseError with the line number.
Polynomial parse_poly_text(std::string_view source);

/// Canonical poly-text: terms in graded-lex descending order, coefficients
/// in lowest terms, one trailing newline.
std::string format_poly_text(const Polynomial& f);

/// Rotation file: the dimension n followed by n*n rationals, row-major,
/// separated by arbitrary whitespace. `#` comments allowed.
RationalMatrix parse_rotation_text(std::string_view source);
std::string format_rotation_text(const RationalMatrix& m);

}  // namespace eikq
