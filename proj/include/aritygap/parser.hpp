#ifndef ARITYGAP_PARSER_HPP
#define ARITYGAP_PARSER_HPP

#include <string_view>

#include "aritygap/polynomial.hpp"

namespace aritygap {

/// Parses an expression into a canonical polynomial over the given field.
///
/// Grammar (whitespace insensitive):
///   expr   := ['-'] term (('+' | '-') term)*
///   term   := factor ('*' factor)*
///   factor := coefficient | variable ('^' integer)? | DELTA<n> | '(' expr ')'
/// Variables are x1, x2, ...; they must cover 1..n without gaps.  DELTA<n>
/// expands to the difference product on x1..xn.  Coefficients follow the
/// field's text form: canonical indices for GF(q), "a/b" or integers for Q.
/// Errors carry the byte position of the offending token.
Polynomial parse_polynomial(std::string_view text, const FieldPtr& field);

}  // namespace aritygap

#endif
