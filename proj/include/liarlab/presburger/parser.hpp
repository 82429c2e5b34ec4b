#ifndef LIARLAB_PRESBURGER_PARSER_HPP
#define LIARLAB_PRESBURGER_PARSER_HPP

#include <string_view>

#include "liarlab/presburger/ast.hpp"

namespace liarlab::presburger {

// Grammar:
//   F ::= 'E' ident '.' F | 'A' ident '.' F | F '->' F | F '|' F | F '&' F
//       | '~' F | '(' F ')' | T '=' T | T '!=' T
//   T ::= T '+' T | ident | digits
// with digits expanding to numerals, whitespace insignificant, precedence
// ~ > & > | > -> and quantifiers extending right. `!=` normalizes to ~(=).
// The only identifier that may occur free is `x`; E and A are reserved.
//
// Throws SyntaxError / FreeVariableError.
FormulaPtr parse_formula(std::string_view text);

// A bare term (used to classify non-formula expressions).
Term parse_term(std::string_view text);

}  // namespace liarlab::presburger

#endif
