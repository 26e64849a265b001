// Recursive-descent parser for the shared expression grammar.
//
// expr   := ['-'] term (('+'|'-') term)*
// term   := factor ('*' factor)*
// factor := atom ['^' exponent]
// atom   := identifier | number | '(' expr ')'
//
// Identifiers resolve to vertex idempotents (e<vertex>), arrows, or central
// variables. '*' is required between factors. Exponents are non-negative
// integers; the group-word variant additionally accepts negative exponents
// for inverses. Numbers may be integers or rationals written n/d.
#pragma once

#include <stdexcept>

#include "palg/element.hpp"

namespace palg {

struct ParseError : std::runtime_error {
  size_t pos;
  ParseError(const std::string& msg, size_t pos)
      : std::runtime_error(msg + " at position " + std::to_string(pos)), pos(pos) {}
};

AlgebraElement parse_element(const std::string& text, QuiverPtr quiver, Field field);

/// Group words over named generators; letters are encoded +(i+1) for
/// generator i and -(i+1) for its inverse.
std::vector<int> parse_group_word(const std::string& text, const std::vector<std::string>& gens);

}  // namespace palg
