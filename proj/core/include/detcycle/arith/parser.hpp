#pragma once

#include <string_view>

#include "detcycle/arith/ring_elem.hpp"

namespace detcycle::arith {

// Parses a polynomial expression over `ctx`.
//
// Grammar (whitespace insignificant):
//   expr    := ['+'|'-'] term (('+'|'-') term)*
//   term    := factor ('*' factor)*
//   factor  := primary ('^' integer)?
//   primary := integer ['/' integer] | symbol | '(' expr ')' | '-' factor
//
// A '/' is only legal inside a rational literal. e-monomials at or above the
// truncation order are discarded. Throws ParseError with a byte position.
RingElem parse_poly(std::string_view text, const RingPtr& ctx);

}  // namespace detcycle::arith
