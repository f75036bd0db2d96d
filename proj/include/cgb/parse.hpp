#pragma once

#include <string>
#include <string_view>

#include "cgb/poly.hpp"

namespace cgb {

// Text grammar for polynomials: terms joined by `+`/`-`; a term is an
// optional integer or fraction coefficient and `*`-separated powers `name^k`
// with `^k` omitted when k = 1. Examples: "x1^2*x3 - 2/3*x2", "y1*y4 - y2*y3",
// "0". parse(print(f)) == f exactly.
Poly parse_poly(const RingPtr& ring, std::string_view text);
std::string to_string(const Poly& p);
std::string monomial_to_string(const RingSpec& ring, const Exponents& e);

}  // namespace cgb
