#pragma once

#include <ostream>
#include <string>
#include <string_view>

#include "pdlab/poly/polynomial.hpp"

namespace pdlab {

// Text grammar shared by the CLI and golden files:
//
//   poly   := ["+"|"-"] term (("+"|"-") term)*  |  "0"
//   term   := factor ("*" factor)*
//   factor := integer ["/" integer] | variable ["^" integer]
//
// Variables are written by their table names (x[1,2], y[[1,0],[2,1]], w).
// Whitespace is insignificant. print() emits prime-field coefficients as
// symmetric representatives, so parse(print(p)) == p.

std::string to_string(const Monomial& m, const VariableTable& vars);
std::string to_string(const Polynomial& p);

Polynomial parse_polynomial(std::string_view text, const RingPtr& ring);

inline std::ostream& operator<<(std::ostream& out, const Polynomial& p) { return out << to_string(p); }

}  // namespace pdlab
