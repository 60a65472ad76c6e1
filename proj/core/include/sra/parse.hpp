#pragma once

#include <string_view>

#include "sra/algebra.hpp"
#include "sra/cyclo.hpp"

namespace sra {

// Expressions such as "a0*b1*L2 - z3*S1*a1", "(1/2 + i)*s^2*Q0".
// Atoms: integers and p/q literals, i, zN (zeta_N), a0 a1 b0 b1, Rk Sk Lk Qk,
// s (the singlet element), Tab (sl2 generator T^{ab}).  Operators: + - * ^ and
// parentheses.  Errors raise ParseError with the offending position.
AlgElem parse_expression(const AlgebraPtr& alg, std::string_view text);

// Same grammar restricted to scalars: "1/2 + 3*z6^2", "-i".
CycloNum parse_scalar(std::string_view text);

}  // namespace sra
