#pragma once

#include <string>
#include <string_view>

#include "nsym/expr.hpp"

namespace nsym {

// Text form: "H(3,1,3) - H(3,2,2) + 2*H(1)", "0" when empty, "H()" for the
// unit. The h_sym basis is written with the short label "h".
std::string to_text(const BasisExpr& e);
std::string to_json(const BasisExpr& e);
std::string to_latex(const BasisExpr& e);

// `fallback` is the basis of the result when the input is "0".
BasisExpr parse_text(std::string_view text, Basis fallback = Basis::H);
BasisExpr parse_json(std::string_view text);

}  // namespace nsym
