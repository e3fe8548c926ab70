#pragma once

#include <optional>

#include "nsym/expr.hpp"
#include "nsym/thc.hpp"

namespace nsym {

BasisExpr ribbon_to_H(const BasisExpr& x);
BasisExpr H_to_ribbon(const BasisExpr& x);

// R_alpha * R_beta = R_{alpha.beta} + R_{alpha (.) beta}, where the second
// index merges the last part of alpha with the first part of beta.
BasisExpr ribbon_product(const Composition& alpha, const Composition& beta);

// Smallest J with alpha_l >= l for l <= J and alpha_l == J for l > J.
std::optional<int> im2rib_class(const Composition& alpha);

// sum over sigma of sign(sigma) R_{(alpha_i - i + sigma_i)}, dropping every
// index with a part <= 0. Throws kClassViolation outside the class unless
// `force` is set.
BasisExpr immaculate_to_ribbon_direct(const Composition& alpha, bool force = false,
                                      int max_rows = kDefaultMaxRows);

}  // namespace nsym
