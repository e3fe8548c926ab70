#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nsym/expr.hpp"
#include "nsym/thc.hpp"

namespace nsym {

// Square grid of raw H-subscripts.
struct JTMatrix {
  std::vector<std::vector<int>> entries;
  int size() const noexcept { return static_cast<int>(entries.size()); }
  friend bool operator==(const JTMatrix&, const JTMatrix&) = default;
};

// Entry (i,j) is mu_i + j - i, or (mu_i - i) - (nu_j - j) when nu is given.
JTMatrix jacobi_trudi_matrix(const IntSeq& mu, const std::optional<IntSeq>& nu = std::nullopt);

// Row-ordered permutation expansion with normalized monomials.
BasisExpr ndet_expand(const JTMatrix& m, int max_rows = kDefaultMaxRows);

// Commutative determinant of h_{(lambda_i - i) - (nu_j - j)}.
BasisExpr commutative_jacobi_trudi(const IntSeq& lambda, const std::optional<IntSeq>& nu = std::nullopt,
                                   int max_rows = kDefaultMaxRows);

struct CheckReport {
  std::string check;
  int n = 0;
  bool pass = true;
  std::optional<std::string> counterexample;
  std::string to_json() const;
};

// Compares the monomial -> dual immaculate matrix with the transpose of the
// immaculate -> H matrix over compositions of n.
CheckReport duality_transpose_check(int n, int max_rows = kDefaultMaxRows);

}  // namespace nsym
