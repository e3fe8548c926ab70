#pragma once

#include <map>
#include <string_view>

#include "nsym/error.hpp"
#include "nsym/sequence.hpp"

namespace nsym {

// H, R: NSym bases. M, dI: QSym bases. h_sym: commutative image in Sym.
enum class Basis { H, R, M, dI, h_sym };

std::string_view basis_label(Basis b);
Basis basis_from_label(std::string_view label);

// Finite formal linear combination over one composition-indexed basis.
// Zero coefficients are never stored and iteration is lexicographic on the
// index. For h_sym every index is a partition.
class BasisExpr {
 public:
  using Terms = std::map<Composition, Coeff>;

  explicit BasisExpr(Basis basis = Basis::H) : basis_(basis) {}

  static BasisExpr unit(Basis basis);
  static BasisExpr term(Basis basis, Composition index, Coeff coeff = 1);

  Basis basis() const noexcept { return basis_; }
  const Terms& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool empty() const noexcept { return terms_.empty(); }

  Coeff coefficient(const Composition& index) const;

  void add_term(const Composition& index, Coeff coeff);
  BasisExpr& operator+=(const BasisExpr& other);
  BasisExpr scaled(Coeff factor) const;

  friend bool operator==(const BasisExpr&, const BasisExpr&) = default;

 private:
  Basis basis_;
  Terms terms_;
};

BasisExpr expr_add(const BasisExpr& a, const BasisExpr& b);
BasisExpr expr_negate(const BasisExpr& a);

// Bilinear extension of index concatenation. Both operands in basis H.
BasisExpr h_multiply(const BasisExpr& a, const BasisExpr& b);

}  // namespace nsym
