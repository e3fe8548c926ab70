#include "nsym/expr.hpp"

#include <string>

namespace nsym {

std::string_view basis_label(Basis b) {
  switch (b) {
    case Basis::H: return "H";
    case Basis::R: return "R";
    case Basis::M: return "M";
    case Basis::dI: return "dI";
    case Basis::h_sym: return "h_sym";
  }
  return "?";
}

Basis basis_from_label(std::string_view label) {
  if (label == "H") return Basis::H;
  if (label == "R") return Basis::R;
  if (label == "M") return Basis::M;
  if (label == "dI") return Basis::dI;
  if (label == "h_sym" || label == "h") return Basis::h_sym;
  fail(ErrorCode::kParse, "unknown basis label '" + std::string(label) + "'");
}

BasisExpr BasisExpr::unit(Basis basis) { return term(basis, Composition{}); }

BasisExpr BasisExpr::term(Basis basis, Composition index, Coeff coeff) {
  BasisExpr e(basis);
  e.add_term(index, coeff);
  return e;
}

Coeff BasisExpr::coefficient(const Composition& index) const {
  auto it = terms_.find(index);
  return it == terms_.end() ? 0 : it->second;
}

void BasisExpr::add_term(const Composition& index, Coeff coeff) {
  if (coeff == 0) return;
  if (basis_ == Basis::h_sym && !index.is_partition()) {
    fail(ErrorCode::kInvalidArgument, "h_sym index must be a partition: " + to_string(index));
  }
  auto [it, inserted] = terms_.try_emplace(index, coeff);
  if (!inserted) {
    it->second = checked_add(it->second, coeff);
    if (it->second == 0) terms_.erase(it);
  }
}

BasisExpr& BasisExpr::operator+=(const BasisExpr& other) {
  if (other.basis_ != basis_) {
    fail(ErrorCode::kBasisMismatch, "cannot add " + std::string(basis_label(other.basis_)) + " expression to " +
                                        std::string(basis_label(basis_)) + " expression");
  }
  for (const auto& [index, coeff] : other.terms_) add_term(index, coeff);
  return *this;
}

BasisExpr BasisExpr::scaled(Coeff factor) const {
  BasisExpr out(basis_);
  if (factor == 0) return out;
  for (const auto& [index, coeff] : terms_) out.terms_.emplace(index, checked_mul(coeff, factor));
  return out;
}

BasisExpr expr_add(const BasisExpr& a, const BasisExpr& b) {
  BasisExpr out = a;
  out += b;
  return out;
}

BasisExpr expr_negate(const BasisExpr& a) { return a.scaled(-1); }

BasisExpr h_multiply(const BasisExpr& a, const BasisExpr& b) {
  if (a.basis() != Basis::H || b.basis() != Basis::H) {
    fail(ErrorCode::kBasisMismatch, "h_multiply expects two H-basis expressions");
  }
  BasisExpr out(Basis::H);
  for (const auto& [ia, ca] : a.terms()) {
    for (const auto& [ib, cb] : b.terms()) {
      std::vector<int> parts = ia.parts();
      parts.insert(parts.end(), ib.begin(), ib.end());
      out.add_term(Composition(std::move(parts)), checked_mul(ca, cb));
    }
  }
  return out;
}

}  // namespace nsym
