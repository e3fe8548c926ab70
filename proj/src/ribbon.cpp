#include "nsym/ribbon.hpp"

#include "nsym/combinatorics.hpp"

namespace nsym {

namespace {

BasisExpr coarsening_sum(const BasisExpr& x, Basis from, Basis to, bool alternating) {
  if (x.basis() != from) {
    fail(ErrorCode::kBasisMismatch, "expected a " + std::string(basis_label(from)) + "-basis expression");
  }
  BasisExpr out(to);
  for (const auto& [alpha, coeff] : x.terms()) {
    for (const Composition& beta : coarsenings(alpha)) {
      const bool odd = (alpha.size() - beta.size()) % 2 == 1;
      out.add_term(beta, alternating && odd ? checked_mul(coeff, -1) : coeff);
    }
  }
  return out;
}

class DirectRibbon {
 public:
  DirectRibbon(const Composition& alpha, BasisExpr& out)
      : alpha_(alpha), out_(out), used_(alpha.size() + 1, false) {}

  void run() { walk(0, 0); }

 private:
  void walk(std::size_t row, int inversions) {
    const int k = static_cast<int>(alpha_.size());
    if (row == alpha_.size()) {
      out_.add_term(Composition(index_), inversions % 2 ? -1 : 1);
      return;
    }
    int larger_used = 0;
    for (int v = k; v >= 1; --v) {
      if (used_[v]) {
        ++larger_used;
        continue;
      }
      const int part = alpha_[row] - static_cast<int>(row + 1) + v;
      // parts only shrink as v decreases
      if (part <= 0) break;
      used_[v] = true;
      index_.push_back(part);
      walk(row + 1, inversions + larger_used);
      index_.pop_back();
      used_[v] = false;
    }
  }

  const Composition& alpha_;
  BasisExpr& out_;
  std::vector<bool> used_;
  std::vector<int> index_;
};

}  // namespace

BasisExpr ribbon_to_H(const BasisExpr& x) { return coarsening_sum(x, Basis::R, Basis::H, true); }

BasisExpr H_to_ribbon(const BasisExpr& x) { return coarsening_sum(x, Basis::H, Basis::R, false); }

BasisExpr ribbon_product(const Composition& alpha, const Composition& beta) {
  if (alpha.empty() || beta.empty()) fail(ErrorCode::kInvalidArgument, "ribbon_product factors must be nonempty");
  std::vector<int> concat = alpha.parts();
  concat.insert(concat.end(), beta.begin(), beta.end());
  std::vector<int> near = alpha.parts();
  near.back() += beta[0];
  near.insert(near.end(), beta.begin() + 1, beta.end());
  BasisExpr out(Basis::R);
  out.add_term(Composition(std::move(concat)), 1);
  out.add_term(Composition(std::move(near)), 1);
  return out;
}

std::optional<int> im2rib_class(const Composition& alpha) {
  const int k = static_cast<int>(alpha.size());
  for (int j = 1; j <= k; ++j) {
    bool ok = true;
    for (int l = 1; l <= k && ok; ++l) ok = l <= j ? alpha[l - 1] >= l : alpha[l - 1] == j;
    if (ok) return j;
  }
  return std::nullopt;
}

BasisExpr immaculate_to_ribbon_direct(const Composition& alpha, bool force, int max_rows) {
  check_row_bound(alpha.size(), max_rows);
  if (!force && !im2rib_class(alpha)) {
    fail(ErrorCode::kClassViolation,
         to_string(alpha) + " is outside the class where the direct ribbon formula is proven; use force");
  }
  BasisExpr out(Basis::R);
  DirectRibbon(alpha, out).run();
  return out;
}

}  // namespace nsym
