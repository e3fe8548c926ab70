#include "nsym/expansions.hpp"

#include <algorithm>
#include <future>

#include "nsym/combinatorics.hpp"
#include "nsym/diagram.hpp"

namespace nsym {

namespace {

// Signed sum of H_{Delta} over coverings. Hooks with negative Delta are
// skipped: H of a negative subscript is zero, so the whole subtree is.
class CoveringFold {
 public:
  explicit CoveringFold(BasisExpr& out) : out_(out) {}

  void run(const GbprDiagram& d, int sign) {
    if (d.empty()) {
      if (auto index = normalize_h_index(delta_)) out_.add_term(*index, sign);
      return;
    }
    for (const Cell& c : tunnel_cells(d)) descend(d, c, sign);
  }

  void descend(const GbprDiagram& d, Cell c, int sign) {
    TunnelHook h = make_tunnel_hook(d, c);
    if (h.delta < 0) return;
    delta_.push_back(h.delta);
    run(apply_hook(d, h), sign * h.sign);
    delta_.pop_back();
  }

 private:
  BasisExpr& out_;
  IntSeq delta_;
};

BasisExpr fold_coverings(const IntSeq& mu, const IntSeq& nu, const ExpansionOptions& options) {
  check_row_bound(mu.size(), options.max_rows);
  const GbprDiagram d0 = GbprDiagram::build(mu, nu, 0);
  BasisExpr out(Basis::H);
  if (options.jobs <= 1 || d0.empty()) {
    CoveringFold(out).run(d0, 1);
    return out;
  }
  const std::vector<Cell> first = tunnel_cells(d0);
  const std::size_t jobs = std::min<std::size_t>(options.jobs, first.size());
  std::vector<std::future<BasisExpr>> parts;
  for (std::size_t j = 0; j < jobs; ++j) {
    parts.push_back(std::async(std::launch::async, [&, j] {
      BasisExpr part(Basis::H);
      CoveringFold fold(part);
      for (std::size_t i = j; i < first.size(); i += jobs) fold.descend(d0, first[i], 1);
      return part;
    }));
  }
  for (auto& p : parts) out += p.get();
  return out;
}

bool is_nonnegative_partition(const IntSeq& nu) { return is_nonnegative(nu) && is_weakly_decreasing(nu); }

}  // namespace

BasisExpr immaculate_to_H(const IntSeq& mu, const ExpansionOptions& options) {
  return fold_coverings(mu, IntSeq(mu.size(), 0), options);
}

StraightenResult straighten_skew(const SkewShape& shape) {
  StraightenResult r{1, shape};
  IntSeq& mu = r.shape.mu;
  IntSeq& nu = r.shape.nu;
  pad_to_same_length(mu, nu);
  if (!nu.empty()) {
    const int low = *std::min_element(nu.begin(), nu.end());
    if (low < 0) {
      for (int& x : mu) x -= low;
      for (int& x : nu) x -= low;
    }
  }
  for (std::size_t p = 0; p + 1 < nu.size();) {
    if (nu[p] >= nu[p + 1]) {
      ++p;
      continue;
    }
    if (nu[p + 1] == nu[p] + 1) {
      r.sign = 0;
      return r;
    }
    const int lower = nu[p];
    nu[p] = nu[p + 1] - 1;
    nu[p + 1] = lower + 1;
    r.sign = -r.sign;
    p = p == 0 ? 0 : p - 1;
  }
  return r;
}

BasisExpr skew_immaculate_to_H(const SkewShape& shape, const ExpansionOptions& options) {
  SkewShape s = shape;
  pad_to_same_length(s.mu, s.nu);
  check_row_bound(s.mu.size(), options.max_rows);
  if (is_nonnegative_partition(s.nu)) return fold_coverings(s.mu, s.nu, options);
  StraightenResult st = straighten_skew(s);
  if (st.sign == 0) return BasisExpr(Basis::H);
  return fold_coverings(st.shape.mu, st.shape.nu, options).scaled(st.sign);
}

std::vector<PrefixTerm> skew_prefix_decomposition(const IntSeq& mu, int m, const ExpansionOptions& options) {
  const int k = static_cast<int>(mu.size());
  if (m < 1 || m > k) {
    fail(ErrorCode::kInvalidArgument, "prefix length must lie in 1.." + std::to_string(k));
  }
  check_row_bound(mu.size(), options.max_rows);
  const GbprDiagram d0 = GbprDiagram::build(mu, IntSeq(k, 0), 0);
  std::vector<PrefixTerm> out;
  LinearPermutationStream stream(k, m);
  while (auto pi = stream.next()) {
    const std::vector<int>& values = pi->chosen();
    PrefixTerm t;
    t.sign = linear_sign(*pi);
    GbprDiagram d = d0;
    const std::vector<Cell> terminals = terminal_cells_for(values);
    for (int i = 0; i < m; ++i) {
      t.prefix.push_back(mu[i] - (i + 1) + values[i]);
      d = apply_hook(d, make_tunnel_hook(d, terminals[i]));
    }
    t.shape.mu.assign(mu.begin() + m, mu.end());
    t.shape.nu.assign(d.nu().begin() + m, d.nu().end());
    out.push_back(std::move(t));
  }
  return out;
}

namespace {

class MonomialFold {
 public:
  MonomialFold(const Composition& target, BasisExpr& out) : target_(target), out_(out) {}

  void run(const Composition& mu) {
    mu_ = &mu;
    delta_.clear();
    const IntSeq seq = mu.as_seq();
    walk(GbprDiagram::build(seq, IntSeq(seq.size(), 0), 0), 1);
  }

 private:
  void walk(const GbprDiagram& d, int sign) {
    if (d.empty()) {
      if (flatten(delta_) == target_) out_.add_term(*mu_, sign);
      return;
    }
    for (const Cell& c : tunnel_cells(d)) {
      TunnelHook h = make_tunnel_hook(d, c);
      if (h.delta < 0) continue;
      delta_.push_back(h.delta);
      walk(apply_hook(d, h), sign * h.sign);
      delta_.pop_back();
    }
  }

  const Composition& target_;
  BasisExpr& out_;
  const Composition* mu_ = nullptr;
  IntSeq delta_;
};

}  // namespace

BasisExpr monomial_to_dual_immaculate(const Composition& alpha, const ExpansionOptions& options) {
  const int n = alpha.weight();
  check_row_bound(static_cast<std::size_t>(n), options.max_rows);
  BasisExpr out(Basis::dI);
  MonomialFold fold(alpha, out);
  for (const Composition& mu : compositions_of(n)) fold.run(mu);
  return out;
}

BasisExpr forgetful_to_h(const BasisExpr& x) {
  if (x.basis() != Basis::H) fail(ErrorCode::kBasisMismatch, "forgetful map expects an H-basis expression");
  BasisExpr out(Basis::h_sym);
  for (const auto& [index, coeff] : x.terms()) {
    std::vector<int> parts = index.parts();
    std::sort(parts.begin(), parts.end(), std::greater<>());
    out.add_term(Composition(std::move(parts)), coeff);
  }
  return out;
}

}  // namespace nsym
