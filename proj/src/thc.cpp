#include "nsym/thc.hpp"

#include <algorithm>

#include "json.hpp"
#include "nsym/error.hpp"

namespace nsym {

std::vector<Cell> TunnelHookCovering::terminal_cells() const {
  std::vector<Cell> out;
  out.reserve(hooks.size());
  for (const auto& h : hooks) out.push_back(h.terminal);
  return out;
}

void check_row_bound(std::size_t k, int max_rows) {
  const int limit = std::min(max_rows, kHardMaxRows);
  if (static_cast<int>(k) > limit) {
    fail(ErrorCode::kBoundExceeded, "shape has " + std::to_string(k) + " rows; the enumeration bound is " +
                                        std::to_string(limit) + " (raise with --max-k, at most " +
                                        std::to_string(kHardMaxRows) + ")");
  }
}

namespace {

bool all_zero(const IntSeq& s) {
  return std::all_of(s.begin(), s.end(), [](int x) { return x == 0; });
}

void finish(TunnelHookCovering& g) {
  g.total_sign = 1;
  g.delta_seq.clear();
  for (const auto& h : g.hooks) {
    g.delta_seq.push_back(h.delta);
    g.total_sign *= h.sign;
  }
  if (all_zero(g.nu0)) {
    std::vector<int> sigma;
    for (const auto& h : g.hooks) sigma.push_back(h.terminal.row - h.terminal.col + 1);
    g.sigma = Permutation(std::move(sigma));
  } else {
    g.sigma.reset();
  }
}

}  // namespace

CoveringStream::CoveringStream(IntSeq mu, IntSeq nu, EnumerationOptions options)
    : mu_(std::move(mu)), nu0_(std::move(nu)), options_(options) {
  if (nu0_.size() != mu_.size()) fail(ErrorCode::kInvalidArgument, "covering: mu and nu lengths differ");
  check_row_bound(mu_.size(), options_.max_rows);
  if (!is_weakly_decreasing(nu0_)) fail(ErrorCode::kInvalidArgument, "covering: nu must be a partition");
  GbprDiagram d = GbprDiagram::build(mu_, nu0_, 0);
  std::vector<Cell> candidates = tunnel_cells(d);
  if (options_.first_choice) {
    const int idx = *options_.first_choice;
    if (idx < 0 || idx >= static_cast<int>(candidates.size())) {
      candidates.clear();
    } else {
      candidates = {candidates[idx]};
    }
  }
  stack_.push_back(Frame{std::move(d), std::move(candidates), 0, std::nullopt});
}

TunnelHookCovering CoveringStream::assemble() const {
  TunnelHookCovering g;
  g.mu = mu_;
  g.nu0 = nu0_;
  for (std::size_t i = 0; i + 1 < stack_.size(); ++i) g.hooks.push_back(*stack_[i].hook);
  for (const auto& f : stack_) g.nu_trace.push_back(f.diagram.nu());
  finish(g);
  return g;
}

std::optional<TunnelHookCovering> CoveringStream::next() {
  while (!stack_.empty()) {
    Frame& top = stack_.back();
    if (top.diagram.empty()) {
      TunnelHookCovering g = assemble();
      stack_.pop_back();
      return g;
    }
    if (top.next_candidate >= top.candidates.size()) {
      stack_.pop_back();
      continue;
    }
    const Cell choice = top.candidates[top.next_candidate++];
    TunnelHook hook = make_tunnel_hook(top.diagram, choice);
    if (options_.prune_negative && hook.delta < 0) continue;
    GbprDiagram next = apply_hook(top.diagram, hook);
    top.hook = std::move(hook);
    std::vector<Cell> candidates = tunnel_cells(next);
    stack_.push_back(Frame{std::move(next), std::move(candidates), 0, std::nullopt});
  }
  return std::nullopt;
}

std::vector<TunnelHookCovering> enumerate_coverings(const IntSeq& mu, const IntSeq& nu,
                                                    const EnumerationOptions& options) {
  std::vector<TunnelHookCovering> out;
  CoveringStream stream(mu, nu, options);
  while (auto g = stream.next()) out.push_back(std::move(*g));
  return out;
}

TunnelHookCovering realize_covering(const IntSeq& mu, const IntSeq& nu, const std::vector<Cell>& terminals) {
  if (terminals.size() != mu.size()) {
    fail(ErrorCode::kInvalidArgument, "covering needs exactly one terminal cell per row");
  }
  TunnelHookCovering g;
  g.mu = mu;
  g.nu0 = nu;
  GbprDiagram d = GbprDiagram::build(mu, nu, 0);
  g.nu_trace.push_back(d.nu());
  for (const Cell& t : terminals) {
    TunnelHook h = make_tunnel_hook(d, t);
    d = apply_hook(d, h);
    g.nu_trace.push_back(d.nu());
    g.hooks.push_back(std::move(h));
  }
  finish(g);
  return g;
}

std::vector<Cell> terminal_cells_for(const std::vector<int>& values) {
  std::vector<Cell> out;
  for (std::size_t r = 0; r < values.size(); ++r) {
    int m = 0;
    for (std::size_t i = 0; i < r; ++i) {
      if (values[i] > values[r]) ++m;
    }
    out.push_back({values[r] + m, 1 + m});
  }
  return out;
}

TunnelHookCovering covering_from_permutation(const IntSeq& mu, const Permutation& sigma) {
  if (static_cast<std::size_t>(sigma.size()) != mu.size()) {
    fail(ErrorCode::kInvalidArgument, "permutation length differs from shape length");
  }
  return realize_covering(mu, IntSeq(mu.size(), 0), terminal_cells_for(sigma.one_line()));
}

Permutation permutation_from_covering(const TunnelHookCovering& g) {
  if (!g.sigma) fail(ErrorCode::kInvalidArgument, "skew coverings carry no permutation");
  return *g.sigma;
}

TunnelHookCovering transpose_covering(const TunnelHookCovering& g, int i) {
  if (!g.sigma) fail(ErrorCode::kInvalidArgument, "transpose_covering needs a straight (non-skew) covering");
  const int k = static_cast<int>(g.hooks.size());
  if (i < 1 || i >= k) fail(ErrorCode::kInvalidArgument, "transposition index out of range");
  std::vector<Cell> cells = g.terminal_cells();
  const Cell a = cells[i - 1];
  const Cell b = cells[i];
  if (a.row - a.col < b.row - b.col) {
    cells[i - 1] = b;
    cells[i] = {a.row + 1, a.col + 1};
  } else {
    cells[i - 1] = {b.row - 1, b.col - 1};
    cells[i] = a;
  }
  return realize_covering(g.mu, g.nu0, cells);
}

std::string covering_to_json(const TunnelHookCovering& g) {
  nlohmann::ordered_json j;
  j["terminal_cells"] = nlohmann::ordered_json::array();
  for (const Cell& c : g.terminal_cells()) j["terminal_cells"].push_back({c.row, c.col});
  j["delta"] = g.delta_seq;
  j["sign"] = g.total_sign;
  j["sigma"] = g.sigma ? nlohmann::ordered_json(g.sigma->one_line()) : nlohmann::ordered_json(nullptr);
  return j.dump();
}

}  // namespace nsym
