#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nsym/combinatorics.hpp"
#include "nsym/diagram.hpp"

namespace nsym {

inline constexpr int kDefaultMaxRows = 10;
// Coverings contribute +-1 each; 12! still fits a 64-bit coefficient.
inline constexpr int kHardMaxRows = 12;

struct TunnelHookCovering {
  IntSeq mu;
  IntSeq nu0;
  std::vector<TunnelHook> hooks;
  IntSeq delta_seq;
  int total_sign = 1;
  std::optional<Permutation> sigma;  // present iff nu0 == 0
  std::vector<IntSeq> nu_trace;      // nu^{(0)} .. nu^{(k)}

  std::vector<Cell> terminal_cells() const;
};

struct EnumerationOptions {
  int max_rows = kDefaultMaxRows;
  // Skip every subtree whose partial covering already has a negative delta.
  // Such coverings contribute H_{neg} = 0 to any expansion.
  bool prune_negative = false;
  // Restrict the first hook to the given bottom-up tunnel cell index.
  std::optional<int> first_choice;
};

void check_row_bound(std::size_t k, int max_rows);

// Depth-first stream over all tunnel hook coverings of D_{mu/nu}; tunnel cells
// are tried bottom-up at each step. nu must be a nonnegative partition.
class CoveringStream {
 public:
  CoveringStream(IntSeq mu, IntSeq nu, EnumerationOptions options = {});

  std::optional<TunnelHookCovering> next();

 private:
  struct Frame {
    GbprDiagram diagram;
    std::vector<Cell> candidates;
    std::size_t next_candidate = 0;
    std::optional<TunnelHook> hook;
  };

  TunnelHookCovering assemble() const;

  IntSeq mu_;
  IntSeq nu0_;
  EnumerationOptions options_;
  std::vector<Frame> stack_;
};

std::vector<TunnelHookCovering> enumerate_coverings(const IntSeq& mu, const IntSeq& nu,
                                                    const EnumerationOptions& options = {});

// Builds the covering whose hooks terminate at the given cells, in order.
// Fails if some cell is not a tunnel cell of the diagram it is applied to.
TunnelHookCovering realize_covering(const IntSeq& mu, const IntSeq& nu, const std::vector<Cell>& terminals);

// tau_r = (sigma_r + m, 1 + m) with m = #{i < r : sigma_i > sigma_r}. Also
// serves linear permutations (first m hooks only).
std::vector<Cell> terminal_cells_for(const std::vector<int>& values);

TunnelHookCovering covering_from_permutation(const IntSeq& mu, const Permutation& sigma);
Permutation permutation_from_covering(const TunnelHookCovering& g);

// f_i: the covering of s_i(sigma), built by moving the two terminal cells.
TunnelHookCovering transpose_covering(const TunnelHookCovering& g, int i);

std::string covering_to_json(const TunnelHookCovering& g);

}  // namespace nsym
