#pragma once

#include <compare>
#include <span>
#include <string>
#include <vector>

#include "nsym/sequence.hpp"

namespace nsym {

// Rows and columns are 1-based; row 1 is the bottom row.
struct Cell {
  int row = 1;
  int col = 1;

  friend auto operator<=>(const Cell&, const Cell&) = default;
  friend bool operator==(const Cell&, const Cell&) = default;
};

// Partial GBPR diagram D^{(r)}_{mu/nu}. Only colour counts are stored for
// the active rows r+1..k; purple cells are implicit. An offset equal to k
// denotes the empty diagram left after the last hook.
class GbprDiagram {
 public:
  static GbprDiagram build(IntSeq mu, IntSeq nu, int offset = 0);

  const IntSeq& mu() const noexcept { return mu_; }
  const IntSeq& nu() const noexcept { return nu_; }
  int offset() const noexcept { return offset_; }
  int rows() const noexcept { return static_cast<int>(mu_.size()); }
  int first_active_row() const noexcept { return offset_ + 1; }
  bool empty() const noexcept { return offset_ >= rows(); }
  bool is_active(int row) const noexcept { return row > offset_ && row <= rows(); }

  int nu_at(int row) const { return nu_[row - 1]; }
  int grey(int row) const;
  int blue(int row) const;
  int red(int row) const;
  int spin(int row) const { return blue(row) - red(row); }

 private:
  GbprDiagram() = default;

  IntSeq mu_;
  IntSeq nu_;
  int offset_ = 0;
  std::vector<int> blue_;
  std::vector<int> red_;
};

// Boundary cells sorted by (row, col).
std::vector<Cell> boundary_cells(const GbprDiagram& d);

// One tunnel cell (p, nu_p + 1) per active row, bottom-up.
std::vector<Cell> tunnel_cells(const GbprDiagram& d);

struct TunnelHook {
  int start_row = 1;
  Cell terminal;
  std::vector<Cell> cells;  // sorted by (row, col)
  std::vector<int> eta;     // cells covered per row, indexed row-1
  int sign = 1;
  int delta = 0;

  int rows_covered() const noexcept { return terminal.row - start_row + 1; }
};

TunnelHook make_tunnel_hook(const GbprDiagram& d, Cell terminal);

// Next partial diagram: offset + 1 and nu increased by the hook's eta.
GbprDiagram apply_hook(const GbprDiagram& d, const TunnelHook& h);

bool is_edge_connected(std::span<const Cell> cells);

enum class RenderFormat { kAscii, kLatex };

// Grid drawn top row first. Without hooks each cell is one of G/B/R, with an
// explicit P at (i, nu_i + 1) in rows lacking blue and red cells. With hooks
// every cell gets a second character naming the hook covering it and a
// legend lists terminal cell, delta and sign per hook.
std::string render(const GbprDiagram& d, std::span<const TunnelHook> overlay, RenderFormat format);

}  // namespace nsym
