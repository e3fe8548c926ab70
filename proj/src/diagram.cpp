#include "nsym/diagram.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>
#include <sstream>

#include "nsym/error.hpp"

namespace nsym {

GbprDiagram GbprDiagram::build(IntSeq mu, IntSeq nu, int offset) {
  if (mu.size() != nu.size()) fail(ErrorCode::kInvalidArgument, "diagram: mu and nu lengths differ");
  const int k = static_cast<int>(mu.size());
  if (offset < 0 || offset > k) fail(ErrorCode::kInvalidArgument, "diagram: offset out of range");
  if (!is_nonnegative(nu)) fail(ErrorCode::kInvalidArgument, "diagram: nu has a negative entry " + to_string(nu));
  if (!is_weakly_decreasing(nu, static_cast<std::size_t>(offset))) {
    fail(ErrorCode::kInvalidArgument, "diagram: active part of nu is not weakly decreasing " + to_string(nu));
  }
  GbprDiagram d;
  d.mu_ = std::move(mu);
  d.nu_ = std::move(nu);
  d.offset_ = offset;
  d.blue_.assign(k, 0);
  d.red_.assign(k, 0);
  for (int i = offset; i < k; ++i) {
    const int m = d.mu_[i];
    const int n = d.nu_[i];
    if (m > 0 && n <= m) {
      d.blue_[i] = m - n;
    } else if (m > 0) {
      d.red_[i] = n - m;
    } else {
      d.red_[i] = -m + n;
    }
  }
  return d;
}

int GbprDiagram::grey(int row) const { return is_active(row) ? nu_[row - 1] : 0; }
int GbprDiagram::blue(int row) const { return is_active(row) ? blue_[row - 1] : 0; }
int GbprDiagram::red(int row) const { return is_active(row) ? red_[row - 1] : 0; }

namespace {

// Inclusive column range of boundary cells in an active row.
std::pair<int, int> boundary_range(const GbprDiagram& d, int row) {
  const int lo = d.nu_at(row) + 1;
  if (row == d.first_active_row()) {
    return {lo, std::max(lo, d.grey(row) + d.blue(row) + d.red(row))};
  }
  return {lo, d.nu_at(row - 1) + 1};
}

}  // namespace

std::vector<Cell> boundary_cells(const GbprDiagram& d) {
  std::vector<Cell> out;
  for (int p = d.first_active_row(); p <= d.rows(); ++p) {
    auto [lo, hi] = boundary_range(d, p);
    for (int q = lo; q <= hi; ++q) out.push_back({p, q});
  }
  return out;
}

std::vector<Cell> tunnel_cells(const GbprDiagram& d) {
  std::vector<Cell> out;
  for (int p = d.first_active_row(); p <= d.rows(); ++p) out.push_back({p, d.nu_at(p) + 1});
  return out;
}

TunnelHook make_tunnel_hook(const GbprDiagram& d, Cell terminal) {
  if (!d.is_active(terminal.row) || terminal.col != d.nu_at(terminal.row) + 1) {
    fail(ErrorCode::kInvalidArgument,
         "(" + std::to_string(terminal.row) + "," + std::to_string(terminal.col) + ") is not a tunnel cell");
  }
  TunnelHook h;
  h.start_row = d.first_active_row();
  h.terminal = terminal;
  h.eta.assign(d.rows(), 0);
  for (int p = h.start_row; p <= terminal.row; ++p) {
    auto [lo, hi] = boundary_range(d, p);
    for (int q = lo; q <= hi; ++q) h.cells.push_back({p, q});
    h.eta[p - 1] = hi - lo + 1;
  }
  const int r = h.start_row;
  h.sign = (terminal.row - r) % 2 == 0 ? 1 : -1;
  h.delta = d.spin(r) + (d.nu_at(r) + 1 - terminal.col) + (terminal.row - r);
  return h;
}

GbprDiagram apply_hook(const GbprDiagram& d, const TunnelHook& h) {
  if (d.empty() || h.start_row != d.first_active_row() || static_cast<int>(h.eta.size()) != d.rows()) {
    fail(ErrorCode::kInvalidArgument, "hook does not belong to this diagram");
  }
  IntSeq nu = d.nu();
  for (int i = 0; i < d.rows(); ++i) nu[i] += h.eta[i];
  return GbprDiagram::build(d.mu(), std::move(nu), d.offset() + 1);
}

bool is_edge_connected(std::span<const Cell> cells) {
  if (cells.empty()) return true;
  std::set<Cell> remaining(cells.begin(), cells.end());
  std::queue<Cell> frontier;
  frontier.push(*remaining.begin());
  remaining.erase(remaining.begin());
  while (!frontier.empty()) {
    const Cell c = frontier.front();
    frontier.pop();
    for (Cell n : {Cell{c.row + 1, c.col}, Cell{c.row - 1, c.col}, Cell{c.row, c.col + 1}, Cell{c.row, c.col - 1}}) {
      auto it = remaining.find(n);
      if (it != remaining.end()) {
        frontier.push(n);
        remaining.erase(it);
      }
    }
  }
  return remaining.empty();
}

namespace {

char hook_label(int r) {
  if (r <= 9) return static_cast<char>('0' + r);
  return static_cast<char>('a' + (r - 10));
}

char base_colour(const GbprDiagram& d, int row, int col) {
  const int g = d.grey(row);
  if (col <= g) return 'G';
  if (col <= g + d.blue(row)) return 'B';
  if (col <= g + d.blue(row) + d.red(row)) return 'R';
  return 0;
}

struct Grid {
  // cell text per row (top row first), row numbers alongside
  std::vector<int> row_numbers;
  std::vector<std::vector<std::string>> cells;
  int width = 0;
};

Grid layout(const GbprDiagram& d, std::span<const TunnelHook> overlay) {
  std::map<Cell, int> owner;
  for (const TunnelHook& h : overlay) {
    for (const Cell& c : h.cells) owner[c] = h.start_row;
  }
  Grid g;
  for (int row = d.rows(); row >= d.first_active_row(); --row) {
    const int coloured = d.grey(row) + d.blue(row) + d.red(row);
    int w = std::max(coloured, d.nu_at(row) + 1);
    for (const auto& [cell, r] : owner) {
      if (cell.row == row) w = std::max(w, cell.col);
    }
    std::vector<std::string> line;
    for (int col = 1; col <= w; ++col) {
      char colour = base_colour(d, row, col);
      if (overlay.empty()) {
        line.emplace_back(1, colour ? colour : 'P');
        continue;
      }
      auto it = owner.find({row, col});
      if (!colour) colour = it != owner.end() ? 'P' : '.';
      std::string text(1, colour);
      text += it != owner.end() ? hook_label(it->second) : ' ';
      line.push_back(std::move(text));
    }
    g.width = std::max(g.width, static_cast<int>(line.size()));
    g.row_numbers.push_back(row);
    g.cells.push_back(std::move(line));
  }
  return g;
}

std::string sign_text(int s) { return s > 0 ? "+1" : "-1"; }

std::string render_ascii(const GbprDiagram& d, std::span<const TunnelHook> overlay) {
  const Grid g = layout(d, overlay);
  const int label_width = static_cast<int>(std::to_string(std::max(d.rows(), 1)).size());
  std::ostringstream out;
  for (std::size_t i = 0; i < g.cells.size(); ++i) {
    std::string num = std::to_string(g.row_numbers[i]);
    out << std::string(label_width - num.size(), ' ') << num << " |";
    std::string line;
    for (const auto& c : g.cells[i]) line += " " + c;
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out << line << '\n';
  }
  for (const TunnelHook& h : overlay) {
    out << "hook " << hook_label(h.start_row) << ": rows " << h.start_row << "-" << h.terminal.row << ", terminal ("
        << h.terminal.row << "," << h.terminal.col << "), delta " << h.delta << ", sign " << sign_text(h.sign) << '\n';
  }
  return out.str();
}

std::string render_latex(const GbprDiagram& d, std::span<const TunnelHook> overlay) {
  const Grid g = layout(d, overlay);
  std::ostringstream out;
  out << "\\documentclass{standalone}\n\\begin{document}\n";
  out << "\\begin{tabular}{r|";
  for (int i = 0; i < g.width; ++i) out << 'c';
  out << "}\n";
  for (std::size_t i = 0; i < g.cells.size(); ++i) {
    out << g.row_numbers[i];
    for (int col = 0; col < g.width; ++col) {
      out << " & ";
      if (col < static_cast<int>(g.cells[i].size())) {
        const std::string& c = g.cells[i][col];
        out << c[0];
        if (c.size() > 1 && c[1] != ' ') out << "$_{" << c[1] << "}$";
      }
    }
    out << " \\\\\n";
  }
  out << "\\end{tabular}\n";
  if (!overlay.empty()) {
    out << "\\quad\n\\begin{tabular}{l}\n";
    for (const TunnelHook& h : overlay) {
      out << "$h_{" << hook_label(h.start_row) << "}$: $\\tau=(" << h.terminal.row << "," << h.terminal.col
          << ")$, $\\Delta=" << h.delta << "$, sign $" << (h.sign > 0 ? "+" : "-") << "1$ \\\\\n";
    }
    out << "\\end{tabular}\n";
  }
  out << "\\end{document}\n";
  return out.str();
}

}  // namespace

std::string render(const GbprDiagram& d, std::span<const TunnelHook> overlay, RenderFormat format) {
  return format == RenderFormat::kAscii ? render_ascii(d, overlay) : render_latex(d, overlay);
}

}  // namespace nsym
