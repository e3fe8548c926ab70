#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

namespace nsym {

// Raw integer sequence: shapes, skew shapes and H-subscripts before any
// normalization. Entries may be negative.
using IntSeq = std::vector<int>;

// Sequence of strictly positive parts. The empty composition indexes the unit.
class Composition {
 public:
  Composition() = default;
  explicit Composition(std::vector<int> parts);
  Composition(std::initializer_list<int> parts);

  const std::vector<int>& parts() const noexcept { return parts_; }
  std::size_t size() const noexcept { return parts_.size(); }
  bool empty() const noexcept { return parts_.empty(); }
  int operator[](std::size_t i) const { return parts_[i]; }
  auto begin() const noexcept { return parts_.begin(); }
  auto end() const noexcept { return parts_.end(); }

  int weight() const noexcept;
  bool is_partition() const noexcept;
  IntSeq as_seq() const { return parts_; }

  friend auto operator<=>(const Composition&, const Composition&) = default;
  friend bool operator==(const Composition&, const Composition&) = default;

 private:
  std::vector<int> parts_;
};

std::string to_string(const IntSeq& seq);
std::string to_string(const Composition& c);

// H_a = 0 for a < 0 and H_0 = 1: nullopt when any entry is negative,
// otherwise the composition with zero entries deleted.
std::optional<Composition> normalize_h_index(const IntSeq& raw);

bool is_weakly_decreasing(const IntSeq& seq, std::size_t from = 0);
bool is_nonnegative(const IntSeq& seq);

// Pads the shorter sequence with trailing zeros.
void pad_to_same_length(IntSeq& a, IntSeq& b);

// All compositions of n in lexicographic order (the empty one for n = 0).
std::vector<Composition> compositions_of(int n);
// All partitions of n in lexicographic order.
std::vector<Composition> partitions_of(int n);

}  // namespace nsym
