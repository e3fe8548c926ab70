#pragma once

#include <optional>
#include <vector>

#include "nsym/sequence.hpp"

namespace nsym {

// Sorted set of 1-based gap positions between adjacent entries.
using PositionSet = std::vector<int>;

// Joins entries i and i+1 with '+' for every i in `positions`.
IntSeq coarsen(const IntSeq& alpha, const PositionSet& positions);

// Every coarsening of a strong composition, sorted lexicographically.
std::vector<Composition> coarsenings(const Composition& alpha);

// Deletes zero entries. Negative entries are an error.
Composition flatten(const IntSeq& delta);

// Subsets S of [len-1] containing every i-1 with delta_i = 0 and with
// coarsen(delta, S) == target. Requires delta_1 > 0 and delta >= 0.
std::vector<PositionSet> allowable_flat_subsets(const IntSeq& delta, const Composition& target);

// One-line permutation of 1..k.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> one_line);

  static Permutation identity(int k);

  const std::vector<int>& one_line() const noexcept { return one_line_; }
  int size() const noexcept { return static_cast<int>(one_line_.size()); }
  int operator[](std::size_t i) const { return one_line_[i]; }

  // s_i with 1-based i: swaps entries i and i+1.
  Permutation transposed(int i) const;

  friend auto operator<=>(const Permutation&, const Permutation&) = default;
  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> one_line_;
};

// L(sigma)_i = #{j > i : sigma_j < sigma_i}
IntSeq lehmer_code(const Permutation& sigma);
int permutation_sign(const Permutation& sigma);

// Ordered arrangement of m distinct values from {1..k}.
class LinearPermutation {
 public:
  LinearPermutation(std::vector<int> chosen, int universe_size);

  const std::vector<int>& chosen() const noexcept { return chosen_; }
  int universe_size() const noexcept { return universe_size_; }
  int size() const noexcept { return static_cast<int>(chosen_.size()); }

  friend bool operator==(const LinearPermutation&, const LinearPermutation&) = default;

 private:
  std::vector<int> chosen_;
  int universe_size_;
};

// (-1)^delta, delta counting inversions among the chosen entries plus pairs
// (pi_i, q) with q unused and pi_i > q.
int linear_sign(const LinearPermutation& pi);

// Lazily yields all k!/(k-m)! linear permutations in lexicographic order.
class LinearPermutationStream {
 public:
  LinearPermutationStream(int k, int m);
  std::optional<LinearPermutation> next();

 private:
  bool advance();

  int k_;
  int m_;
  std::vector<int> current_;
  std::vector<bool> used_;
  bool started_ = false;
  bool done_ = false;
};

std::vector<LinearPermutation> linear_permutations(int k, int m);

}  // namespace nsym
