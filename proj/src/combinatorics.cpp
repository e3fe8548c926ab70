#include "nsym/combinatorics.hpp"

#include <algorithm>

#include "nsym/error.hpp"

namespace nsym {

IntSeq coarsen(const IntSeq& alpha, const PositionSet& positions) {
  const int len = static_cast<int>(alpha.size());
  std::vector<bool> join(alpha.size() + 1, false);
  for (int pos : positions) {
    if (pos < 1 || pos > len - 1) {
      fail(ErrorCode::kInvalidArgument, "coarsening position " + std::to_string(pos) + " outside [1," +
                                            std::to_string(len - 1) + "]");
    }
    join[pos] = true;
  }
  IntSeq out;
  for (int i = 0; i < len; ++i) {
    // join[i] links alpha_i with alpha_{i+1} (1-based), i.e. entry i-1 and i here.
    if (i > 0 && join[i]) {
      out.back() += alpha[i];
    } else {
      out.push_back(alpha[i]);
    }
  }
  return out;
}

std::vector<Composition> coarsenings(const Composition& alpha) {
  if (alpha.empty()) return {Composition{}};
  const int gaps = static_cast<int>(alpha.size()) - 1;
  std::vector<Composition> out;
  out.reserve(std::size_t{1} << gaps);
  for (unsigned mask = 0; mask < (1u << gaps); ++mask) {
    PositionSet s;
    for (int i = 0; i < gaps; ++i) {
      if (mask & (1u << i)) s.push_back(i + 1);
    }
    out.emplace_back(coarsen(alpha.parts(), s));
  }
  std::sort(out.begin(), out.end());
  return out;
}

Composition flatten(const IntSeq& delta) {
  std::vector<int> parts;
  for (int d : delta) {
    if (d < 0) fail(ErrorCode::kInvalidArgument, "flatten: negative entry in " + to_string(delta));
    if (d > 0) parts.push_back(d);
  }
  return Composition(std::move(parts));
}

std::vector<PositionSet> allowable_flat_subsets(const IntSeq& delta, const Composition& target) {
  if (delta.empty() || delta.front() <= 0) {
    fail(ErrorCode::kInvalidArgument, "allowable_flat_subsets: first entry must be positive");
  }
  if (!is_nonnegative(delta)) fail(ErrorCode::kInvalidArgument, "allowable_flat_subsets: negative entry");
  const int gaps = static_cast<int>(delta.size()) - 1;
  unsigned zero_mask = 0;
  for (int i = 1; i < static_cast<int>(delta.size()); ++i) {
    if (delta[i] == 0) zero_mask |= 1u << (i - 1);
  }
  std::vector<PositionSet> out;
  for (unsigned mask = 0; mask < (1u << gaps); ++mask) {
    if ((mask & zero_mask) != zero_mask) continue;
    PositionSet s;
    for (int i = 0; i < gaps; ++i) {
      if (mask & (1u << i)) s.push_back(i + 1);
    }
    if (coarsen(delta, s) == target.parts()) out.push_back(std::move(s));
  }
  return out;
}

Permutation::Permutation(std::vector<int> one_line) : one_line_(std::move(one_line)) {
  const int k = size();
  std::vector<bool> seen(k + 1, false);
  for (int v : one_line_) {
    if (v < 1 || v > k || seen[v]) fail(ErrorCode::kInvalidArgument, "not a permutation: " + to_string(one_line_));
    seen[v] = true;
  }
}

Permutation Permutation::identity(int k) {
  std::vector<int> v(k);
  for (int i = 0; i < k; ++i) v[i] = i + 1;
  return Permutation(std::move(v));
}

Permutation Permutation::transposed(int i) const {
  if (i < 1 || i >= size()) fail(ErrorCode::kInvalidArgument, "transposition index out of range");
  std::vector<int> v = one_line_;
  std::swap(v[i - 1], v[i]);
  return Permutation(std::move(v));
}

IntSeq lehmer_code(const Permutation& sigma) {
  const auto& s = sigma.one_line();
  IntSeq code(s.size(), 0);
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (std::size_t j = i + 1; j < s.size(); ++j) {
      if (s[j] < s[i]) ++code[i];
    }
  }
  return code;
}

int permutation_sign(const Permutation& sigma) {
  int total = 0;
  for (int c : lehmer_code(sigma)) total += c;
  return total % 2 == 0 ? 1 : -1;
}

LinearPermutation::LinearPermutation(std::vector<int> chosen, int universe_size)
    : chosen_(std::move(chosen)), universe_size_(universe_size) {
  if (static_cast<int>(chosen_.size()) > universe_size_) {
    fail(ErrorCode::kInvalidArgument, "linear permutation longer than its universe");
  }
  std::vector<bool> seen(universe_size_ + 1, false);
  for (int v : chosen_) {
    if (v < 1 || v > universe_size_ || seen[v]) {
      fail(ErrorCode::kInvalidArgument, "invalid linear permutation " + to_string(chosen_));
    }
    seen[v] = true;
  }
}

int linear_sign(const LinearPermutation& pi) {
  const auto& c = pi.chosen();
  std::vector<bool> used(pi.universe_size() + 1, false);
  for (int v : c) used[v] = true;
  int delta = 0;
  for (std::size_t i = 0; i < c.size(); ++i) {
    for (std::size_t j = i + 1; j < c.size(); ++j) {
      if (c[i] > c[j]) ++delta;
    }
    for (int q = 1; q < c[i]; ++q) {
      if (!used[q]) ++delta;
    }
  }
  return delta % 2 == 0 ? 1 : -1;
}

LinearPermutationStream::LinearPermutationStream(int k, int m) : k_(k), m_(m), used_(k + 1, false) {
  if (k < 0 || m < 0 || m > k) fail(ErrorCode::kInvalidArgument, "linear permutations need 0 <= m <= k");
}

// Moves current_ to the lexicographic successor; false when exhausted.
bool LinearPermutationStream::advance() {
  while (!current_.empty()) {
    const int last = current_.back();
    current_.pop_back();
    used_[last] = false;
    int v = last + 1;
    while (v <= k_ && used_[v]) ++v;
    if (v <= k_) {
      current_.push_back(v);
      used_[v] = true;
      // Fill the remaining slots with the smallest unused values.
      for (int w = 1; static_cast<int>(current_.size()) < m_ && w <= k_; ++w) {
        if (!used_[w]) {
          current_.push_back(w);
          used_[w] = true;
        }
      }
      return true;
    }
  }
  return false;
}

std::optional<LinearPermutation> LinearPermutationStream::next() {
  if (done_) return std::nullopt;
  if (!started_) {
    started_ = true;
    for (int v = 1; v <= m_; ++v) {
      current_.push_back(v);
      used_[v] = true;
    }
    return LinearPermutation(current_, k_);
  }
  if (m_ == 0 || !advance()) {
    done_ = true;
    return std::nullopt;
  }
  return LinearPermutation(current_, k_);
}

std::vector<LinearPermutation> linear_permutations(int k, int m) {
  std::vector<LinearPermutation> out;
  LinearPermutationStream stream(k, m);
  while (auto pi = stream.next()) out.push_back(std::move(*pi));
  return out;
}

}  // namespace nsym
