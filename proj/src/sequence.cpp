#include "nsym/sequence.hpp"

#include <algorithm>
#include <numeric>

#include "nsym/error.hpp"

namespace nsym {

Composition::Composition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (int p : parts_) {
    if (p < 1) fail(ErrorCode::kInvalidArgument, "composition part must be positive, got " + std::to_string(p));
  }
}

Composition::Composition(std::initializer_list<int> parts) : Composition(std::vector<int>(parts)) {}

int Composition::weight() const noexcept { return std::accumulate(parts_.begin(), parts_.end(), 0); }

bool Composition::is_partition() const noexcept {
  return std::is_sorted(parts_.begin(), parts_.end(), std::greater<>());
}

std::string to_string(const IntSeq& seq) {
  std::string out = "(";
  for (std::size_t i = 0; i < seq.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(seq[i]);
  }
  return out + ")";
}

std::string to_string(const Composition& c) { return to_string(c.parts()); }

std::optional<Composition> normalize_h_index(const IntSeq& raw) {
  std::vector<int> parts;
  parts.reserve(raw.size());
  for (int a : raw) {
    if (a < 0) return std::nullopt;
    if (a > 0) parts.push_back(a);
  }
  return Composition(std::move(parts));
}

bool is_weakly_decreasing(const IntSeq& seq, std::size_t from) {
  for (std::size_t i = from; i + 1 < seq.size(); ++i) {
    if (seq[i] < seq[i + 1]) return false;
  }
  return true;
}

bool is_nonnegative(const IntSeq& seq) {
  return std::all_of(seq.begin(), seq.end(), [](int x) { return x >= 0; });
}

void pad_to_same_length(IntSeq& a, IntSeq& b) {
  const std::size_t n = std::max(a.size(), b.size());
  a.resize(n, 0);
  b.resize(n, 0);
}

namespace {

void compositions_rec(int remaining, std::vector<int>& prefix, std::vector<Composition>& out) {
  if (remaining == 0) {
    out.emplace_back(prefix);
    return;
  }
  for (int part = 1; part <= remaining; ++part) {
    prefix.push_back(part);
    compositions_rec(remaining - part, prefix, out);
    prefix.pop_back();
  }
}

void partitions_rec(int remaining, int max_part, std::vector<int>& prefix, std::vector<Composition>& out) {
  if (remaining == 0) {
    out.emplace_back(prefix);
    return;
  }
  for (int part = std::min(remaining, max_part); part >= 1; --part) {
    prefix.push_back(part);
    partitions_rec(remaining - part, part, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<Composition> compositions_of(int n) {
  if (n < 0) fail(ErrorCode::kInvalidArgument, "compositions_of: negative size");
  std::vector<Composition> out;
  std::vector<int> prefix;
  compositions_rec(n, prefix, out);
  return out;
}

std::vector<Composition> partitions_of(int n) {
  if (n < 0) fail(ErrorCode::kInvalidArgument, "partitions_of: negative size");
  std::vector<Composition> out;
  std::vector<int> prefix;
  partitions_rec(n, n, prefix, out);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace nsym
