#pragma once

#include <vector>

#include "nsym/expr.hpp"
#include "nsym/thc.hpp"

namespace nsym {

// mu/nu with arbitrary integer entries. Constructors of results always hold
// both sequences at the same length.
struct SkewShape {
  IntSeq mu;
  IntSeq nu;
  friend bool operator==(const SkewShape&, const SkewShape&) = default;
};

struct ExpansionOptions {
  int max_rows = kDefaultMaxRows;
  // Values above 1 split the covering fold by first hook across threads.
  int jobs = 1;
};

BasisExpr immaculate_to_H(const IntSeq& mu, const ExpansionOptions& options = {});

// Any integer nu. Non-partition nu goes through straighten_skew first.
BasisExpr skew_immaculate_to_H(const SkewShape& shape, const ExpansionOptions& options = {});

struct StraightenResult {
  int sign = 1;  // 0 when the shape vanishes
  SkewShape shape;
};

// Shifts away negative nu entries, then bubble-sorts nu with the signed
// column swap until it is a partition.
StraightenResult straighten_skew(const SkewShape& shape);

struct PrefixTerm {
  int sign = 1;
  IntSeq prefix;  // raw H-subscripts for the first m rows
  SkewShape shape;
};

// One term per linear permutation of m values from 1..k, in lexicographic
// order. sum(sign * H_prefix * skew expansion of shape) reassembles the
// immaculate expansion of mu.
std::vector<PrefixTerm> skew_prefix_decomposition(const IntSeq& mu, int m, const ExpansionOptions& options = {});

BasisExpr monomial_to_dual_immaculate(const Composition& alpha, const ExpansionOptions& options = {});

// H_alpha -> h_{sort(alpha)}.
BasisExpr forgetful_to_h(const BasisExpr& x);

}  // namespace nsym
