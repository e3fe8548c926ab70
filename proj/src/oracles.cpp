#include "nsym/oracles.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "json.hpp"
#include "nsym/expansions.hpp"

namespace nsym {

JTMatrix jacobi_trudi_matrix(const IntSeq& mu, const std::optional<IntSeq>& nu) {
  IntSeq top = mu;
  IntSeq bottom = nu.value_or(IntSeq(mu.size(), 0));
  pad_to_same_length(top, bottom);
  const int k = static_cast<int>(top.size());
  JTMatrix m;
  m.entries.assign(k, std::vector<int>(k));
  for (int i = 1; i <= k; ++i) {
    for (int j = 1; j <= k; ++j) m.entries[i - 1][j - 1] = (top[i - 1] - i) - (bottom[j - 1] - j);
  }
  return m;
}

namespace {

int inversion_parity(const std::vector<int>& p) {
  int inv = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    for (std::size_t j = i + 1; j < p.size(); ++j) inv += p[i] > p[j];
  }
  return inv % 2 ? -1 : 1;
}

template <typename Emit>
void permutation_sum(const JTMatrix& m, int max_rows, Emit emit) {
  check_row_bound(m.entries.size(), max_rows);
  const int k = m.size();
  std::vector<int> p(k);
  std::iota(p.begin(), p.end(), 0);
  IntSeq picked(k);
  do {
    for (int i = 0; i < k; ++i) picked[i] = m.entries[i][p[i]];
    emit(picked, inversion_parity(p));
  } while (std::next_permutation(p.begin(), p.end()));
}

}  // namespace

BasisExpr ndet_expand(const JTMatrix& m, int max_rows) {
  BasisExpr out(Basis::H);
  permutation_sum(m, max_rows, [&](const IntSeq& picked, int sign) {
    if (auto index = normalize_h_index(picked)) out.add_term(*index, sign);
  });
  return out;
}

BasisExpr commutative_jacobi_trudi(const IntSeq& lambda, const std::optional<IntSeq>& nu, int max_rows) {
  BasisExpr out(Basis::h_sym);
  permutation_sum(jacobi_trudi_matrix(lambda, nu), max_rows, [&](const IntSeq& picked, int sign) {
    if (auto index = normalize_h_index(picked)) {
      std::vector<int> parts = index->parts();
      std::sort(parts.begin(), parts.end(), std::greater<>());
      out.add_term(Composition(std::move(parts)), sign);
    }
  });
  return out;
}

std::string CheckReport::to_json() const {
  nlohmann::ordered_json j;
  j["check"] = check;
  j["n"] = n;
  j["pass"] = pass;
  j["counterexample"] = counterexample ? nlohmann::ordered_json(*counterexample) : nlohmann::ordered_json(nullptr);
  return j.dump();
}

CheckReport duality_transpose_check(int n, int max_rows) {
  CheckReport report{"duality_transpose", n, true, std::nullopt};
  const std::vector<Composition> comps = compositions_of(n);
  ExpansionOptions options;
  options.max_rows = max_rows;
  // a[beta][alpha]: coefficient of H_alpha in the immaculate expansion of beta
  std::map<Composition, BasisExpr> a;
  for (const Composition& beta : comps) a.emplace(beta, immaculate_to_H(beta.as_seq(), options));
  for (const Composition& alpha : comps) {
    const BasisExpr b = monomial_to_dual_immaculate(alpha, options);
    for (const Composition& mu : comps) {
      const Coeff lhs = b.coefficient(mu);
      const Coeff rhs = a.at(mu).coefficient(alpha);
      if (lhs != rhs) {
        report.pass = false;
        report.counterexample = "alpha=" + to_string(alpha) + " mu=" + to_string(mu) +
                                " monomial side " + std::to_string(lhs) + ", immaculate side " + std::to_string(rhs);
        return report;
      }
    }
  }
  return report;
}

}  // namespace nsym
