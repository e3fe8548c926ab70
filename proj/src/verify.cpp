#include "nsym/verify.hpp"

#include <random>

#include "json.hpp"
#include "nsym/expansions.hpp"
#include "nsym/ribbon.hpp"
#include "nsym/serialize.hpp"

namespace nsym {

namespace {

constexpr int kSweepMaxParts = 5;

template <typename Check>
CheckReport sweep(const std::string& name, int n, int max_parts, Check check) {
  CheckReport r{name, n, true, std::nullopt};
  for (int size = 1; size <= n && r.pass; ++size) {
    for (const Composition& c : compositions_of(size)) {
      if (static_cast<int>(c.size()) > max_parts) continue;
      if (auto bad = check(c)) {
        r.pass = false;
        r.counterexample = to_string(c) + ": " + *bad;
        break;
      }
    }
  }
  return r;
}

std::optional<std::string> mismatch(const BasisExpr& got, const BasisExpr& want) {
  if (got == want) return std::nullopt;
  return "got " + to_text(got) + ", expected " + to_text(want);
}

CheckReport oracle_suite(int n, int max_rows) {
  ExpansionOptions opt{max_rows, 1};
  return sweep("oracle", n, kSweepMaxParts, [&](const Composition& c) {
    return mismatch(immaculate_to_H(c.as_seq(), opt), ndet_expand(jacobi_trudi_matrix(c.as_seq()), max_rows));
  });
}

CheckReport skew_suite(int n, int max_rows) {
  CheckReport r{"skew", n, true, std::nullopt};
  std::mt19937_64 rng(0x5eed);
  const int k_max = std::max(1, std::min(n, kSweepMaxParts));
  std::uniform_int_distribution<int> len(1, k_max);
  std::uniform_int_distribution<int> entry(-2, n);
  ExpansionOptions opt{max_rows, 1};
  for (int trial = 0; trial < 50 * n; ++trial) {
    SkewShape s;
    const int k = len(rng);
    for (int i = 0; i < k; ++i) {
      s.mu.push_back(entry(rng));
      s.nu.push_back(entry(rng));
    }
    if (auto bad = mismatch(skew_immaculate_to_H(s, opt), ndet_expand(jacobi_trudi_matrix(s.mu, s.nu), max_rows))) {
      r.pass = false;
      r.counterexample = to_string(s.mu) + "/" + to_string(s.nu) + ": " + *bad;
      break;
    }
  }
  return r;
}

CheckReport duality_suite(int n, int max_rows) {
  for (int size = 1; size <= n; ++size) {
    CheckReport r = duality_transpose_check(size, max_rows);
    if (!r.pass) return r;
  }
  return {"duality_transpose", n, true, std::nullopt};
}

CheckReport ribbon_suite(int n, int max_rows) {
  ExpansionOptions opt{max_rows, 1};
  return sweep("ribbon", n, kSweepMaxParts, [&](const Composition& c) -> std::optional<std::string> {
    if (!im2rib_class(c)) return std::nullopt;
    return mismatch(immaculate_to_ribbon_direct(c, false, max_rows), H_to_ribbon(immaculate_to_H(c.as_seq(), opt)));
  });
}

CheckReport roundtrip_suite(int n) {
  return sweep("roundtrip", n, n, [&](const Composition& c) -> std::optional<std::string> {
    const BasisExpr h = BasisExpr::term(Basis::H, c);
    const BasisExpr r = BasisExpr::term(Basis::R, c);
    if (auto bad = mismatch(ribbon_to_H(H_to_ribbon(h)), h)) return bad;
    return mismatch(H_to_ribbon(ribbon_to_H(r)), r);
  });
}

CheckReport forgetful_suite(int n, int max_rows) {
  CheckReport r{"forgetful", n, true, std::nullopt};
  ExpansionOptions opt{max_rows, 1};
  for (int size = 1; size <= n && r.pass; ++size) {
    for (const Composition& lambda : partitions_of(size)) {
      if (auto bad = mismatch(forgetful_to_h(immaculate_to_H(lambda.as_seq(), opt)),
                              commutative_jacobi_trudi(lambda.as_seq(), std::nullopt, max_rows))) {
        r.pass = false;
        r.counterexample = to_string(lambda) + ": " + *bad;
        break;
      }
    }
  }
  return r;
}

}  // namespace

std::vector<CheckReport> run_verification(const std::string& suite, int n, int max_rows) {
  if (n < 1) fail(ErrorCode::kInvalidArgument, "verification size must be positive");
  check_row_bound(static_cast<std::size_t>(n), max_rows);
  const bool all = suite == "all";
  std::vector<CheckReport> out;
  if (all || suite == "oracle") out.push_back(oracle_suite(n, max_rows));
  if (all || suite == "skew") out.push_back(skew_suite(n, max_rows));
  if (all || suite == "duality") out.push_back(duality_suite(n, max_rows));
  if (all || suite == "ribbon") out.push_back(ribbon_suite(n, max_rows));
  if (all || suite == "roundtrip") out.push_back(roundtrip_suite(n));
  if (all || suite == "forgetful") out.push_back(forgetful_suite(n, max_rows));
  if (out.empty()) fail(ErrorCode::kInvalidArgument, "unknown verification suite '" + suite + "'");
  return out;
}

std::string reports_to_json(const std::vector<CheckReport>& reports) {
  nlohmann::ordered_json j = nlohmann::ordered_json::array();
  for (const auto& r : reports) j.push_back(nlohmann::ordered_json::parse(r.to_json()));
  return j.dump();
}

}  // namespace nsym
