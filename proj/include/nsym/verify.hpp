#pragma once

#include <string>
#include <vector>

#include "nsym/oracles.hpp"

namespace nsym {

// Self-check sweeps comparing production paths with the oracles.
// Suites: oracle, skew, duality, ribbon, roundtrip, forgetful, all.
// `n` bounds composition sizes.
std::vector<CheckReport> run_verification(const std::string& suite, int n, int max_rows = kDefaultMaxRows);

std::string reports_to_json(const std::vector<CheckReport>& reports);

}  // namespace nsym
