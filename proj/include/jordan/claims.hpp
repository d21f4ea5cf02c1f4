#pragma once

// Catalog of runnable theorem checks. Each claim builds its systems at the
// given parameters, runs the oracle comparisons and reports a JSON document.

#include <optional>
#include <string>
#include <vector>

#include "jordan/oracle.hpp"

namespace jordan {

struct ClaimInfo {
  std::string id;
  std::string statement;
  std::string ring;  // defaults
  std::size_t m = 0;
  std::size_t n = 0;
};

const std::vector<ClaimInfo>& claim_catalog();
const ClaimInfo& find_claim(const std::string& id);  // UnknownClaim

struct ClaimParams {
  std::optional<std::string> ring;
  std::optional<std::size_t> m;
  std::optional<std::size_t> n;
  OracleOptions oracle;
};

struct ClaimResult {
  std::string id;
  bool passed = false;
  Json report;
};

// Errors from construction (ParseError, NoSquareRootOfMinusOne, BudgetExceeded, ...)
// propagate; theorem failures come back as passed == false.
ClaimResult run_claim(const std::string& id, const ClaimParams& params);

}  // namespace jordan
