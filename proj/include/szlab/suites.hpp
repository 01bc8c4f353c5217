#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "szlab/counting.hpp"
#include "szlab/instances.hpp"
#include "szlab/lfc.hpp"

namespace szlab {

// Inequality suites, grouped by theme: B (cut-norm control),
// C (strong linear forms), D (counting).
enum class SuiteScope {
  lemB,         // |S| <= 2^K delta over all mixed blow-up assignments
  corB,         // cut <= U^{k-1} <= 2 delta^{1/2^{k-1}}
  lemC,         // strong linear forms bound over all h-choices
  propD_dense,  // dense counting gap <= k epsilon
  propD_chain,  // relative counting ladder
  eqD_varnu,    // (E|nu'-1|)^2 <= E[(nu'-1)^2] <= 3 delta
  eqD_capnu,    // 0 <= g' - g'cap <= |nu'-1| entrywise
};

SuiteScope suite_scope_from_string(const std::string& s);
std::string suite_scope_name(SuiteScope scope);

struct SuiteInstanceRow {
  std::uint64_t seed = 0;
  bool pass = false;
  double lhs = 0.0;
  double rhs = 0.0;
  double slack = 0.0;  // rhs - lhs at the tightest point
  std::string detail;
};

struct SuiteResult {
  std::string scope;
  int k = 0;
  int n = 0;
  int instances = 0;
  int failures = 0;
  double worst_slack = 0.0;
  std::string first_failure;  // serialized instance handle for replay
  std::vector<SuiteInstanceRow> rows;
};

SuiteResult run_suite(SuiteScope scope, int seeds, int n, int k, std::uint64_t seed0 = 1);

// Exhaustive verification of the lemB bound for one majorant: every base-3 slot
// assignment (K >= 1) checked against 2^K delta via a signed-sum dynamic
// program over precomputed plain pattern values. Returns the minimum slack
// and the worst assignment id; spot-checks `spot_checks` assignments against
// the direct contraction route at 1e-9 relative.
struct MixedSuiteOutcome {
  double delta = 0.0;
  double min_slack = 0.0;       // min over K>=1 of 2^K delta - |S|
  std::uint64_t worst_id = 0;   // base-3 assignment id at the minimum
  std::uint64_t checked = 0;    // number of assignments with K >= 1
  double max_route_gap = 0.0;   // worst relative DP-vs-contraction disagreement
};

MixedSuiteOutcome verify_all_mixed_assignments(const WeightedHypergraph& nu,
                                               int spot_checks = 16,
                                               std::uint64_t spot_seed = 0);

}  // namespace szlab
