#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "szlab/density.hpp"
#include "szlab/hypergraph.hpp"

namespace szlab {

// Exponent pattern n_{j,w} in {0,1}, one bit per pair (j in [k],
// w in {0,1}^{[k] minus {j}}). Slot layout: j * 2^(k-1) + wmask, where wmask
// packs the copy choices for the parts != j in ascending order.
struct LfcPattern {
  int k = 0;
  std::vector<std::uint8_t> bits;  // size k * 2^(k-1)

  static LfcPattern all_ones(int k);
  static LfcPattern all_zeros(int k);
  static LfcPattern single(int k, int slot);
  static LfcPattern from_id(int k, std::uint64_t id);  // bit i of id -> slot i

  int slots() const { return k << (k - 1); }
  std::uint64_t id() const;
  std::string bitstring() const;
  int count_active() const;
};

struct ContractionBudget {
  std::size_t max_table_doubles = (1ULL << 26);  // per-step partial tensor cap
};

// Exact 2k-variable blow-up average via variable-elimination contraction.
double lfc_value_arithmetic(const DensityFunction& nu, int k, const LfcPattern& p,
                            const ContractionBudget& budget = {});
// Independent nested-loop oracle over all n^(2k) assignments.
double lfc_value_arithmetic_bruteforce(const DensityFunction& nu, int k, const LfcPattern& p);

double lfc_value_hypergraph(const WeightedHypergraph& nu, const LfcPattern& p,
                            const ContractionBudget& budget = {});
double lfc_value_hypergraph_bruteforce(const WeightedHypergraph& nu, const LfcPattern& p);

struct LfcOptions {
  std::uint64_t samples = 256;  // sampled patterns for k >= 4
  std::uint64_t seed = 0;
  bool keep_per_pattern = false;
  ContractionBudget budget;
};

struct LfcReport {
  int k = 0;
  std::size_t n = 0;
  double delta = 0.0;
  LfcPattern worst_pattern;
  std::string method;  // "exhaustive" or "sampled"
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
  double delta_all_ones = 0.0;  // deviation of the full 2-blow-up alone
  std::vector<std::pair<std::uint64_t, double>> per_pattern;  // (id, |value-1|)
};

// Exhaustive over all 2^(k 2^(k-1)) patterns for k <= 3; for k >= 4 the
// all-ones pattern, every single-factor pattern, and `samples` random ones
// (a lower bound on the true delta, method = "sampled").
LfcReport lfc_delta(const DensityFunction& nu, int k, const LfcOptions& opts = {});
LfcReport lfc_delta(const WeightedHypergraph& nu, const LfcOptions& opts = {});

enum class MixedFactor : std::uint8_t { one, nu, nu_minus_one };

struct MixedFactorAssignment {
  int k = 0;
  std::vector<MixedFactor> slots;  // same slot layout as LfcPattern

  static MixedFactorAssignment from_id(int k, std::uint64_t base3_id);
  int count_nu_minus_one() const;
};

// S((h_{j,w})): 2k-variable average with factors 1, nu, or nu - 1.
double mixed_blowup_average(const WeightedHypergraph& nu, const MixedFactorAssignment& a,
                            const ContractionBudget& budget = {});
// Inclusion-exclusion oracle: signed sum of plain pattern values over all
// {nu, -1} resolutions of the nu-1 slots.
double mixed_blowup_average_by_expansion(const WeightedHypergraph& nu,
                                         const MixedFactorAssignment& a,
                                         const ContractionBudget& budget = {});

enum class SlotChoice : std::uint8_t { g, gtilde };

// (k+1)-variable average of (nu(x_{-k}) - 1) prod_{j<k, w in {0,1}} h_{j,w},
// h picked per slot from g or gtilde. Validates 0 <= g <= nu, 0 <= gtilde <= 1.
// choice has 2(k-1) entries laid out (j, w) = j*2 + w for j in 0..k-2.
double strong_lfc_lhs(const WeightedHypergraph& nu, const WeightedHypergraph& g,
                      const WeightedHypergraph& gtilde, const std::vector<SlotChoice>& choice);

struct StrongLfcDiagnostics {
  double value = 0.0;       // S_k with all factors g
  double bound = 0.0;       // 2 (1+delta)^(1-1/2^(k-1)) delta^(1/2^(k-1))
  double s1 = 0.0;          // fully Cauchy-Schwarzed endpoint
  double s_mid = 0.0;       // one step down the chain (k = 3 only)
  bool s_mid_valid = false;
  double delta_used = 0.0;
};

StrongLfcDiagnostics strong_lfc_chain(const WeightedHypergraph& nu, const WeightedHypergraph& g,
                                      double delta, const ContractionBudget& budget = {});

struct UniformityResult {
  double u_norm = 0.0;    // max_j || slice_j - 1 ||_{U^{k-1}}
  double cut = 0.0;       // max_j exact cut norm of slice_j - 1
  double bound = 0.0;     // 2 delta^(1/2^(k-1))
  bool satisfied = false;
  bool certified = false;  // exact delta and exact cut norms
};

UniformityResult uniformity_from_lfc(const WeightedHypergraph& nu, double delta,
                                     bool delta_exhaustive, const CutNormBudget& cb = {});
UniformityResult uniformity_from_lfc(const DensityFunction& nu, int k, double delta,
                                     bool delta_exhaustive, const CutNormBudget& cb = {});

}  // namespace szlab
