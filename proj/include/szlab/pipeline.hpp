#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "szlab/extremal.hpp"
#include "szlab/lfc.hpp"
#include "szlab/sieve.hpp"

namespace szlab {

struct PipelineConfig {
  long long n_prime = 2000;
  int k = 3;
  double c0 = 0.25;
  double gamma = 0.3;  // sieve level exponent, experiment knob
  std::uint64_t seed = 0;
  bool floor = true;
  // Monte Carlo delta estimation: assignments per pattern, random patterns
  // on top of all-ones and the single-factor ones.
  std::uint64_t mc_samples = 20000;
  std::uint64_t random_patterns = 32;
  // r_k table depth for the dense-side comparator of the final inequality.
  int table_n_max = 20;
  std::optional<std::vector<long long>> b_set;  // default: greedy AP-free prime positions
  std::int64_t budget_ms = 0;                   // 0 = unlimited
};

struct PipelineReport {
  SieveParams params;
  std::vector<long long> b_set;
  double alpha = 0.0;  // mean of f_B over Z_M
  double lambda_mean = 0.0;
  double majorant_scale = 0.0;
  double domination_ratio = 0.0;
  bool floor = true;

  double ap_value = 0.0;      // E_{x,d in Z_M} prod f_B(x + j d)
  double trivial_part = 0.0;  // d = 0 contribution
  long long wraparound_count = 0;

  LfcReport delta_report;  // method "monte_carlo" at scale

  // Both sides of the final inequality, reported without declaring a winner:
  // lhs = ap_value; dense term 1/alpha_inverse(alpha/2)^2 (lower bound
  // 1/table_n_max^2 when the r_k table is exhausted); error term with the
  // exponent constant unknown, reported as ln(1/delta).
  double dense_term = 0.0;
  bool dense_term_table_exhausted = false;
  double error_term_log = 0.0;

  std::uint64_t seed = 0;
  int k = 0;
};

PipelineReport run_pipeline(const PipelineConfig& cfg);

// Monte Carlo LFC deviation for a density on Z_N at scales where exact
// contraction is out of reach: per-pattern sample averages, never a
// certificate (method = "monte_carlo").
LfcReport lfc_delta_monte_carlo(const DensityFunction& nu, int k, std::uint64_t samples,
                                std::uint64_t random_patterns, std::uint64_t seed);

}  // namespace szlab
