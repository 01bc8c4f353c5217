#pragma once

#include <cstdint>
#include <vector>

#include "szlab/tensor.hpp"

namespace szlab {

struct CutNormBudget {
  int restarts = 64;
  std::uint64_t seed = 0;
  int max_exact_n_r2 = 22;  // one-side subset enumeration bound for r=2
  int max_exact_n_r3 = 4;   // full extreme-point enumeration bound for r=3
  bool require_exact = false;
};

struct CutNormResult {
  double value = 0.0;
  bool exact = false;
  int restarts_used = 0;
  // certificate[j] = flat indices (into n^{r-1}, coords ascending without j)
  // of the witness set A_{j+1}.
  std::vector<std::vector<std::uint64_t>> certificate;
};

// sup over A_1..A_r of |E[h(x) prod_j 1_{A_j}(x_{-j})]|. Exact within the
// configured enumeration bounds, otherwise alternating sign-ascent with
// seeded random restarts (a certified lower bound, exact=false).
CutNormResult cut_norm_tensor(const Tensor& h, const CutNormBudget& budget = {});

// Arithmetic form: h(x_1..x_r) = f(x_1+...+x_r) on Z_n, f signed allowed.
CutNormResult cut_norm_arithmetic(std::span<const double> f, std::size_t n, int r,
                                  const CutNormBudget& budget = {});

// Re-evaluates |E[h prod 1_{A_j}]| over the recorded sets.
double evaluate_certificate(const Tensor& h,
                            const std::vector<std::vector<std::uint64_t>>& certificate);

struct GowersResult {
  double norm = 0.0;      // 2^r-th root of the (clamped) average
  double pre_root = 0.0;  // signed 2^r-fold average as computed
};

// Gowers U^r box average of an r-ary tensor. Negative averages within 1e-10
// are clamped to zero; anything more negative raises numerical_error.
GowersResult gowers_norm(const Tensor& h);

}  // namespace szlab
