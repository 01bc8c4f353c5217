#pragma once

#include <cstdint>
#include <vector>

#include "szlab/common.hpp"

namespace szlab {

// Nonnegative real-valued function on Z_N. Index arithmetic is mod N.
// Immutable by convention once constructed.
struct DensityFunction {
  std::size_t n = 0;
  std::vector<double> values;

  DensityFunction() = default;
  DensityFunction(std::size_t n_, std::vector<double> vals);

  static DensityFunction constant(std::size_t n, double c);
  // support given as residues mod n
  static DensityFunction indicator(std::size_t n, const std::vector<std::size_t>& support);
  // positive values, normalized so the mean is 1 up to summation tolerance.
  // amplitude controls spread: values land in roughly [1-a, 1+a] pre-normalization.
  static DensityFunction random_mean_one(std::size_t n, std::uint64_t seed, double amplitude = 0.75);

  double operator()(long long x) const { return values[mod_index(x, static_cast<int>(n))]; }
};

double mean(const DensityFunction& f);

// E_{x,d in Z_N} f(x) f(x+d) ... f(x+(k-1)d). Includes the trivial d=0 terms.
double ap_count(const DensityFunction& f, int k);

// Diagnostic: the d=0 contribution mean(f^k)/N.
double ap_count_trivial_part(const DensityFunction& f, int k);

// Elementwise difference as a raw signed function (for cut-norm inputs).
std::vector<double> subtract(const DensityFunction& a, const DensityFunction& b);

}  // namespace szlab
