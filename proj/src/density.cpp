#include "szlab/density.hpp"

#include <cmath>
#include <random>

namespace szlab {

DensityFunction::DensityFunction(std::size_t n_, std::vector<double> vals)
    : n(n_), values(std::move(vals)) {
  if (n == 0) throw usage_error("DensityFunction: modulus must be positive");
  if (values.size() != n) throw usage_error("DensityFunction: size mismatch");
  for (std::size_t i = 0; i < n; ++i) {
    if (!std::isfinite(values[i]) || values[i] < 0.0)
      throw usage_error("DensityFunction: value at index " + std::to_string(i) +
                        " is negative or not finite");
  }
}

DensityFunction DensityFunction::constant(std::size_t n, double c) {
  return DensityFunction(n, std::vector<double>(n, c));
}

DensityFunction DensityFunction::indicator(std::size_t n, const std::vector<std::size_t>& support) {
  std::vector<double> v(n, 0.0);
  for (std::size_t s : support) v[s % n] = 1.0;
  return DensityFunction(n, std::move(v));
}

DensityFunction DensityFunction::random_mean_one(std::size_t n, std::uint64_t seed, double amplitude) {
  std::mt19937_64 rng(mix_seed(seed, 0x6e75ULL));
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::vector<double> v(n);
  for (auto& x : v) x = std::max(1e-6, 1.0 + amplitude * u(rng));
  double m = pairwise_mean(v);
  for (auto& x : v) x /= m;
  return DensityFunction(n, std::move(v));
}

double mean(const DensityFunction& f) { return pairwise_mean(f.values); }

double ap_count(const DensityFunction& f, int k) {
  if (k < 2) throw usage_error("ap_count: k must be >= 2");
  const int n = static_cast<int>(f.n);
  std::vector<double> row(n), rows(n);
  for (int x = 0; x < n; ++x) {
    if (f.values[x] == 0.0) {
      rows[x] = 0.0;
      continue;
    }
    for (int d = 0; d < n; ++d) {
      double p = f.values[x];
      int pos = x;
      for (int i = 1; i < k && p != 0.0; ++i) {
        pos += d;
        if (pos >= n) pos -= n;
        p *= f.values[pos];
      }
      row[d] = p;
    }
    rows[x] = pairwise_sum(row);
  }
  return pairwise_sum(rows) / (static_cast<double>(n) * n);
}

double ap_count_trivial_part(const DensityFunction& f, int k) {
  if (k < 2) throw usage_error("ap_count_trivial_part: k must be >= 2");
  std::vector<double> pw(f.n);
  for (std::size_t x = 0; x < f.n; ++x) pw[x] = std::pow(f.values[x], k);
  return pairwise_mean(pw) / static_cast<double>(f.n);
}

std::vector<double> subtract(const DensityFunction& a, const DensityFunction& b) {
  if (a.n != b.n) throw usage_error("subtract: modulus mismatch");
  std::vector<double> d(a.n);
  for (std::size_t i = 0; i < a.n; ++i) d[i] = a.values[i] - b.values[i];
  return d;
}

}  // namespace szlab
