#include "szlab/instances.hpp"

#include <random>

namespace szlab {

namespace {

std::mt19937_64 make_prng(std::uint64_t seed, std::uint64_t stream) {
  return std::mt19937_64(mix_seed(seed, stream));
}

}  // namespace

WeightedHypergraph random_majorant_hg(int k, int n, std::uint64_t seed, double amplitude) {
  if (amplitude < 0.0 || amplitude > 1.0)
    throw usage_error("random_majorant_hg: amplitude must be in [0,1]");
  WeightedHypergraph g = WeightedHypergraph::constant(k, n, 1.0);
  auto prng = make_prng(seed, 101);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (auto& slice : g.slices)
    for (auto& v : slice.v) v = 1.0 + amplitude * (2.0 * u(prng) - 1.0);
  return g;
}

WeightedHypergraph random_subfunction_hg(const WeightedHypergraph& nu, std::uint64_t seed) {
  WeightedHypergraph g = nu;
  auto prng = make_prng(seed, 102);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (auto& slice : g.slices)
    for (auto& v : slice.v) v *= u(prng);
  return g;
}

WeightedHypergraph random_bounded_hg(int k, int n, std::uint64_t seed) {
  WeightedHypergraph g = WeightedHypergraph::constant(k, n, 0.0);
  auto prng = make_prng(seed, 103);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (auto& slice : g.slices)
    for (auto& v : slice.v) v = u(prng);
  return g;
}

}  // namespace szlab
