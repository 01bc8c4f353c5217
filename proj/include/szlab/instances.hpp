#pragma once

#include <cstdint>

#include "szlab/hypergraph.hpp"

namespace szlab {

// Seeded majorant: slice entries 1 + amplitude (2U - 1), U uniform in [0,1).
WeightedHypergraph random_majorant_hg(int k, int n, std::uint64_t seed, double amplitude = 0.2);

// g = nu masked entrywise by uniforms in [0,1], so 0 <= g <= nu.
WeightedHypergraph random_subfunction_hg(const WeightedHypergraph& nu, std::uint64_t seed);

// Entries uniform in [0,1].
WeightedHypergraph random_bounded_hg(int k, int n, std::uint64_t seed);

}  // namespace szlab
