#pragma once

#include <string>

#include "szlab/cutnorm.hpp"
#include "szlab/density.hpp"
#include "szlab/tensor.hpp"

namespace szlab {

// Weighted (k-1)-uniform k-partite hypergraph with all parts of size n.
// slices[j] is the weight g_{-(j+1)} in 1-based part language: it omits part
// j and its coordinates run over the remaining parts in ascending order.
struct WeightedHypergraph {
  int k = 0;
  int n = 0;
  std::vector<Tensor> slices;

  static WeightedHypergraph constant(int k, int n, double c);
  // Arithmetic substitution: slice j evaluates f(sum_{i != j} (j - i) y_i),
  // with 1-based coefficients, so arithmetic averages and hypergraph averages
  // coincide on corresponding inputs.
  static WeightedHypergraph from_arithmetic(const DensityFunction& f, int k);

  bool shape_matches(const WeightedHypergraph& o) const {
    return k == o.k && n == o.n;
  }
};

// Entrywise this >= g on every slice; on failure, if where != nullptr it
// receives "slice j entry i" for the first offending entry.
bool dominates(const WeightedHypergraph& hi, const WeightedHypergraph& lo,
               std::string* where = nullptr);

bool bounded_by(const WeightedHypergraph& g, double c, std::string* where = nullptr);
bool nonnegative(const WeightedHypergraph& g, std::string* where = nullptr);

WeightedHypergraph hg_sub(const WeightedHypergraph& a, const WeightedHypergraph& b);
WeightedHypergraph hg_shift(const WeightedHypergraph& a, double c);  // a + c

// max_j of the slice cut norms (the k-tuple cut norm).
CutNormResult cut_norm_tuple(const WeightedHypergraph& g, const CutNormBudget& budget = {});

}  // namespace szlab
