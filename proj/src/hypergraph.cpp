#include "szlab/hypergraph.hpp"

namespace szlab {

WeightedHypergraph WeightedHypergraph::constant(int k, int n, double c) {
  if (k < 2) throw usage_error("WeightedHypergraph: k must be >= 2");
  WeightedHypergraph g;
  g.k = k;
  g.n = n;
  g.slices.reserve(k);
  for (int j = 0; j < k; ++j) g.slices.push_back(Tensor::constant(k - 1, n, c));
  return g;
}

WeightedHypergraph WeightedHypergraph::from_arithmetic(const DensityFunction& f, int k) {
  if (k < 2) throw usage_error("from_arithmetic: k must be >= 2");
  const int n = static_cast<int>(f.n);
  WeightedHypergraph g;
  g.k = k;
  g.n = n;
  for (int j = 0; j < k; ++j) {
    Tensor t = Tensor::zeros(k - 1, n);
    std::vector<int> idx(k - 1, 0);
    std::size_t flat = 0;
    do {
      long long s = 0;
      int pos = 0;
      for (int i = 0; i < k; ++i) {
        if (i == j) continue;
        s += static_cast<long long>(j - i) * idx[pos++];
      }
      t.v[flat++] = f.values[mod_index(s, n)];
    } while (next_index(idx, n));
    g.slices.push_back(std::move(t));
  }
  return g;
}

bool dominates(const WeightedHypergraph& hi, const WeightedHypergraph& lo, std::string* where) {
  if (!hi.shape_matches(lo)) throw usage_error("dominates: shape mismatch");
  for (int j = 0; j < hi.k; ++j)
    for (std::size_t i = 0; i < hi.slices[j].v.size(); ++i)
      if (lo.slices[j].v[i] > hi.slices[j].v[i]) {
        if (where)
          *where = "slice " + std::to_string(j) + " entry " + std::to_string(i);
        return false;
      }
  return true;
}

bool bounded_by(const WeightedHypergraph& g, double c, std::string* where) {
  for (int j = 0; j < g.k; ++j)
    for (std::size_t i = 0; i < g.slices[j].v.size(); ++i)
      if (g.slices[j].v[i] > c) {
        if (where) *where = "slice " + std::to_string(j) + " entry " + std::to_string(i);
        return false;
      }
  return true;
}

bool nonnegative(const WeightedHypergraph& g, std::string* where) {
  for (int j = 0; j < g.k; ++j)
    for (std::size_t i = 0; i < g.slices[j].v.size(); ++i)
      if (g.slices[j].v[i] < 0.0) {
        if (where) *where = "slice " + std::to_string(j) + " entry " + std::to_string(i);
        return false;
      }
  return true;
}

WeightedHypergraph hg_sub(const WeightedHypergraph& a, const WeightedHypergraph& b) {
  if (!a.shape_matches(b)) throw usage_error("hg_sub: shape mismatch");
  WeightedHypergraph out = a;
  for (int j = 0; j < a.k; ++j) out.slices[j] = tensor_sub(a.slices[j], b.slices[j]);
  return out;
}

WeightedHypergraph hg_shift(const WeightedHypergraph& a, double c) {
  WeightedHypergraph out = a;
  for (auto& s : out.slices) s = tensor_shift(s, c);
  return out;
}

CutNormResult cut_norm_tuple(const WeightedHypergraph& g, const CutNormBudget& budget) {
  CutNormResult best;
  best.value = -1.0;
  for (int j = 0; j < g.k; ++j) {
    CutNormResult r = cut_norm_tensor(g.slices[j], budget);
    if (r.value > best.value) best = r;
  }
  return best;
}

}  // namespace szlab
