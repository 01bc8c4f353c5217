#include <algorithm>
#include <cmath>
#include <map>

#include "szlab/counting.hpp"

namespace szlab {

namespace {

// Capped conditional average of f on the cells of `cell`.
DensityFunction project_model(const DensityFunction& f, const std::vector<int>& cell,
                              int ncells) {
  std::vector<double> sum(ncells, 0.0);
  std::vector<int> cnt(ncells, 0);
  for (std::size_t x = 0; x < f.n; ++x) {
    sum[cell[x]] += f.values[x];
    ++cnt[cell[x]];
  }
  std::vector<double> avg(ncells, 0.0);
  for (int c = 0; c < ncells; ++c)
    if (cnt[c] > 0) avg[c] = std::min(1.0, sum[c] / cnt[c]);
  std::vector<double> vals(f.n);
  for (std::size_t x = 0; x < f.n; ++x) vals[x] = avg[cell[x]];
  return DensityFunction(f.n, std::move(vals));
}

// w(x) = (1/n^{r-1}) #{(x_1..x_r): sum = x, x_{-j} in A_j for all j}
std::vector<double> certificate_weight(std::size_t n, int r,
                                       const std::vector<std::vector<std::uint64_t>>& cert) {
  const std::size_t side = pow_size(static_cast<int>(n), r - 1);
  std::vector<std::vector<char>> in(r, std::vector<char>(side, 0));
  for (int j = 0; j < r; ++j)
    for (std::uint64_t i : cert[j]) in[j][i] = 1;
  std::vector<double> count(n, 0.0);
  std::vector<int> idx(r, 0);
  do {
    bool ok = true;
    for (int j = 0; j < r && ok; ++j) {
      std::size_t flat = 0;
      for (int i = 0; i < r; ++i) {
        if (i == j) continue;
        flat = flat * n + static_cast<std::size_t>(idx[i]);
      }
      ok = in[j][flat] != 0;
    }
    if (ok) {
      long long s = 0;
      for (int i = 0; i < r; ++i) s += idx[i];
      count[mod_index(s, static_cast<int>(n))] += 1.0;
    }
  } while (next_index(idx, static_cast<int>(n)));
  const double denom = static_cast<double>(side);
  for (auto& c : count) c /= denom;
  return count;
}

// Split each cell at its local midpoint of `key`. Returns true if anything split.
bool refine_by(std::vector<int>& cell, int& ncells, const std::vector<double>& key) {
  const int old = ncells;
  std::vector<double> lo(old, 1e300), hi(old, -1e300);
  for (std::size_t x = 0; x < cell.size(); ++x) {
    lo[cell[x]] = std::min(lo[cell[x]], key[x]);
    hi[cell[x]] = std::max(hi[cell[x]], key[x]);
  }
  std::map<std::pair<int, int>, int> renum;
  std::vector<int> next(cell.size());
  for (std::size_t x = 0; x < cell.size(); ++x) {
    const int c = cell[x];
    const int bit = (hi[c] - lo[c] > 1e-12 && key[x] >= 0.5 * (lo[c] + hi[c])) ? 1 : 0;
    auto [it, _] = renum.try_emplace({c, bit}, static_cast<int>(renum.size()));
    next[x] = it->second;
  }
  if (static_cast<int>(renum.size()) == old) return false;
  cell = std::move(next);
  ncells = static_cast<int>(renum.size());
  return true;
}

}  // namespace

DenseModelResult dense_model_greedy(const DensityFunction& f, int k, double threshold,
                                    int max_rounds, const DenseModelOptions& opts) {
  if (k < 2) throw usage_error("dense_model_greedy: k must be >= 2");
  if (threshold < 0.0) throw usage_error("dense_model_greedy: threshold must be >= 0");
  const int r = k - 1;
  DenseModelResult out;
  if (*std::max_element(f.values.begin(), f.values.end()) <= 1.0 + 1e-12) {
    out.model = f;
    out.converged = true;
    return out;
  }
  std::vector<int> cell(f.n, 0);
  int ncells = 1;
  double best = 1e300;
  for (int round = 0;; ++round) {
    const DensityFunction model = project_model(f, cell, ncells);
    const CutNormResult res = cut_norm_arithmetic(subtract(f, model), f.n, r, opts.cut);
    if (res.value < best) {
      best = res.value;
      out.model = model;
      out.achieved = res.value;
      out.rounds = round;
    }
    if (res.value <= threshold) {
      out.converged = true;
      return out;
    }
    if (round >= max_rounds || ncells >= opts.max_cells || ncells >= static_cast<int>(f.n))
      return out;
    const std::vector<double> w = certificate_weight(f.n, r, res.certificate);
    if (!refine_by(cell, ncells, w) && !refine_by(cell, ncells, f.values)) return out;
  }
}

}  // namespace szlab
