#include "szlab/lfc.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace szlab {

namespace {

// A dense factor over a subset of the 2k blow-up variables. Variable ids are
// 2*part + copy; vars is kept sorted ascending and the table is row-major in
// that order with every dimension n.
struct Factor {
  std::vector<int> vars;
  std::vector<double> table;
};

double contract_average(std::vector<Factor> fs, int n, const ContractionBudget& budget) {
  double scalar = 1.0;
  // absorb scalar factors immediately
  auto sweep_scalars = [&]() {
    for (std::size_t i = 0; i < fs.size();) {
      if (fs[i].vars.empty()) {
        scalar *= fs[i].table.at(0);
        fs.erase(fs.begin() + static_cast<long>(i));
      } else {
        ++i;
      }
    }
  };
  sweep_scalars();
  while (!fs.empty()) {
    // pick the variable whose elimination yields the smallest merged factor
    std::vector<int> active;
    for (const auto& f : fs)
      for (int v : f.vars)
        if (std::find(active.begin(), active.end(), v) == active.end()) active.push_back(v);
    int best_var = -1;
    std::size_t best_union = 0;
    for (int v : active) {
      std::vector<int> uni;
      for (const auto& f : fs) {
        if (std::find(f.vars.begin(), f.vars.end(), v) == f.vars.end()) continue;
        for (int w : f.vars)
          if (std::find(uni.begin(), uni.end(), w) == uni.end()) uni.push_back(w);
      }
      if (best_var < 0 || uni.size() < best_union) {
        best_var = v;
        best_union = uni.size();
      }
    }
    // gather incident factors and the sorted union of their variables
    std::vector<Factor> incident;
    std::vector<Factor> rest;
    std::vector<int> uni;
    for (auto& f : fs) {
      if (std::find(f.vars.begin(), f.vars.end(), best_var) != f.vars.end()) {
        for (int w : f.vars)
          if (std::find(uni.begin(), uni.end(), w) == uni.end()) uni.push_back(w);
        incident.push_back(std::move(f));
      } else {
        rest.push_back(std::move(f));
      }
    }
    std::sort(uni.begin(), uni.end());
    const int m = static_cast<int>(uni.size());
    if (pow_size(n, m - 1) > budget.max_table_doubles)
      throw budget_error("contract_average: partial tensor exceeds the memory budget");
    // positions of best_var and of each factor's vars inside the union
    int vpos = static_cast<int>(std::find(uni.begin(), uni.end(), best_var) - uni.begin());
    std::vector<std::vector<int>> pos(incident.size());
    for (std::size_t fi = 0; fi < incident.size(); ++fi)
      for (int w : incident[fi].vars)
        pos[fi].push_back(static_cast<int>(std::find(uni.begin(), uni.end(), w) - uni.begin()));
    Factor merged;
    for (int i = 0; i < m; ++i)
      if (i != vpos) merged.vars.push_back(uni[i]);
    merged.table.assign(pow_size(n, m - 1), 0.0);
    std::vector<int> idx(m, 0);
    const double inv_n = 1.0 / n;
    do {
      double p = 1.0;
      for (std::size_t fi = 0; fi < incident.size() && p != 0.0; ++fi) {
        std::size_t flat = 0;
        for (int q : pos[fi]) flat = flat * static_cast<std::size_t>(n) + idx[q];
        p *= incident[fi].table[flat];
      }
      if (p != 0.0) {
        std::size_t out = 0;
        for (int i = 0; i < m; ++i)
          if (i != vpos) out = out * static_cast<std::size_t>(n) + idx[i];
        merged.table[out] += p * inv_n;
      }
    } while (next_index(idx, n));
    rest.push_back(std::move(merged));
    fs = std::move(rest);
    sweep_scalars();
  }
  return scalar;
}

double bruteforce_average(const std::vector<Factor>& fs, int num_vars, int n) {
  std::vector<int> idx(num_vars, 0);
  std::vector<double> terms;
  terms.reserve(pow_size(n, num_vars));
  do {
    double p = 1.0;
    for (const auto& f : fs) {
      std::size_t flat = 0;
      for (int v : f.vars) flat = flat * static_cast<std::size_t>(n) + idx[v];
      p *= f.table[flat];
      if (p == 0.0) break;
    }
    terms.push_back(p);
  } while (next_index(idx, n));
  return pairwise_mean(terms);
}

// variable ids for the pair (j, wmask): 2i + copy for parts i != j ascending
std::vector<int> slot_vars(int k, int j, int wmask) {
  std::vector<int> vars;
  int pos = 0;
  for (int i = 0; i < k; ++i) {
    if (i == j) continue;
    vars.push_back(2 * i + ((wmask >> pos) & 1));
    ++pos;
  }
  return vars;
}

std::vector<double> arithmetic_slot_table(const DensityFunction& nu, int k, int j) {
  const int n = static_cast<int>(nu.n);
  std::vector<double> table(pow_size(n, k - 1));
  std::vector<int> idx(k - 1, 0);
  std::size_t flat = 0;
  do {
    long long s = 0;
    int pos = 0;
    for (int i = 0; i < k; ++i) {
      if (i == j) continue;
      s += static_cast<long long>(j - i) * idx[pos++];
    }
    table[flat++] = nu.values[mod_index(s, n)];
  } while (next_index(idx, n));
  return table;
}

template <typename TableOf>
std::vector<Factor> pattern_factors(int k, const LfcPattern& p, TableOf&& table_of) {
  const int half = 1 << (k - 1);
  std::vector<Factor> fs;
  for (int j = 0; j < k; ++j) {
    for (int w = 0; w < half; ++w) {
      if (!p.bits[static_cast<std::size_t>(j) * half + w]) continue;
      Factor f;
      f.vars = slot_vars(k, j, w);
      f.table = table_of(j);
      fs.push_back(std::move(f));
    }
  }
  return fs;
}

template <typename ValueFn>
LfcReport delta_report(int k, std::size_t n, const LfcOptions& opts, ValueFn&& value_of) {
  const int slots = k << (k - 1);
  LfcReport rep;
  rep.k = k;
  rep.n = n;
  rep.seed = opts.seed;
  auto consider = [&](const LfcPattern& p, std::uint64_t id) {
    const double dev = std::fabs(value_of(p) - 1.0);
    if (dev > rep.delta) {
      rep.delta = dev;
      rep.worst_pattern = p;
    }
    if (opts.keep_per_pattern) rep.per_pattern.emplace_back(id, dev);
    return dev;
  };
  if (k <= 3) {
    rep.method = "exhaustive";
    rep.worst_pattern = LfcPattern::all_zeros(k);
    const std::uint64_t total = 1ULL << slots;
    for (std::uint64_t id = 0; id < total; ++id) consider(LfcPattern::from_id(k, id), id);
    rep.delta_all_ones = std::fabs(value_of(LfcPattern::all_ones(k)) - 1.0);
    rep.samples = total;
  } else {
    rep.method = "sampled";
    rep.worst_pattern = LfcPattern::all_ones(k);
    rep.delta_all_ones = consider(LfcPattern::all_ones(k), slots <= 63 ? (1ULL << slots) - 1 : 0);
    for (int s = 0; s < slots; ++s) consider(LfcPattern::single(k, s), slots <= 63 ? (1ULL << s) : 0);
    std::mt19937_64 rng(mix_seed(opts.seed, 0x1fcULL));
    for (std::uint64_t i = 0; i < opts.samples; ++i) {
      LfcPattern p = LfcPattern::all_zeros(k);
      for (auto& b : p.bits) b = static_cast<std::uint8_t>(rng() & 1ULL);
      consider(p, slots <= 63 ? p.id() : 0);
    }
    rep.samples = opts.samples + 1 + slots;
  }
  return rep;
}

double slice_at(const Tensor& slice, int k, int j, std::span<const int> x, int n) {
  std::size_t flat = 0;
  for (int i = 0; i < k; ++i) {
    if (i == j) continue;
    flat = flat * static_cast<std::size_t>(n) + static_cast<std::size_t>(x[i]);
  }
  return slice.v[flat];
}

}  // namespace

LfcPattern LfcPattern::all_ones(int k) {
  LfcPattern p;
  p.k = k;
  p.bits.assign(static_cast<std::size_t>(k) << (k - 1), 1);
  return p;
}

LfcPattern LfcPattern::all_zeros(int k) {
  LfcPattern p;
  p.k = k;
  p.bits.assign(static_cast<std::size_t>(k) << (k - 1), 0);
  return p;
}

LfcPattern LfcPattern::single(int k, int slot) {
  LfcPattern p = all_zeros(k);
  p.bits.at(slot) = 1;
  return p;
}

LfcPattern LfcPattern::from_id(int k, std::uint64_t id) {
  LfcPattern p = all_zeros(k);
  if (p.slots() > 64) throw usage_error("LfcPattern::from_id: too many slots for a 64-bit id");
  for (int i = 0; i < p.slots(); ++i) p.bits[i] = (id >> i) & 1ULL;
  return p;
}

std::uint64_t LfcPattern::id() const {
  if (slots() > 64) throw usage_error("LfcPattern::id: too many slots for a 64-bit id");
  std::uint64_t id = 0;
  for (int i = 0; i < slots(); ++i)
    if (bits[i]) id |= (1ULL << i);
  return id;
}

std::string LfcPattern::bitstring() const {
  std::string s(bits.size(), '0');
  for (std::size_t i = 0; i < bits.size(); ++i)
    if (bits[i]) s[i] = '1';
  return s;
}

int LfcPattern::count_active() const {
  int c = 0;
  for (auto b : bits) c += b != 0;
  return c;
}

double lfc_value_arithmetic(const DensityFunction& nu, int k, const LfcPattern& p,
                            const ContractionBudget& budget) {
  if (k < 2) throw usage_error("lfc_value_arithmetic: k must be >= 2");
  if (p.k != k || static_cast<int>(p.bits.size()) != p.slots())
    throw usage_error("lfc_value_arithmetic: pattern shape mismatch");
  auto fs = pattern_factors(k, p, [&](int j) { return arithmetic_slot_table(nu, k, j); });
  return contract_average(std::move(fs), static_cast<int>(nu.n), budget);
}

double lfc_value_arithmetic_bruteforce(const DensityFunction& nu, int k, const LfcPattern& p) {
  auto fs = pattern_factors(k, p, [&](int j) { return arithmetic_slot_table(nu, k, j); });
  return bruteforce_average(fs, 2 * k, static_cast<int>(nu.n));
}

double lfc_value_hypergraph(const WeightedHypergraph& nu, const LfcPattern& p,
                            const ContractionBudget& budget) {
  if (p.k != nu.k) throw usage_error("lfc_value_hypergraph: pattern shape mismatch");
  auto fs = pattern_factors(nu.k, p, [&](int j) { return nu.slices[j].v; });
  return contract_average(std::move(fs), nu.n, budget);
}

double lfc_value_hypergraph_bruteforce(const WeightedHypergraph& nu, const LfcPattern& p) {
  auto fs = pattern_factors(nu.k, p, [&](int j) { return nu.slices[j].v; });
  return bruteforce_average(fs, 2 * nu.k, nu.n);
}

LfcReport lfc_delta(const DensityFunction& nu, int k, const LfcOptions& opts) {
  return delta_report(k, nu.n, opts,
                      [&](const LfcPattern& p) { return lfc_value_arithmetic(nu, k, p, opts.budget); });
}

LfcReport lfc_delta(const WeightedHypergraph& nu, const LfcOptions& opts) {
  return delta_report(nu.k, static_cast<std::size_t>(nu.n), opts,
                      [&](const LfcPattern& p) { return lfc_value_hypergraph(nu, p, opts.budget); });
}

MixedFactorAssignment MixedFactorAssignment::from_id(int k, std::uint64_t base3_id) {
  MixedFactorAssignment a;
  a.k = k;
  const int slots = k << (k - 1);
  a.slots.resize(slots);
  for (int i = 0; i < slots; ++i) {
    a.slots[i] = static_cast<MixedFactor>(base3_id % 3);
    base3_id /= 3;
  }
  return a;
}

int MixedFactorAssignment::count_nu_minus_one() const {
  int c = 0;
  for (auto f : slots) c += f == MixedFactor::nu_minus_one;
  return c;
}

double mixed_blowup_average(const WeightedHypergraph& nu, const MixedFactorAssignment& a,
                            const ContractionBudget& budget) {
  const int k = nu.k;
  if (a.k != k || static_cast<int>(a.slots.size()) != (k << (k - 1)))
    throw usage_error("mixed_blowup_average: assignment shape mismatch");
  const int half = 1 << (k - 1);
  std::vector<Factor> fs;
  for (int j = 0; j < k; ++j) {
    for (int w = 0; w < half; ++w) {
      const MixedFactor mf = a.slots[static_cast<std::size_t>(j) * half + w];
      if (mf == MixedFactor::one) continue;
      Factor f;
      f.vars = slot_vars(k, j, w);
      f.table = nu.slices[j].v;
      if (mf == MixedFactor::nu_minus_one)
        for (auto& x : f.table) x -= 1.0;
      fs.push_back(std::move(f));
    }
  }
  return contract_average(std::move(fs), nu.n, budget);
}

double mixed_blowup_average_by_expansion(const WeightedHypergraph& nu,
                                         const MixedFactorAssignment& a,
                                         const ContractionBudget& budget) {
  std::vector<int> minus_slots;
  for (std::size_t i = 0; i < a.slots.size(); ++i)
    if (a.slots[i] == MixedFactor::nu_minus_one) minus_slots.push_back(static_cast<int>(i));
  const int K = static_cast<int>(minus_slots.size());
  if (K > 20) throw budget_error("mixed_blowup_average_by_expansion: too many nu-1 slots");
  LfcPattern base = LfcPattern::all_zeros(a.k);
  for (std::size_t i = 0; i < a.slots.size(); ++i)
    if (a.slots[i] == MixedFactor::nu) base.bits[i] = 1;
  double total = 0.0;
  for (std::uint64_t t = 0; t < (1ULL << K); ++t) {
    LfcPattern p = base;
    int ones = 0;
    for (int i = 0; i < K; ++i)
      if ((t >> i) & 1ULL) {
        p.bits[minus_slots[i]] = 1;
        ++ones;
      }
    const double sign = ((K - ones) % 2 == 0) ? 1.0 : -1.0;
    total += sign * lfc_value_hypergraph(nu, p, budget);
  }
  return total;
}

double strong_lfc_lhs(const WeightedHypergraph& nu, const WeightedHypergraph& g,
                      const WeightedHypergraph& gtilde, const std::vector<SlotChoice>& choice) {
  const int k = nu.k;
  const int n = nu.n;
  if (!g.shape_matches(nu) || !gtilde.shape_matches(nu))
    throw usage_error("strong_lfc_lhs: shape mismatch");
  if (static_cast<int>(choice.size()) != 2 * (k - 1))
    throw usage_error("strong_lfc_lhs: choice must have 2(k-1) entries");
  std::string where;
  if (!nonnegative(g, &where)) throw usage_error("strong_lfc_lhs: g negative at " + where);
  if (!dominates(nu, g, &where)) throw usage_error("strong_lfc_lhs: g > nu at " + where);
  if (!nonnegative(gtilde, &where)) throw usage_error("strong_lfc_lhs: gtilde negative at " + where);
  if (!bounded_by(gtilde, 1.0 + 1e-12, &where))
    throw usage_error("strong_lfc_lhs: gtilde > 1 at " + where);
  // digits: x_0..x_{k-2}, then x_{k-1}^{(0)}, x_{k-1}^{(1)}
  std::vector<int> idx(k + 1, 0);
  std::vector<int> x(k, 0);
  std::vector<double> terms;
  terms.reserve(pow_size(n, k + 1));
  do {
    for (int i = 0; i < k - 1; ++i) x[i] = idx[i];
    x[k - 1] = 0;  // unused for the nu factor (slice k-1 omits part k-1)
    double p = slice_at(nu.slices[k - 1], k, k - 1, x, n) - 1.0;
    for (int j = 0; j < k - 1 && p != 0.0; ++j) {
      for (int w = 0; w < 2; ++w) {
        x[k - 1] = idx[k - 1 + w];
        const auto& hg = (choice[2 * j + w] == SlotChoice::g) ? g : gtilde;
        p *= slice_at(hg.slices[j], k, j, x, n);
        if (p == 0.0) break;
      }
    }
    terms.push_back(p);
  } while (next_index(idx, n));
  return pairwise_mean(terms);
}

StrongLfcDiagnostics strong_lfc_chain(const WeightedHypergraph& nu, const WeightedHypergraph& g,
                                      double delta, const ContractionBudget& budget) {
  const int k = nu.k;
  const int n = nu.n;
  StrongLfcDiagnostics d;
  d.delta_used = delta;
  d.value = strong_lfc_lhs(nu, g, WeightedHypergraph::constant(k, n, 1.0),
                           std::vector<SlotChoice>(2 * (k - 1), SlotChoice::g));
  const double half_exp = 1.0 / static_cast<double>(1 << (k - 1));
  d.bound = 2.0 * std::pow(1.0 + delta, 1.0 - half_exp) * std::pow(delta, half_exp);
  // endpoint of the Cauchy-Schwarz chain: all 2^{k-1} factors on the last
  // part are nu-1, every other slot carries nu
  MixedFactorAssignment a;
  a.k = k;
  a.slots.assign(static_cast<std::size_t>(k) << (k - 1), MixedFactor::nu);
  const int half = 1 << (k - 1);
  for (int w = 0; w < half; ++w)
    a.slots[static_cast<std::size_t>(k - 1) * half + w] = MixedFactor::nu_minus_one;
  d.s1 = mixed_blowup_average(nu, a, budget);
  if (k == 3) {
    // one Cauchy-Schwarz step down, spelled out for the smallest case
    std::vector<double> outer;
    outer.reserve(pow_size(n, 3));
    std::vector<double> inner(n);
    std::vector<int> xa(3, 0);
    for (int x0 = 0; x0 < n; ++x0)
      for (int a2 = 0; a2 < n; ++a2)
        for (int b2 = 0; b2 < n; ++b2) {
          for (int x1 = 0; x1 < n; ++x1) {
            xa = {x0, x1, 0};
            const double nu2 = slice_at(nu.slices[2], 3, 2, xa, n) - 1.0;
            xa = {0, x1, a2};
            const double ga = slice_at(g.slices[0], 3, 0, xa, n);
            xa = {0, x1, b2};
            const double gb = slice_at(g.slices[0], 3, 0, xa, n);
            inner[x1] = nu2 * ga * gb;
          }
          const double e_inner = pairwise_mean(inner);
          xa = {x0, 0, a2};
          const double na = slice_at(nu.slices[1], 3, 1, xa, n);
          xa = {x0, 0, b2};
          const double nb = slice_at(nu.slices[1], 3, 1, xa, n);
          outer.push_back(na * nb * e_inner * e_inner);
        }
    d.s_mid = pairwise_mean(outer);
    d.s_mid_valid = true;
  }
  return d;
}

UniformityResult uniformity_from_lfc(const WeightedHypergraph& nu, double delta,
                                     bool delta_exhaustive, const CutNormBudget& cb) {
  const int k = nu.k;
  UniformityResult out;
  out.bound = 2.0 * std::pow(delta, 1.0 / static_cast<double>(1 << (k - 1)));
  bool cuts_exact = true;
  for (int j = 0; j < k; ++j) {
    Tensor t = tensor_shift(nu.slices[j], -1.0);
    const GowersResult gw = gowers_norm(t);
    out.u_norm = std::max(out.u_norm, gw.norm);
    if (k - 1 >= 2) {
      const CutNormResult c = cut_norm_tensor(t, cb);
      out.cut = std::max(out.cut, c.value);
      cuts_exact = cuts_exact && c.exact;
    } else {
      out.cut = std::max(out.cut, std::fabs(tensor_mean(t)));
    }
  }
  out.certified = delta_exhaustive && cuts_exact;
  out.satisfied = out.cut <= out.u_norm + 1e-9 && out.u_norm <= out.bound + 1e-9;
  return out;
}

UniformityResult uniformity_from_lfc(const DensityFunction& nu, int k, double delta,
                                     bool delta_exhaustive, const CutNormBudget& cb) {
  return uniformity_from_lfc(WeightedHypergraph::from_arithmetic(nu, k), delta,
                             delta_exhaustive, cb);
}

}  // namespace szlab
