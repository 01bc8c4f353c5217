#include "szlab/suites.hpp"

#include <cmath>
#include <random>

namespace szlab {

SuiteScope suite_scope_from_string(const std::string& s) {
  if (s == "lemB") return SuiteScope::lemB;
  if (s == "corB") return SuiteScope::corB;
  if (s == "lemC") return SuiteScope::lemC;
  if (s == "propD_dense") return SuiteScope::propD_dense;
  if (s == "propD_chain") return SuiteScope::propD_chain;
  if (s == "eqD_varnu") return SuiteScope::eqD_varnu;
  if (s == "eqD_capnu") return SuiteScope::eqD_capnu;
  throw usage_error("unknown suite scope: " + s);
}

std::string suite_scope_name(SuiteScope scope) {
  switch (scope) {
    case SuiteScope::lemB: return "lemB";
    case SuiteScope::corB: return "corB";
    case SuiteScope::lemC: return "lemC";
    case SuiteScope::propD_dense: return "propD_dense";
    case SuiteScope::propD_chain: return "propD_chain";
    case SuiteScope::eqD_varnu: return "eqD_varnu";
    case SuiteScope::eqD_capnu: return "eqD_capnu";
  }
  throw usage_error("unknown suite scope");
}

MixedSuiteOutcome verify_all_mixed_assignments(const WeightedHypergraph& nu, int spot_checks,
                                               std::uint64_t spot_seed) {
  const int k = nu.k;
  const int slots = k << (k - 1);
  if (slots > 20) throw budget_error("verify_all_mixed_assignments: slot count too large");

  // plain pattern values, indexed by the nu/1 bitmask
  std::vector<double> tab(1ULL << slots);
  for (std::uint64_t id = 0; id < tab.size(); ++id)
    tab[id] = lfc_value_hypergraph(nu, LfcPattern::from_id(k, id));

  MixedSuiteOutcome out;
  for (double v : tab) out.delta = std::max(out.delta, std::fabs(v - 1.0));

  // Signed-sum DP: process slots from the highest down, replacing the binary
  // slot digit by a ternary one. Choice 0 keeps the slot at exponent 0,
  // choice 1 at exponent 1, choice 2 takes the nu-1 difference.
  std::vector<double> cur = tab;
  for (int s = slots - 1; s >= 0; --s) {
    const std::size_t low = 1ULL << s;
    const std::size_t blocks = cur.size() >> (s + 1);
    std::vector<double> next(blocks * 3 * low);
    for (std::size_t a = 0; a < blocks; ++a) {
      const double* b0 = cur.data() + a * 2 * low;
      const double* b1 = b0 + low;
      double* o = next.data() + a * 3 * low;
      for (std::size_t m = 0; m < low; ++m) {
        o[m] = b0[m];
        o[low + m] = b1[m];
        o[2 * low + m] = b1[m] - b0[m];
      }
    }
    cur = std::move(next);
  }

  // check |S| <= 2^K delta for every assignment with K >= 1
  std::vector<std::uint64_t> pow3(slots + 1, 1);
  for (int i = 1; i <= slots; ++i) pow3[i] = pow3[i - 1] * 3;
  out.min_slack = 1e300;
  for (std::uint64_t a = 0; a < cur.size(); ++a) {
    int kk = 0;
    for (int s = 0; s < slots; ++s)
      if ((a / pow3[s]) % 3 == 2) ++kk;
    if (kk == 0) continue;
    ++out.checked;
    const double bound = std::ldexp(out.delta, kk);
    const double slack = bound - std::fabs(cur[a]);
    if (slack < out.min_slack) {
      out.min_slack = slack;
      out.worst_id = a;
    }
  }

  // dual route: a few assignments re-evaluated by direct contraction
  std::mt19937_64 prng(mix_seed(spot_seed, 7));
  for (int i = 0; i < spot_checks; ++i) {
    const std::uint64_t a = prng() % cur.size();
    const double direct =
        mixed_blowup_average(nu, MixedFactorAssignment::from_id(k, a));
    const double gap = std::fabs(direct - cur[a]) / (1.0 + std::fabs(direct));
    out.max_route_gap = std::max(out.max_route_gap, gap);
  }
  return out;
}

namespace {

double exhaustive_delta(const WeightedHypergraph& nu) {
  LfcOptions o;
  const LfcReport rep = lfc_delta(nu, o);
  if (rep.method != "exhaustive")
    throw usage_error("suite: exhaustive delta unavailable at this k");
  return rep.delta;
}

}  // namespace

SuiteResult run_suite(SuiteScope scope, int seeds, int n, int k, std::uint64_t seed0) {
  if (seeds < 1) throw usage_error("run_suite: seeds must be >= 1");
  SuiteResult res;
  res.scope = suite_scope_name(scope);
  res.k = k;
  res.n = n;
  res.worst_slack = 1e300;
  auto add = [&](std::uint64_t seed, bool pass, double lhs, double rhs, std::string detail) {
    SuiteInstanceRow row;
    row.seed = seed;
    row.pass = pass;
    row.lhs = lhs;
    row.rhs = rhs;
    row.slack = rhs - lhs;
    row.detail = std::move(detail);
    if (row.slack < res.worst_slack) res.worst_slack = row.slack;
    ++res.instances;
    if (!pass) {
      ++res.failures;
      if (res.first_failure.empty())
        res.first_failure = res.scope + " seed=" + std::to_string(seed) + " n=" +
                            std::to_string(n) + " k=" + std::to_string(k) + " " + row.detail;
    }
    res.rows.push_back(std::move(row));
  };

  for (int i = 0; i < seeds; ++i) {
    const std::uint64_t seed = seed0 + static_cast<std::uint64_t>(i);
    const WeightedHypergraph nu = random_majorant_hg(k, n, seed);
    switch (scope) {
      case SuiteScope::lemB: {
        const MixedSuiteOutcome m = verify_all_mixed_assignments(nu, 16, seed);
        const bool pass = m.min_slack >= -1e-9 && m.max_route_gap <= 1e-9;
        add(seed, pass, 0.0, m.min_slack,
            "worst_assignment=" + std::to_string(m.worst_id) +
                " route_gap=" + std::to_string(m.max_route_gap));
        break;
      }
      case SuiteScope::corB: {
        const double delta = exhaustive_delta(nu);
        const UniformityResult u = uniformity_from_lfc(nu, delta, true);
        add(seed, u.satisfied && u.certified, u.u_norm, u.bound,
            "cut=" + std::to_string(u.cut));
        break;
      }
      case SuiteScope::lemC: {
        const double delta = exhaustive_delta(nu);
        const WeightedHypergraph g = random_subfunction_hg(nu, seed);
        const WeightedHypergraph gt = random_bounded_hg(k, n, seed + 7777);
        const double half_exp = 1.0 / static_cast<double>(1 << (k - 1));
        const double bound =
            2.0 * std::pow(1.0 + delta, 1.0 - half_exp) * std::pow(delta, half_exp);
        double worst = 0.0;
        int worst_choice = -1;
        const int combos = 1 << (2 * (k - 1));
        for (int c = 0; c < combos; ++c) {
          std::vector<SlotChoice> choice(2 * (k - 1));
          for (int b = 0; b < 2 * (k - 1); ++b)
            choice[b] = ((c >> b) & 1) ? SlotChoice::gtilde : SlotChoice::g;
          const double v = std::fabs(strong_lfc_lhs(nu, g, gt, choice));
          if (v > worst) {
            worst = v;
            worst_choice = c;
          }
        }
        add(seed, worst <= bound + 1e-9, worst, bound,
            "worst_choice=" + std::to_string(worst_choice));
        break;
      }
      case SuiteScope::propD_dense: {
        const WeightedHypergraph g = random_bounded_hg(k, n, seed);
        const WeightedHypergraph gt = random_bounded_hg(k, n, seed + 7777);
        const DenseGapResult r = dense_counting_gap(g, gt);
        add(seed, r.satisfied, r.gap, r.bound, "epsilon=" + std::to_string(r.epsilon));
        break;
      }
      case SuiteScope::propD_chain: {
        const double delta = exhaustive_delta(nu);
        const WeightedHypergraph g = random_subfunction_hg(nu, seed);
        const WeightedHypergraph gt = random_bounded_hg(k, n, seed + 7777);
        const CountingDiagnostics d = relative_counting_gap(g, gt, nu, delta);
        add(seed, d.ladder_ok, d.gap, d.bound_shape,
            d.ladder_ok ? "ratio=" + std::to_string(d.ratio)
                        : "first_failure=" + d.first_failure);
        break;
      }
      case SuiteScope::eqD_varnu: {
        const double delta = exhaustive_delta(nu);
        const WeightedHypergraph ones = WeightedHypergraph::constant(k, n, 1.0);
        const MarginalTriple t = marginals(ones, nu, ones);
        std::vector<double> sq(t.nu_prime.v.size()), ab(t.nu_prime.v.size());
        for (std::size_t j = 0; j < sq.size(); ++j) {
          const double d = t.nu_prime.v[j] - 1.0;
          sq[j] = d * d;
          ab[j] = std::fabs(d);
        }
        const double mid = pairwise_mean(sq);
        const double lo = pairwise_mean(ab) * pairwise_mean(ab);
        const bool pass = lo <= mid + 1e-12 && mid <= 3.0 * delta + 1e-12;
        add(seed, pass, mid, 3.0 * delta, "cs_lhs=" + std::to_string(lo));
        break;
      }
      case SuiteScope::eqD_capnu: {
        const WeightedHypergraph g = random_subfunction_hg(nu, seed);
        const WeightedHypergraph ones = WeightedHypergraph::constant(k, n, 1.0);
        const MarginalTriple t = marginals(g, nu, ones);
        double worst = -1e300;
        for (std::size_t j = 0; j < t.g_prime.v.size(); ++j) {
          const double excess = t.g_prime.v[j] - t.g_prime_capped.v[j];
          worst = std::max(worst, excess - std::fabs(t.nu_prime.v[j] - 1.0));
          worst = std::max(worst, -excess);
        }
        add(seed, worst <= 1e-12, worst, 0.0, "entrywise");
        break;
      }
    }
  }
  return res;
}

}  // namespace szlab
