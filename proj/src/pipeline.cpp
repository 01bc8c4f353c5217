#include "szlab/pipeline.hpp"

#include <chrono>
#include <cmath>
#include <random>
#include <unordered_set>

namespace szlab {

LfcReport lfc_delta_monte_carlo(const DensityFunction& nu, int k, std::uint64_t samples,
                                std::uint64_t random_patterns, std::uint64_t seed) {
  if (k < 2 || k > 6) throw usage_error("lfc_delta_monte_carlo: k out of range");
  if (samples == 0) throw usage_error("lfc_delta_monte_carlo: samples must be positive");
  const int n = static_cast<int>(nu.n);
  const int half = 1 << (k - 1);
  const int slots = k * half;

  std::vector<LfcPattern> patterns;
  patterns.push_back(LfcPattern::all_ones(k));
  for (int s = 0; s < slots; ++s) patterns.push_back(LfcPattern::single(k, s));
  {
    std::mt19937_64 prng(mix_seed(seed, 1));
    std::unordered_set<std::uint64_t> seen;
    for (const auto& p : patterns) seen.insert(p.id());
    const std::uint64_t mask = slots >= 64 ? ~0ULL : ((1ULL << slots) - 1);
    while (patterns.size() < 1 + static_cast<std::size_t>(slots) + random_patterns) {
      const std::uint64_t id = prng() & mask;
      if (id == 0 || !seen.insert(id).second) continue;
      patterns.push_back(LfcPattern::from_id(k, id));
    }
  }

  // For each sampled assignment of the 2k variables, evaluate every active
  // form once and multiply per pattern.
  std::mt19937_64 prng(mix_seed(seed, 2));
  std::uniform_int_distribution<int> pick(0, n - 1);
  std::vector<int> x(static_cast<std::size_t>(2 * k));  // x[2 i + copy]
  std::vector<double> form(static_cast<std::size_t>(slots));
  std::vector<std::vector<double>> acc(patterns.size(),
                                       std::vector<double>(static_cast<std::size_t>(samples)));
  for (std::uint64_t s = 0; s < samples; ++s) {
    for (auto& xi : x) xi = pick(prng);
    for (int j = 0; j < k; ++j) {
      for (int wmask = 0; wmask < half; ++wmask) {
        long long sum = 0;
        int bit = 0;
        for (int i = 0; i < k; ++i) {
          if (i == j) continue;
          const int copy = (wmask >> bit) & 1;
          sum += static_cast<long long>(j - i) * x[2 * i + copy];
          ++bit;
        }
        form[static_cast<std::size_t>(j * half + wmask)] = nu.values[mod_index(sum, n)];
      }
    }
    for (std::size_t pi = 0; pi < patterns.size(); ++pi) {
      double prod = 1.0;
      for (int sl = 0; sl < slots; ++sl)
        if (patterns[pi].bits[sl]) prod *= form[sl];
      acc[pi][s] = prod;
    }
  }

  LfcReport rep;
  rep.k = k;
  rep.n = nu.n;
  rep.method = "monte_carlo";
  rep.samples = samples;
  rep.seed = seed;
  rep.delta = -1.0;
  for (std::size_t pi = 0; pi < patterns.size(); ++pi) {
    const double dev = std::fabs(pairwise_mean(acc[pi]) - 1.0);
    if (pi == 0) rep.delta_all_ones = dev;
    rep.per_pattern.emplace_back(patterns[pi].id(), dev);
    if (dev > rep.delta) {
      rep.delta = dev;
      rep.worst_pattern = patterns[pi];
    }
  }
  return rep;
}

namespace {

struct Deadline {
  std::chrono::steady_clock::time_point end;
  bool enabled = false;
  void check(const char* stage) const {
    if (enabled && std::chrono::steady_clock::now() > end)
      throw budget_error(std::string("pipeline: budget exhausted at stage ") + stage);
  }
};

}  // namespace

PipelineReport run_pipeline(const PipelineConfig& cfg) {
  if (cfg.k < 3) throw usage_error("run_pipeline: k must be >= 3");
  Deadline dl;
  if (cfg.budget_ms > 0) {
    dl.enabled = true;
    dl.end = std::chrono::steady_clock::now() + std::chrono::milliseconds(cfg.budget_ms);
  }
  PipelineReport rep;
  rep.k = cfg.k;
  rep.seed = cfg.seed;
  rep.floor = cfg.floor;
  rep.params = w_trick_params(cfg.n_prime, cfg.c0, cfg.gamma);
  dl.check("params");

  rep.b_set = cfg.b_set ? *cfg.b_set
                        : greedy_ap_free_prime_positions(rep.params, mix_seed(cfg.seed, 10));
  const DensityFunction fb = f_b_embed(rep.params, rep.b_set);
  rep.alpha = mean(fb);
  rep.lambda_mean = mean(lambda_weight(rep.params));
  dl.check("embedding");

  const GpyMajorant maj = gpy_majorant(rep.params, cfg.floor);
  rep.majorant_scale = maj.scale;
  rep.domination_ratio = maj.domination_ratio;
  dl.check("majorant");

  // ap_count of f_B over Z_M via its sparse support, with a wrap-around audit:
  // progressions whose integer lift leaves [N'] are counted separately (the
  // M >= 2N' embedding makes this zero, but it is measured, never assumed).
  {
    const long long m = rep.params.m;
    std::unordered_set<long long> in_b(rep.b_set.begin(), rep.b_set.end());
    const double coeff = rep.b_set.empty() ? 0.0 : fb.values[static_cast<std::size_t>(rep.b_set[0])];
    long long count = 0, wrap = 0;
    for (long long a : rep.b_set) {
      for (long long b : rep.b_set) {
        bool ok = true, wrapped = false;
        for (int j = 2; j < cfg.k && ok; ++j) {
          const long long lift = a + j * (b - a);
          const long long cyc = ((lift % m) + m) % m;
          if (!in_b.count(cyc)) ok = false;
          else if (lift != cyc) wrapped = true;
        }
        if (ok) {
          ++count;
          if (wrapped) ++wrap;
        }
      }
    }
    const double md = static_cast<double>(m);
    rep.ap_value = std::pow(coeff, cfg.k) * static_cast<double>(count) / (md * md);
    rep.trivial_part =
        std::pow(coeff, cfg.k) * static_cast<double>(rep.b_set.size()) / (md * md);
    rep.wraparound_count = wrap;
  }
  dl.check("ap_count");

  rep.delta_report = lfc_delta_monte_carlo(maj.nu, cfg.k, cfg.mc_samples, cfg.random_patterns,
                                           mix_seed(cfg.seed, 11));
  dl.check("delta");

  if (rep.alpha > 0.0) {
    try {
      const int inv = alpha_inverse(rep.alpha / 2.0, cfg.k, cfg.table_n_max);
      rep.dense_term = 1.0 / (static_cast<double>(inv) * inv);
    } catch (const table_exhausted_error&) {
      rep.dense_term = 1.0 / (static_cast<double>(cfg.table_n_max) * cfg.table_n_max);
      rep.dense_term_table_exhausted = true;
    }
  }
  rep.error_term_log = rep.delta_report.delta > 0.0 ? std::log(1.0 / rep.delta_report.delta) : 0.0;
  return rep;
}

}  // namespace szlab
