#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numeric>

#include "szlab/pipeline.hpp"
#include "szlab/sieve.hpp"

using namespace szlab;

TEST_CASE("prime utilities") {
  CHECK(primes_up_to(10) == std::vector<long long>{2, 3, 5, 7});
  CHECK(primes_up_to(1).empty());
  CHECK(primes_up_to(100).size() == 25);
  CHECK(is_prime(2));
  CHECK(is_prime(97));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(91));
}

TEST_CASE("mobius table") {
  const auto mu = mobius_table(30);
  CHECK(mu[1] == 1);
  CHECK(mu[2] == -1);
  CHECK(mu[4] == 0);
  CHECK(mu[6] == 1);
  CHECK(mu[12] == 0);
  CHECK(mu[30] == -1);
}

TEST_CASE("W-trick parameter derivation") {
  const SieveParams p = w_trick_params(1000, 0.5, 0.3);
  CHECK(p.omega == doctest::Approx(0.5 * std::log(1000.0)).epsilon(1e-12));
  CHECK(p.w == 6);  // omega ~ 3.45, primes 2 and 3
  CHECK(p.phi_w == 2);
  CHECK(p.m == 2003);
  CHECK(is_prime(p.m));
  CHECK(p.m >= 2 * p.n_prime);
  CHECK(p.r_level == doctest::Approx(std::pow(1000.0, 0.3)).epsilon(1e-12));
  CHECK(std::gcd(p.b, p.w) == 1);

  const SieveParams tiny = w_trick_params(10);
  CHECK(tiny.w == 1);
  CHECK(tiny.b == 1);
  CHECK(tiny.m == 23);

  CHECK_THROWS_AS(w_trick_params(1000, 0.2, 0.3), usage_error);
  CHECK_THROWS_AS(w_trick_params(1000, 0.25, 1.5), usage_error);
  CHECK_THROWS_AS(w_trick_params(2), usage_error);
}

TEST_CASE("residue choice") {
  const auto [b, count] = choose_residue(10, 2);
  CHECK(b == 1);
  CHECK(count == 7);  // 3,5,7,11,13,17,19 among 1+2n, n <= 10
  // recount for self-consistency
  long long recount = 0;
  for (long long n = 1; n <= 10; ++n) recount += is_prime(b + 2 * n);
  CHECK(count == recount);
}

TEST_CASE("lambda weight") {
  SieveParams p;
  p.n_prime = 10;
  p.w = 2;
  p.phi_w = 1;
  p.b = 1;
  p.m = 23;
  const DensityFunction lam = lambda_weight(p);
  REQUIRE(lam.n == 23);
  const double c = 0.5 * std::log(10.0);
  CHECK(lam.values[1] == doctest::Approx(c).epsilon(1e-12));  // 1 + 2*1 = 3 prime
  CHECK(lam.values[4] == doctest::Approx(0.0).epsilon(1e-12));  // 9 composite
  CHECK(lam.values[0] == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(lam.values[15] == doctest::Approx(0.0).epsilon(1e-12));  // beyond N'
  CHECK(mean(lam) == doctest::Approx(7.0 * c / 23.0).epsilon(1e-12));
}

TEST_CASE("f_B embedding") {
  const SieveParams p = w_trick_params(10);  // W = 1, b = 1, M = 23
  CHECK(mean(f_b_embed(p, {})) == doctest::Approx(0.0).epsilon(1e-12));

  const std::vector<long long> b_set{1, 2, 4};  // 2, 3, 5 all prime
  const DensityFunction fb = f_b_embed(p, b_set);
  CHECK(mean(fb) == doctest::Approx(3.0 * std::log(10.0) / 10.0).epsilon(1e-12));

  CHECK_THROWS_AS(f_b_embed(p, {1, 3}), usage_error);  // 1 + 3 = 4 composite
  CHECK_THROWS_AS(f_b_embed(p, {11}), usage_error);  // outside [N']
  CHECK_THROWS_AS(f_b_embed(p, b_set, 0.99), usage_error);  // density target unmet
}

TEST_CASE("GPY majorant normalization and flat tail") {
  const SieveParams p = w_trick_params(200, 0.25, 0.2);  // W = 1, R ~ 2.89
  for (bool floor : {true, false}) {
    const GpyMajorant maj = gpy_majorant(p, floor);
    CHECK(mean(maj.nu) == doctest::Approx(1.0).epsilon(1e-12));
    for (double v : maj.nu.values) CHECK(v >= -1e-12);
    CHECK(maj.floor == floor);
    CHECK(maj.domination_ratio > 0.0);
    CHECK(std::isfinite(maj.domination_ratio));
  }
  // positions 4 and 6 carry primes 5 and 7, both above R with no small
  // divisor, so their raw divisor sums agree
  const GpyMajorant flat = gpy_majorant(p, false);
  CHECK(flat.nu.values[4] == doctest::Approx(flat.nu.values[6]).epsilon(1e-12));
  CHECK(flat.nu.values[4] > 0.0);

  SieveParams low = p;
  low.r_level = 1.5;
  CHECK_THROWS_AS(gpy_majorant(low), usage_error);
}

TEST_CASE("greedy AP-free prime positions") {
  const SieveParams p = w_trick_params(300);
  for (std::uint64_t seed : {1ULL, 2ULL}) {
    const auto b_set = greedy_ap_free_prime_positions(p, seed);
    CHECK(!b_set.empty());
    CHECK(std::is_sorted(b_set.begin(), b_set.end()));
    for (long long n : b_set) {
      CHECK(n >= 1);
      CHECK(n <= p.n_prime);
      CHECK(is_prime(p.b + p.w * n));
    }
    // no integer 3-term progression
    for (std::size_t i = 0; i < b_set.size(); ++i)
      for (std::size_t j = i + 1; j < b_set.size(); ++j)
        for (std::size_t l = j + 1; l < b_set.size(); ++l)
          CHECK(b_set[i] + b_set[l] != 2 * b_set[j]);
  }
  const auto capped = greedy_ap_free_prime_positions(p, 1, 5);
  CHECK(capped.size() == 5);
}

TEST_CASE("pipeline degenerate B sets") {
  PipelineConfig cfg;
  cfg.n_prime = 500;
  cfg.mc_samples = 2000;
  cfg.random_patterns = 8;

  cfg.b_set = std::vector<long long>{};
  const PipelineReport empty = run_pipeline(cfg);
  CHECK(empty.alpha == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(empty.ap_value == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(empty.dense_term == doctest::Approx(0.0).epsilon(1e-12));

  cfg.b_set = std::vector<long long>{4};  // W = 1, b = 1: 5 is prime
  const PipelineReport single = run_pipeline(cfg);
  CHECK(single.ap_value == single.trivial_part);
  CHECK(single.wraparound_count == 0);
  CHECK(single.alpha > 0.0);
}

TEST_CASE("pipeline end to end at small scale") {
  PipelineConfig cfg;
  cfg.n_prime = 500;
  cfg.seed = 3;
  cfg.mc_samples = 2000;
  cfg.random_patterns = 8;
  const PipelineReport rep = run_pipeline(cfg);
  CHECK(rep.params.n_prime == 500);
  CHECK(!rep.b_set.empty());
  CHECK(rep.alpha > 0.0);
  CHECK(rep.ap_value >= rep.trivial_part - 1e-15);
  CHECK(rep.wraparound_count == 0);
  CHECK(rep.delta_report.method == "monte_carlo");
  CHECK(rep.delta_report.per_pattern.size() == 1 + 12 + 8);
  CHECK(rep.delta_report.delta >= rep.delta_report.delta_all_ones - 1e-15);
  CHECK(rep.dense_term > 0.0);

  // reproducibility: identical config, identical report
  const PipelineReport again = run_pipeline(cfg);
  CHECK(again.b_set == rep.b_set);
  CHECK(again.ap_value == rep.ap_value);
  CHECK(again.delta_report.delta == rep.delta_report.delta);
}

TEST_CASE("pipeline budget enforcement") {
  PipelineConfig cfg;
  cfg.n_prime = 4000;
  cfg.budget_ms = 1;
  CHECK_THROWS_AS(run_pipeline(cfg), budget_error);
}
