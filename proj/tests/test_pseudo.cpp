#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "szlab/instances.hpp"
#include "szlab/lfc.hpp"

using namespace szlab;

namespace {

// direct 5-variable oracle for the strong linear-forms left-hand side, k = 3
double strong_lhs_oracle_k3(const WeightedHypergraph& nu, const WeightedHypergraph& g,
                            const WeightedHypergraph& gtilde,
                            const std::vector<SlotChoice>& choice) {
  const int n = nu.n;
  auto pick = [&](int slot) -> const WeightedHypergraph& {
    return choice[slot] == SlotChoice::g ? g : gtilde;
  };
  std::vector<double> terms;
  for (int x0 = 0; x0 < n; ++x0)
    for (int x1 = 0; x1 < n; ++x1)
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
          double p = nu.slices[2].v[static_cast<std::size_t>(x0) * n + x1] - 1.0;
          p *= pick(0).slices[0].v[static_cast<std::size_t>(x1) * n + a];
          p *= pick(1).slices[0].v[static_cast<std::size_t>(x1) * n + b];
          p *= pick(2).slices[1].v[static_cast<std::size_t>(x0) * n + a];
          p *= pick(3).slices[1].v[static_cast<std::size_t>(x0) * n + b];
          terms.push_back(p);
        }
  return pairwise_mean(terms);
}

}  // namespace

TEST_CASE("pattern bookkeeping") {
  const LfcPattern p = LfcPattern::all_ones(3);
  CHECK(p.slots() == 12);
  CHECK(p.count_active() == 12);
  CHECK(p.id() == 4095);
  CHECK(LfcPattern::all_zeros(3).count_active() == 0);
  for (std::uint64_t id : {0ULL, 1ULL, 777ULL, 4095ULL}) {
    CHECK(LfcPattern::from_id(3, id).id() == id);
    CHECK(LfcPattern::from_id(3, id).bitstring().size() == 12);
  }
  CHECK(LfcPattern::single(3, 5).count_active() == 1);
  CHECK(LfcPattern::single(3, 5).id() == (1ULL << 5));
}

TEST_CASE("constant majorant gives value one on every pattern") {
  const DensityFunction ones = DensityFunction::constant(4, 1.0);
  for (std::uint64_t id : {0ULL, 1ULL, 100ULL, 2048ULL, 4095ULL})
    CHECK(lfc_value_arithmetic(ones, 3, LfcPattern::from_id(3, id)) ==
          doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("k = 2 blow-up averages factor into means") {
  // every active factor averages a mean-one function over one free variable
  const DensityFunction nu = DensityFunction::random_mean_one(5, 9);
  for (std::uint64_t id = 0; id < 16; ++id)
    CHECK(lfc_value_arithmetic(nu, 2, LfcPattern::from_id(2, id)) ==
          doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("contraction matches the nested-loop oracle") {
  std::mt19937_64 rng(404);
  for (std::uint64_t seed : {1ULL, 2ULL, 3ULL}) {
    const DensityFunction nu = DensityFunction::random_mean_one(5, seed, 0.4);
    for (int t = 0; t < 8; ++t) {
      const LfcPattern p = LfcPattern::from_id(3, rng() % 4096);
      const double fast = lfc_value_arithmetic(nu, 3, p);
      const double slow = lfc_value_arithmetic_bruteforce(nu, 3, p);
      CHECK(fast == doctest::Approx(slow).epsilon(1e-9));
    }
    const WeightedHypergraph hg = random_majorant_hg(3, 4, seed);
    for (int t = 0; t < 4; ++t) {
      const LfcPattern p = LfcPattern::from_id(3, rng() % 4096);
      CHECK(lfc_value_hypergraph(hg, p) ==
            doctest::Approx(lfc_value_hypergraph_bruteforce(hg, p)).epsilon(1e-9));
    }
  }
}

TEST_CASE("delta of the constant majorant is zero, exhaustively") {
  const LfcReport rep = lfc_delta(DensityFunction::constant(5, 1.0), 3);
  CHECK(rep.delta == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(rep.method == "exhaustive");
  CHECK(rep.samples == 4096);
}

TEST_CASE("single-factor patterns read off the mean") {
  const double eta = 0.125;
  const DensityFunction nu = DensityFunction::constant(5, 1.0 + eta);
  for (int s = 0; s < 12; ++s)
    CHECK(lfc_value_arithmetic(nu, 3, LfcPattern::single(3, s)) ==
          doctest::Approx(1.0 + eta).epsilon(1e-12));
  const LfcReport rep = lfc_delta(nu, 3);
  CHECK(rep.delta == doctest::Approx(std::pow(1.0 + eta, 12) - 1.0).epsilon(1e-9));
  CHECK(rep.worst_pattern.count_active() == 12);
}

TEST_CASE("exhaustive delta equals the brute-force maximum") {
  const DensityFunction nu = DensityFunction::random_mean_one(3, 77, 0.5);
  double want = 0.0;
  for (std::uint64_t id = 0; id < 4096; ++id)
    want = std::max(want,
                    std::fabs(lfc_value_arithmetic_bruteforce(nu, 3, LfcPattern::from_id(3, id)) -
                              1.0));
  const LfcReport rep = lfc_delta(nu, 3);
  CHECK(rep.method == "exhaustive");
  CHECK(rep.delta == doctest::Approx(want).epsilon(1e-9));
  CHECK(rep.delta_all_ones <= rep.delta + 1e-12);
}

TEST_CASE("sampled delta for k = 4 lower-bounds and reports method") {
  LfcOptions opts;
  opts.samples = 8;
  opts.seed = 5;
  const LfcReport rep = lfc_delta(DensityFunction::random_mean_one(3, 8, 0.3), 4, opts);
  CHECK(rep.method == "sampled");
  CHECK(rep.delta >= rep.delta_all_ones - 1e-12);
  CHECK(rep.delta >= 0.0);
}

TEST_CASE("mixed blow-up vanishes for the constant majorant") {
  const WeightedHypergraph ones = WeightedHypergraph::constant(3, 4, 1.0);
  for (std::uint64_t id : {2ULL, 7ULL, 500ULL}) {
    const MixedFactorAssignment a = MixedFactorAssignment::from_id(3, id * 3 + 2);
    if (a.count_nu_minus_one() == 0) continue;
    CHECK(mixed_blowup_average(ones, a) == doctest::Approx(0.0).epsilon(1e-12));
  }
}

TEST_CASE("mixed blow-up bound and expansion cross-route") {
  const WeightedHypergraph nu = random_majorant_hg(3, 4, 13);
  const LfcReport rep = lfc_delta(nu);
  REQUIRE(rep.method == "exhaustive");
  const double delta = rep.delta;

  // all-nu assignment is the plain all-ones pattern
  MixedFactorAssignment all_nu;
  all_nu.k = 3;
  all_nu.slots.assign(12, MixedFactor::nu);
  const double v = mixed_blowup_average(nu, all_nu);
  CHECK(std::fabs(v - 1.0) <= delta + 1e-12);

  std::mt19937_64 rng(29);
  for (int t = 0; t < 10; ++t) {
    MixedFactorAssignment a;
    a.k = 3;
    a.slots.resize(12);
    for (auto& s : a.slots) s = static_cast<MixedFactor>(rng() % 3);
    const int K = a.count_nu_minus_one();
    const double fast = mixed_blowup_average(nu, a);
    const double slow = mixed_blowup_average_by_expansion(nu, a);
    CHECK(fast == doctest::Approx(slow).epsilon(1e-9));
    if (K >= 1) CHECK(std::fabs(fast) <= std::ldexp(delta, K) + 1e-12);
  }
}

TEST_CASE("strong linear forms lhs basics") {
  const WeightedHypergraph ones = WeightedHypergraph::constant(3, 4, 1.0);
  const WeightedHypergraph zero = WeightedHypergraph::constant(3, 4, 0.0);
  const std::vector<SlotChoice> all_g(4, SlotChoice::g);
  CHECK(strong_lfc_lhs(ones, ones, ones, all_g) == doctest::Approx(0.0).epsilon(1e-12));
  const WeightedHypergraph nu = random_majorant_hg(3, 4, 17);
  CHECK(strong_lfc_lhs(nu, zero, ones, all_g) == doctest::Approx(0.0).epsilon(1e-12));
  CHECK_THROWS_AS(strong_lfc_lhs(nu, hg_shift(nu, 1.0), ones, all_g), usage_error);
  CHECK_THROWS_AS(strong_lfc_lhs(nu, zero, hg_shift(ones, 0.5), all_g), usage_error);
  CHECK_THROWS_AS(strong_lfc_lhs(nu, zero, ones, std::vector<SlotChoice>(3, SlotChoice::g)),
                  usage_error);
}

TEST_CASE("strong linear forms lhs matches the direct oracle") {
  for (std::uint64_t seed : {3ULL, 4ULL}) {
    const WeightedHypergraph nu = random_majorant_hg(3, 4, seed);
    const WeightedHypergraph g = random_subfunction_hg(nu, seed + 50);
    const WeightedHypergraph gt = random_bounded_hg(3, 4, seed + 90);
    for (std::uint64_t cid = 0; cid < 16; ++cid) {
      std::vector<SlotChoice> choice(4);
      for (int i = 0; i < 4; ++i)
        choice[i] = ((cid >> i) & 1) ? SlotChoice::gtilde : SlotChoice::g;
      CHECK(strong_lfc_lhs(nu, g, gt, choice) ==
            doctest::Approx(strong_lhs_oracle_k3(nu, g, gt, choice)).epsilon(1e-9));
    }
  }
}

TEST_CASE("strong linear forms chain diagnostics") {
  for (std::uint64_t seed : {6ULL, 7ULL, 8ULL}) {
    const WeightedHypergraph nu = random_majorant_hg(3, 4, seed);
    const WeightedHypergraph g = random_subfunction_hg(nu, seed + 200);
    const LfcReport rep = lfc_delta(nu);
    REQUIRE(rep.method == "exhaustive");
    const StrongLfcDiagnostics d = strong_lfc_chain(nu, g, rep.delta);
    CHECK(std::fabs(d.value) <= d.bound + 1e-9);
    CHECK(d.s_mid_valid);
    CHECK(d.s_mid >= -1e-12);
    CHECK(std::fabs(d.s1) <= std::ldexp(rep.delta, 4) + 1e-12);  // K = 2^{k-1} = 4
    CHECK(d.delta_used == rep.delta);
  }
}

TEST_CASE("uniformity consequence") {
  const UniformityResult triv = uniformity_from_lfc(DensityFunction::constant(4, 1.0), 3, 0.0, true);
  CHECK(triv.u_norm == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(triv.cut == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(triv.satisfied);
  CHECK(triv.certified);

  for (std::uint64_t seed : {10ULL, 11ULL}) {
    const DensityFunction nu = DensityFunction::random_mean_one(4, seed, 0.3);
    const LfcReport rep = lfc_delta(nu, 3);
    REQUIRE(rep.method == "exhaustive");
    const UniformityResult u = uniformity_from_lfc(nu, 3, rep.delta, true);
    CHECK(u.satisfied);
    CHECK(u.certified);
    CHECK(u.cut <= u.u_norm + 1e-9);
    CHECK(u.u_norm <= u.bound + 1e-9);
  }
}
