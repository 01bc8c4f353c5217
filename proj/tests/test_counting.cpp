#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "szlab/counting.hpp"
#include "szlab/instances.hpp"
#include "szlab/lfc.hpp"

using namespace szlab;

namespace {

double slice_val(const Tensor& slice, int k, int j, const std::vector<int>& x, int n) {
  std::size_t flat = 0;
  for (int i = 0; i < k; ++i) {
    if (i == j) continue;
    flat = flat * static_cast<std::size_t>(n) + static_cast<std::size_t>(x[i]);
  }
  return slice.v[flat];
}

// telescoping summand j: replace slices < j by gtilde, slice j by g - gtilde
double telescope_term(const WeightedHypergraph& g, const WeightedHypergraph& gt, int j) {
  const int k = g.k;
  const int n = g.n;
  std::vector<int> idx(k, 0);
  std::vector<double> terms;
  do {
    double p = 1.0;
    for (int i = 0; i < k; ++i) {
      if (i < j)
        p *= slice_val(gt.slices[i], k, i, idx, n);
      else if (i == j)
        p *= slice_val(g.slices[i], k, i, idx, n) - slice_val(gt.slices[i], k, i, idx, n);
      else
        p *= slice_val(g.slices[i], k, i, idx, n);
    }
    terms.push_back(p);
  } while (next_index(idx, n));
  return pairwise_mean(terms);
}

}  // namespace

TEST_CASE("clique density basics") {
  CHECK(clique_density(WeightedHypergraph::constant(3, 4, 1.0)) ==
        doctest::Approx(1.0).epsilon(1e-12));
  CHECK(clique_density(WeightedHypergraph::constant(3, 4, 0.5)) ==
        doctest::Approx(0.125).epsilon(1e-12));
  WeightedHypergraph g = WeightedHypergraph::constant(3, 4, 1.0);
  g.slices[1] = Tensor::zeros(2, 4);
  CHECK(clique_density(g) == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("arithmetic substitution recovers the AP count") {
  for (std::size_t n : {5, 7, 11}) {
    for (std::uint64_t seed : {1ULL, 2ULL}) {
      const DensityFunction f = DensityFunction::random_mean_one(n, seed);
      const WeightedHypergraph g = WeightedHypergraph::from_arithmetic(f, 3);
      CHECK(clique_density(g) == doctest::Approx(ap_count(f, 3)).epsilon(1e-9));
    }
  }
}

TEST_CASE("marginals on constants and capping") {
  const WeightedHypergraph ones = WeightedHypergraph::constant(3, 4, 1.0);
  const MarginalTriple t = marginals(ones, ones, ones);
  for (double v : t.g_prime.v) CHECK(v == doctest::Approx(1.0).epsilon(1e-12));
  for (double v : t.nu_prime.v) CHECK(v == doctest::Approx(1.0).epsilon(1e-12));
  for (double v : t.g_prime_capped.v) CHECK(v == doctest::Approx(1.0).epsilon(1e-12));

  const WeightedHypergraph big = WeightedHypergraph::constant(3, 4, 1.2);
  const MarginalTriple tb = marginals(big, big, ones);
  for (double v : tb.g_prime.v) CHECK(v == doctest::Approx(1.44).epsilon(1e-12));
  for (double v : tb.g_prime_capped.v) CHECK(v == doctest::Approx(1.0).epsilon(1e-12));

  CHECK_THROWS_AS(marginals(ones, WeightedHypergraph::constant(3, 5, 1.0), ones), usage_error);
}

TEST_CASE("telescoping identity behind the dense counting lemma") {
  for (std::uint64_t seed : {3ULL, 4ULL, 5ULL}) {
    const WeightedHypergraph g = random_bounded_hg(3, 4, seed);
    const WeightedHypergraph gt = random_bounded_hg(3, 4, seed + 40);
    double total = 0.0;
    for (int j = 0; j < 3; ++j) total += telescope_term(g, gt, j);
    CHECK(clique_density(g) - clique_density(gt) == doctest::Approx(total).epsilon(1e-12));
  }
}

TEST_CASE("dense counting gap") {
  const WeightedHypergraph half = WeightedHypergraph::constant(3, 4, 0.5);
  const DenseGapResult same = dense_counting_gap(half, half);
  CHECK(same.gap == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(same.epsilon == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(same.satisfied);

  CHECK_THROWS_AS(dense_counting_gap(WeightedHypergraph::constant(3, 4, 1.5), half), usage_error);
  CHECK_THROWS_AS(dense_counting_gap(half, hg_shift(half, -1.0)), usage_error);

  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const WeightedHypergraph g = random_bounded_hg(3, 4, seed);
    const WeightedHypergraph gt = random_bounded_hg(3, 4, seed + 1000);
    const DenseGapResult res = dense_counting_gap(g, gt);
    CHECK(res.satisfied);
    CHECK(res.bound == doctest::Approx(3.0 * res.epsilon).epsilon(1e-12));
  }
}

TEST_CASE("relative counting gap degenerates correctly") {
  const WeightedHypergraph ones = WeightedHypergraph::constant(3, 4, 1.0);
  const WeightedHypergraph g = random_bounded_hg(3, 4, 7);
  const CountingDiagnostics same = relative_counting_gap(g, g, ones, 0.0);
  CHECK(same.m == 0);
  CHECK(same.gap == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(same.epsilon == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(same.ladder_ok);

  const WeightedHypergraph gt = random_bounded_hg(3, 4, 8);
  const CountingDiagnostics dense = relative_counting_gap(g, gt, ones, 0.0);
  CHECK(dense.m == 0);
  CHECK(dense.ladder_ok);
  CHECK(dense.errorone_lhs <= dense.epsilon + 1e-9);
}

TEST_CASE("relative counting ladder on seeded majorants") {
  for (std::uint64_t seed : {11ULL, 12ULL, 13ULL}) {
    const WeightedHypergraph nu = random_majorant_hg(3, 4, seed);
    const WeightedHypergraph g = random_subfunction_hg(nu, seed + 60);
    const WeightedHypergraph gt = random_bounded_hg(3, 4, seed + 70);
    const LfcReport rep = lfc_delta(nu);
    REQUIRE(rep.method == "exhaustive");
    const CountingDiagnostics d = relative_counting_gap(g, gt, nu, rep.delta);
    CHECK(d.m == 3);
    CHECK(d.ladder_ok);
    CHECK(d.first_failure.empty());
    CHECK(d.bound_shape > 0.0);
    CHECK(std::isfinite(d.ratio));
  }
}

TEST_CASE("relative counting preconditions") {
  const WeightedHypergraph nu = random_majorant_hg(3, 4, 21);
  const WeightedHypergraph ones = WeightedHypergraph::constant(3, 4, 1.0);
  CHECK_THROWS_AS(relative_counting_gap(hg_shift(nu, 1.0), ones, nu, 0.1), usage_error);
  CHECK_THROWS_AS(relative_counting_gap(random_subfunction_hg(nu, 1), hg_shift(ones, 0.5), nu, 0.1),
                  usage_error);
}

TEST_CASE("dense model verify") {
  const DensityFunction f = DensityFunction::random_mean_one(6, 31);
  DensityFunction ft = f;
  for (auto& v : ft.values) v = std::min(v, 1.0);
  const DenseModelVerifyResult res = dense_model_verify(f, ft, 3, 1.0);
  CHECK(res.certified);
  CHECK(res.satisfied);
  CHECK(res.mean_gap <= res.distance + 1e-9);

  const DenseModelVerifyResult zero = dense_model_verify(ft, ft, 3, 0.0);
  CHECK(zero.distance == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(zero.satisfied);

  CHECK_THROWS_AS(dense_model_verify(f, DensityFunction::constant(6, 1.5), 3, 1.0), usage_error);
  CHECK_THROWS_AS(dense_model_verify(f, DensityFunction::constant(5, 1.0), 3, 1.0), usage_error);
}

TEST_CASE("dense model greedy trivial case") {
  const DensityFunction f(6, {0.1, 0.9, 0.4, 1.0, 0.0, 0.6});
  const DenseModelResult res = dense_model_greedy(f, 3, 0.01, 10);
  CHECK(res.converged);
  CHECK(res.rounds == 0);
  CHECK(res.achieved == doctest::Approx(0.0).epsilon(1e-12));
  for (std::size_t i = 0; i < 6; ++i)
    CHECK(res.model.values[i] == doctest::Approx(f.values[i]).epsilon(1e-12));
}

TEST_CASE("dense model greedy reaches the capped pointwise model") {
  // f stays within [0.8, 1.2]; full refinement gives min(f, 1), whose cut
  // distance to f is the mean of the positive excess, well below 0.1
  const DensityFunction f = DensityFunction::random_mean_one(8, 45, 0.2);
  const DenseModelResult res = dense_model_greedy(f, 3, 0.1, 12);
  CHECK(res.converged);
  CHECK(res.achieved <= 0.1 + 1e-12);
  for (double v : res.model.values) {
    CHECK(v >= -1e-12);
    CHECK(v <= 1.0 + 1e-12);
  }
  const DenseModelVerifyResult ver = dense_model_verify(f, res.model, 3, 0.1);
  CHECK(ver.satisfied);
  CHECK(ver.certified);
}

TEST_CASE("dense model greedy on a two-level function") {
  // f = 1 + 1_A with |A| = N/2: for any [0,1] model the difference stays
  // nonnegative, so the cut distance equals its mean and is at least 1/2;
  // the capped model attains exactly 1/2
  std::vector<double> vals(8, 1.0);
  for (int i = 0; i < 4; ++i) vals[i] = 2.0;
  const DensityFunction f(8, vals);
  const DenseModelResult res = dense_model_greedy(f, 3, 0.55, 12);
  CHECK(res.converged);
  CHECK(res.achieved == doctest::Approx(0.5).epsilon(1e-9));
  for (double v : res.model.values) {
    CHECK(v >= -1e-12);
    CHECK(v <= 1.0 + 1e-12);
  }
}
