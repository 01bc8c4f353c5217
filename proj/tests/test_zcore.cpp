#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "szlab/density.hpp"
#include "szlab/extremal.hpp"

using namespace szlab;

namespace {

// independent direct enumeration of progressions inside A over Z_N
long long count_cyclic_aps(const std::vector<int>& a_mask, int n, int k) {
  long long c = 0;
  for (int x = 0; x < n; ++x)
    for (int d = 0; d < n; ++d) {
      bool all = true;
      for (int j = 0; j < k && all; ++j) all = a_mask[(x + j * d) % n] != 0;
      c += all;
    }
  return c;
}

}  // namespace

TEST_CASE("mean basics") {
  CHECK(mean(DensityFunction::constant(7, 1.0)) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(mean(DensityFunction::indicator(4, {0})) == doctest::Approx(0.25).epsilon(1e-12));
  CHECK(mean(DensityFunction(3, {0.5, 1.5, 1.0})) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("density validation") {
  CHECK_THROWS_AS(DensityFunction(3, {1.0, -0.1, 0.0}), usage_error);
  CHECK_THROWS_AS(DensityFunction(2, {1.0}), usage_error);
}

TEST_CASE("ap_count examples") {
  CHECK(ap_count(DensityFunction::constant(5, 1.0), 3) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(ap_count(DensityFunction::indicator(5, {0, 1, 2}), 3) ==
        doctest::Approx(0.2).epsilon(1e-12));
  CHECK(ap_count(DensityFunction::indicator(7, {0}), 3) ==
        doctest::Approx(1.0 / 49.0).epsilon(1e-12));
  CHECK_THROWS_AS(ap_count(DensityFunction::constant(5, 1.0), 1), usage_error);
}

TEST_CASE("ap_count multilinearity on constants") {
  for (double c : {0.0, 0.5, 2.0})
    for (int k : {2, 3, 4})
      CHECK(ap_count(DensityFunction::constant(6, c), k) ==
            doctest::Approx(std::pow(c, k)).epsilon(1e-12));
}

TEST_CASE("ap_count equals direct enumeration for all subsets") {
  for (int n : {5, 6, 7, 8}) {
    for (int k : {3, 4}) {
      for (int mask = 0; mask < (1 << n); ++mask) {
        std::vector<int> in(n, 0);
        std::vector<std::size_t> support;
        for (int i = 0; i < n; ++i)
          if ((mask >> i) & 1) {
            in[i] = 1;
            support.push_back(static_cast<std::size_t>(i));
          }
        const double v = ap_count(DensityFunction::indicator(n, support), k);
        const double want =
            static_cast<double>(count_cyclic_aps(in, n, k)) / (static_cast<double>(n) * n);
        CHECK(v == doctest::Approx(want).epsilon(1e-9));
      }
    }
  }
}

TEST_CASE("trivial part diagnostic") {
  const DensityFunction f = DensityFunction::random_mean_one(9, 42);
  double m3 = 0.0;
  for (double v : f.values) m3 += v * v * v;
  m3 /= 9.0;
  CHECK(ap_count_trivial_part(f, 3) == doctest::Approx(m3 / 9.0).epsilon(1e-9));
  CHECK(ap_count(f, 3) >= 0.0);
}

TEST_CASE("r_k_exact examples") {
  const ExtremalRecord r44 = r_k_exact(4, 4);
  CHECK(r44.r_value == 3);
  const ExtremalRecord r53 = r_k_exact(5, 3);
  CHECK(r53.r_value == 4);
  CHECK(r53.witness == std::vector<int>{1, 2, 4, 5});
  CHECK(r_k_exact(9, 3).r_value == 5);
  CHECK(r_k_exact(1, 3).r_value == 1);
}

TEST_CASE("r_k search caps raise budget errors") {
  SearchLimits tight;
  tight.max_n_k3 = 10;
  CHECK_THROWS_AS(r_k_exact(11, 3, tight), budget_error);
}

TEST_CASE("witnesses are AP-free and maximal") {
  for (int n = 1; n <= 12; ++n) {
    const ExtremalRecord rec = r_k_exact(n, 3);
    CHECK(static_cast<int>(rec.witness.size()) == rec.r_value);
    CHECK(is_ap_free(rec.witness, 3));
    // adding any missing element must create a 3-AP
    std::vector<int> in(n + 1, 0);
    for (int w : rec.witness) in[w] = 1;
    for (int e = 1; e <= n; ++e) {
      if (in[e]) continue;
      std::vector<int> bigger = rec.witness;
      bigger.insert(std::lower_bound(bigger.begin(), bigger.end(), e), e);
      CHECK_FALSE(is_ap_free(bigger, 3));
    }
  }
}

TEST_CASE("r_k table monotonicity") {
  const auto table = r_k_table(20, 3);
  REQUIRE(table.size() == 20);
  for (std::size_t i = 1; i < table.size(); ++i) {
    CHECK(table[i].r_value >= table[i - 1].r_value);
    CHECK(table[i].r_value <= table[i - 1].r_value + 1);
  }
}

TEST_CASE("alpha_inverse") {
  CHECK(alpha_inverse(1.0, 3, 10) == 2);
  // largest N <= 10 with alpha_3(N) >= 0.6 is 6: alpha_3(6) = 4/6 qualifies
  // and alpha_3(N) < 0.6 for 7 <= N <= 10 (r_3 = 4,4,5,5)
  CHECK(alpha_inverse(0.6, 3, 10) == 6);
  CHECK_THROWS_AS(alpha_inverse(1e-6, 3, 10), table_exhausted_error);
  // nonincreasing in alpha (alpha_3(12) = 1/2, so stay above it)
  int prev = 1 << 20;
  for (double a : {0.55, 0.6, 0.8, 1.0}) {
    const int v = alpha_inverse(a, 3, 12);
    CHECK(v <= prev);
    prev = v;
  }
}

TEST_CASE("dense_lower_bound") {
  CHECK(dense_lower_bound(2.0, 3, 10) == doctest::Approx(0.25).epsilon(1e-12));
  CHECK(dense_lower_bound(1.2, 3, 10) == doctest::Approx(1.0 / 36.0).epsilon(1e-12));
  CHECK_THROWS_AS(dense_lower_bound(1e-6, 3, 10), table_exhausted_error);
}

TEST_CASE("extremal csv") {
  const std::string csv = extremal_csv({r_k_exact(9, 3)});
  CHECK(csv.rfind("N,k,r,alpha,witness\n9,3,5,", 0) == 0);
}
