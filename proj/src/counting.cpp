#include "szlab/counting.hpp"

#include <cmath>

namespace szlab {

namespace {

double slice_value(const Tensor& slice, int k, int j, std::span<const int> x, int n) {
  std::size_t flat = 0;
  for (int i = 0; i < k; ++i) {
    if (i == j) continue;
    flat = flat * static_cast<std::size_t>(n) + static_cast<std::size_t>(x[i]);
  }
  return slice.v[flat];
}

double tol(double x) { return 1e-9 * (1.0 + std::fabs(x)); }

// E over X_{-0} of the entrywise product of two (k-1)-ary tensors
double mean_product(const Tensor& a, const Tensor& b) {
  std::vector<double> terms(a.v.size());
  for (std::size_t i = 0; i < a.v.size(); ++i) terms[i] = a.v[i] * b.v[i];
  return pairwise_mean(terms);
}

}  // namespace

double clique_density(const WeightedHypergraph& g) {
  const int k = g.k;
  const int n = g.n;
  std::vector<int> idx(k, 0);
  std::vector<double> terms;
  terms.reserve(pow_size(n, k));
  do {
    double p = 1.0;
    for (int j = 0; j < k && p != 0.0; ++j) p *= slice_value(g.slices[j], k, j, idx, n);
    terms.push_back(p);
  } while (next_index(idx, n));
  return pairwise_mean(terms);
}

MarginalTriple marginals(const WeightedHypergraph& g, const WeightedHypergraph& nu,
                         const WeightedHypergraph& gtilde) {
  if (!g.shape_matches(nu) || !g.shape_matches(gtilde))
    throw usage_error("marginals: shape mismatch");
  const int k = g.k;
  const int n = g.n;
  auto marginal = [&](const WeightedHypergraph& h) {
    Tensor out = Tensor::zeros(k - 1, n);  // coords (x_1 .. x_{k-1})
    std::vector<int> x(k, 0);
    std::vector<int> idx(k - 1, 0);
    std::vector<double> inner(n);
    std::size_t flat = 0;
    do {
      for (int i = 1; i < k; ++i) x[i] = idx[i - 1];
      for (int x0 = 0; x0 < n; ++x0) {
        x[0] = x0;
        double p = 1.0;
        for (int j = 1; j < k && p != 0.0; ++j) p *= slice_value(h.slices[j], k, j, x, n);
        inner[x0] = p;
      }
      out.v[flat++] = pairwise_mean(inner);
    } while (next_index(idx, n));
    return out;
  };
  MarginalTriple t;
  t.g_prime = marginal(g);
  t.nu_prime = marginal(nu);
  t.gtilde_prime = marginal(gtilde);
  t.g_prime_capped = t.g_prime;
  for (auto& v : t.g_prime_capped.v) v = std::min(v, 1.0);
  // internal identity: E[g_{-1} g'] over X_{-1} recovers the clique density
  const double lhs = mean_product(g.slices[0], t.g_prime);
  const double rhs = clique_density(g);
  if (std::fabs(lhs - rhs) > tol(rhs))
    throw numerical_error("marginals: E[g g'] does not match the clique density");
  return t;
}

DenseGapResult dense_counting_gap(const WeightedHypergraph& g, const WeightedHypergraph& gtilde,
                                  const CutNormBudget& cb) {
  std::string where;
  if (!nonnegative(g, &where) || !bounded_by(g, 1.0 + 1e-12, &where))
    throw usage_error("dense_counting_gap: g not [0,1]-bounded at " + where);
  if (!nonnegative(gtilde, &where) || !bounded_by(gtilde, 1.0 + 1e-12, &where))
    throw usage_error("dense_counting_gap: gtilde not [0,1]-bounded at " + where);
  CutNormBudget exact = cb;
  exact.require_exact = true;
  DenseGapResult out;
  out.gap = std::fabs(clique_density(g) - clique_density(gtilde));
  out.epsilon = cut_norm_tuple(hg_sub(g, gtilde), exact).value;
  out.bound = g.k * out.epsilon;
  out.satisfied = out.gap <= out.bound + tol(out.bound);
  return out;
}

CountingDiagnostics relative_counting_gap(const WeightedHypergraph& g,
                                          const WeightedHypergraph& gtilde,
                                          const WeightedHypergraph& nu, double delta,
                                          const CutNormBudget& cb) {
  std::string where;
  if (!nonnegative(g, &where)) throw usage_error("relative_counting_gap: g negative at " + where);
  if (!dominates(nu, g, &where))
    throw usage_error("relative_counting_gap: g > nu at " + where);
  if (!nonnegative(gtilde, &where) || !bounded_by(gtilde, 1.0 + 1e-12, &where))
    throw usage_error("relative_counting_gap: gtilde not [0,1]-bounded at " + where);
  const int k = g.k;
  CutNormBudget exact = cb;
  exact.require_exact = true;

  CountingDiagnostics d;
  d.delta = delta;
  for (int j = 0; j < k; ++j) {
    bool is_one = true;
    for (double v : nu.slices[j].v)
      if (v != 1.0) {
        is_one = false;
        break;
      }
    if (!is_one) ++d.m;
  }
  const double cd_g = clique_density(g);
  const double cd_gt = clique_density(gtilde);
  d.gap = std::fabs(cd_g - cd_gt);
  d.epsilon = cut_norm_tuple(hg_sub(g, gtilde), exact).value;
  const double e1 = 1.0 / std::pow(2.0, std::pow(2.0, k) + k - 2);
  const double e2 = 1.0 / std::pow(2.0, std::pow(2.0, k) - 1);
  d.bound_shape = std::pow(delta, e1) + std::pow(d.epsilon, e2);
  d.ratio = d.bound_shape > 0.0 ? d.gap / d.bound_shape : 0.0;

  const MarginalTriple mt = marginals(g, nu, gtilde);
  d.nu_prime_mean = tensor_mean(mt.nu_prime);
  {
    std::vector<double> sq(mt.nu_prime.v.size()), ab(mt.nu_prime.v.size()),
        nuab(mt.nu_prime.v.size());
    for (std::size_t i = 0; i < sq.size(); ++i) {
      const double dlt = mt.nu_prime.v[i] - 1.0;
      sq[i] = dlt * dlt;
      ab[i] = std::fabs(dlt);
      nuab[i] = mt.nu_prime.v[i] * std::fabs(dlt);
    }
    d.nu_prime_sq_mean = pairwise_mean(sq) + 2.0 * d.nu_prime_mean - 1.0;  // E[nu'^2]
    d.var_nu_mid = pairwise_mean(sq);
    const double eabs = pairwise_mean(ab);
    d.var_nu_lhs = eabs * eabs;
    d.nu_abs_term = pairwise_mean(nuab);
  }
  for (std::size_t i = 0; i < mt.g_prime.v.size(); ++i) {
    const double excess = mt.g_prime.v[i] - mt.g_prime_capped.v[i];
    const double viol = excess - std::fabs(mt.nu_prime.v[i] - 1.0);
    d.cap_nu_worst = std::max(d.cap_nu_worst, viol);
    d.cap_nu_worst = std::max(d.cap_nu_worst, -excess);  // excess must be >= 0
  }
  d.cap_small_lhs = cut_norm_tensor(tensor_sub(mt.g_prime_capped, mt.gtilde_prime), exact).value;
  d.c_m_measured = cut_norm_tensor(tensor_sub(mt.g_prime, mt.gtilde_prime), exact).value;

  const Tensor diff0 = tensor_sub(g.slices[0], gtilde.slices[0]);
  const Tensor mdiff = tensor_sub(mt.g_prime, mt.gtilde_prime);
  d.errorone_lhs = std::fabs(mean_product(diff0, mt.gtilde_prime));
  const double cross = mean_product(g.slices[0], mdiff);
  d.errortwo_lhs = cross * cross;
  const double half_exp = 1.0 / static_cast<double>(1 << (k - 1));
  const double strong_bound =
      2.0 * std::pow(1.0 + delta, 1.0 - half_exp) * std::pow(delta, half_exp);
  d.errorfive_lhs = mean_product(mdiff, mdiff);
  d.errortwo_rhs = (1.0 + delta) * (4.0 * strong_bound + d.errorfive_lhs);
  const double egt2 = mean_product(mt.gtilde_prime, mt.gtilde_prime);
  d.summand_gaps[0] = std::fabs(mean_product(mt.g_prime, mt.g_prime_capped) - egt2);
  d.summand_gaps[1] = std::fabs(mean_product(mt.g_prime, mt.gtilde_prime) - egt2);
  d.summand_gaps[2] = std::fabs(mean_product(mt.gtilde_prime, mt.g_prime_capped) - egt2);
  d.errorfive_rhs = 3.0 * delta + std::sqrt(3.0 * delta) + d.summand_gaps[0] +
                    d.summand_gaps[1] + d.summand_gaps[2];
  d.split_identity_residual =
      std::fabs((cd_g - cd_gt) - (cross + mean_product(diff0, mt.gtilde_prime)));

  // the explicit-constant ladder, checked in order
  d.ladder_ok = true;
  auto check = [&](bool ok, const char* tag) {
    if (!ok && d.ladder_ok) {
      d.ladder_ok = false;
      d.first_failure = tag;
    }
  };
  check(d.nu_prime_mean >= 1.0 - delta - tol(1.0) && d.nu_prime_mean <= 1.0 + delta + tol(1.0),
        "nu_prime_mean");
  check(d.nu_prime_sq_mean >= 1.0 - delta - tol(1.0) &&
            d.nu_prime_sq_mean <= 1.0 + delta + tol(1.0),
        "nu_prime_sq_mean");
  check(d.var_nu_lhs <= d.var_nu_mid + tol(d.var_nu_mid), "var_nu_cs");
  check(d.var_nu_mid <= 3.0 * delta + tol(3.0 * delta), "var_nu");
  check(d.cap_nu_worst <= 1e-12, "cap_nu");
  check(d.nu_abs_term <= 3.0 * delta + std::sqrt(3.0 * delta) + tol(1.0), "nu_abs_term");
  check(d.cap_small_lhs <= std::sqrt(3.0 * delta) + d.c_m_measured + tol(1.0), "cap_small");
  check(d.errorone_lhs <= d.epsilon + tol(d.epsilon), "errorone");
  check(d.errortwo_lhs <= d.errortwo_rhs + tol(d.errortwo_rhs), "errortwo");
  check(d.errorfive_lhs <= d.errorfive_rhs + tol(d.errorfive_rhs), "errorfive");
  check(d.split_identity_residual <= tol(d.gap), "split_identity");
  return d;
}

DenseModelVerifyResult dense_model_verify(const DensityFunction& f, const DensityFunction& ftilde,
                                          int k, double epsilon_bound, const CutNormBudget& cb) {
  if (f.n != ftilde.n) throw usage_error("dense_model_verify: modulus mismatch");
  for (std::size_t i = 0; i < ftilde.n; ++i)
    if (ftilde.values[i] > 1.0 + 1e-12)
      throw usage_error("dense_model_verify: ftilde exceeds 1 at index " + std::to_string(i));
  DenseModelVerifyResult out;
  const CutNormResult res = cut_norm_arithmetic(subtract(f, ftilde), f.n, k - 1, cb);
  out.distance = res.value;
  out.certified = res.exact;
  out.satisfied = out.distance <= epsilon_bound + 1e-12;
  out.mean_gap = std::fabs(mean(f) - mean(ftilde));
  return out;
}

}  // namespace szlab
