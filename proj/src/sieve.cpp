#include "szlab/sieve.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <unordered_set>

namespace szlab {

std::vector<long long> primes_up_to(long long n) {
  std::vector<long long> out;
  if (n < 2) return out;
  std::vector<char> comp(static_cast<std::size_t>(n) + 1, 0);
  for (long long i = 2; i <= n; ++i) {
    if (comp[i]) continue;
    out.push_back(i);
    for (long long j = i * i; j <= n; j += i) comp[j] = 1;
  }
  return out;
}

bool is_prime(long long n) {
  if (n < 2) return false;
  for (long long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<int> mobius_table(long long n) {
  std::vector<int> mu(static_cast<std::size_t>(n) + 1, 0);
  if (n >= 1) mu[1] = 1;
  std::vector<long long> spf(static_cast<std::size_t>(n) + 1, 0);
  std::vector<long long> primes;
  for (long long i = 2; i <= n; ++i) {
    if (spf[i] == 0) {
      spf[i] = i;
      mu[i] = -1;
      primes.push_back(i);
    }
    for (long long p : primes) {
      if (p > spf[i] || i * p > n) break;
      spf[i * p] = p;
      mu[i * p] = (p == spf[i]) ? 0 : -mu[i];
    }
  }
  return mu;
}

std::pair<long long, long long> choose_residue(long long n_prime, long long w) {
  if (w < 1) throw usage_error("choose_residue: W must be >= 1");
  long long best_b = -1, best_count = -1;
  for (long long b = 1; b <= w; ++b) {
    if (std::gcd(b, w) != 1) continue;
    long long count = 0;
    for (long long n = 1; n <= n_prime; ++n)
      if (is_prime(b + w * n)) ++count;
    if (count > best_count) {
      best_count = count;
      best_b = b;
    }
  }
  return {best_b, best_count};
}

SieveParams w_trick_params(long long n_prime, double c0, double gamma) {
  if (n_prime < 3) throw usage_error("w_trick_params: N' must be >= 3");
  if (c0 < 0.25 || c0 > 0.5) throw usage_error("w_trick_params: c0 must be in [1/4, 1/2]");
  if (gamma <= 0.0 || gamma >= 1.0) throw usage_error("w_trick_params: gamma must be in (0,1)");
  SieveParams p;
  p.n_prime = n_prime;
  p.c0 = c0;
  p.gamma = gamma;
  p.omega = c0 * std::log(static_cast<double>(n_prime));
  p.w = 1;
  p.phi_w = 1;
  for (long long q : primes_up_to(static_cast<long long>(std::floor(p.omega)))) {
    p.w *= q;
    p.phi_w *= q - 1;
  }
  p.m = 2 * n_prime;
  while (!is_prime(p.m)) ++p.m;
  p.r_level = std::pow(static_cast<double>(n_prime), gamma);
  auto [b, count] = choose_residue(n_prime, p.w);
  p.b = b;
  p.b_prime_count = count;
  return p;
}

namespace {

double lambda_coeff(const SieveParams& p) {
  return (static_cast<double>(p.phi_w) / static_cast<double>(p.w)) *
         std::log(static_cast<double>(p.n_prime));
}

}  // namespace

DensityFunction lambda_weight(const SieveParams& p) {
  std::vector<double> vals(static_cast<std::size_t>(p.m), 0.0);
  const double c = lambda_coeff(p);
  for (long long n = 1; n <= p.n_prime; ++n)
    if (is_prime(p.b + p.w * n)) vals[static_cast<std::size_t>(n)] = c;
  return DensityFunction(static_cast<std::size_t>(p.m), std::move(vals));
}

DensityFunction f_b_embed(const SieveParams& p, const std::vector<long long>& b_set,
                          double alpha_target) {
  for (long long n : b_set) {
    if (n < 1 || n > p.n_prime)
      throw usage_error("f_b_embed: element " + std::to_string(n) + " outside [N']");
    if (!is_prime(p.b + p.w * n))
      throw usage_error("f_b_embed: b + W*" + std::to_string(n) + " is not prime");
  }
  if (alpha_target > 0.0) {
    const double need = alpha_target * (static_cast<double>(p.w) / p.phi_w) * p.n_prime /
                        std::log(static_cast<double>(p.n_prime));
    if (static_cast<double>(b_set.size()) < need)
      throw usage_error("f_b_embed: |B| below the alpha_target density requirement");
  }
  std::vector<double> vals(static_cast<std::size_t>(p.m), 0.0);
  const double c = (static_cast<double>(p.m) / p.n_prime) * lambda_coeff(p);
  for (long long n : b_set) vals[static_cast<std::size_t>(n)] = c;
  return DensityFunction(static_cast<std::size_t>(p.m), std::move(vals));
}

GpyMajorant gpy_majorant(const SieveParams& p, bool floor) {
  if (p.r_level < 2.0) throw usage_error("gpy_majorant: sieve level R must be >= 2");
  const long long r_cut = static_cast<long long>(std::floor(p.r_level));
  const double log_r = std::log(p.r_level);
  const std::vector<int> mu = mobius_table(r_cut);

  // s[n] = sum_{d | Wn + b, d <= R} mu(d) (1 - ln d / ln R)
  std::vector<double> s(static_cast<std::size_t>(p.n_prime) + 1, 0.0);
  for (long long d = 1; d <= r_cut; ++d) {
    if (mu[d] == 0 || std::gcd(d, p.w) != 1) continue;
    const double wt = mu[d] * (1.0 - std::log(static_cast<double>(d)) / log_r);
    // solve W n + b = 0 mod d
    long long n0 = -1;
    for (long long n = 0; n < d; ++n)
      if ((p.w * n + p.b) % d == 0) {
        n0 = n;
        break;
      }
    for (long long n = n0 == 0 ? d : n0; n <= p.n_prime; n += d) s[n] += wt;
  }
  const double pre = (static_cast<double>(p.phi_w) / p.w) * log_r;
  std::vector<double> vals(static_cast<std::size_t>(p.m), 0.0);
  std::vector<double> terms;
  terms.reserve(static_cast<std::size_t>(p.n_prime));
  for (long long n = 1; n <= p.n_prime; ++n) {
    vals[static_cast<std::size_t>(n)] = pre * s[n] * s[n];
    terms.push_back(vals[static_cast<std::size_t>(n)]);
  }
  const double total = pairwise_sum(terms);
  if (total <= 0.0) throw numerical_error("gpy_majorant: degenerate zero weight");
  const double scale = static_cast<double>(p.m) / total;
  for (auto& v : vals) v *= scale;
  if (floor)
    for (auto& v : vals) v = 0.5 + 0.5 * v;

  GpyMajorant out;
  out.scale = scale;
  out.floor = floor;
  out.nu = DensityFunction(static_cast<std::size_t>(p.m), std::move(vals));
  const DensityFunction lam = lambda_weight(p);
  double worst = 0.0;
  for (long long n = 1; n <= p.n_prime; ++n) {
    const auto i = static_cast<std::size_t>(n);
    if (lam.values[i] > 0.0) {
      if (out.nu.values[i] <= 0.0)
        throw numerical_error("gpy_majorant: zero majorant at a prime position");
      worst = std::max(worst, lam.values[i] / out.nu.values[i]);
    }
  }
  out.domination_ratio = worst;
  return out;
}

std::vector<long long> greedy_ap_free_prime_positions(const SieveParams& p, std::uint64_t seed,
                                                      long long max_size) {
  std::vector<long long> cand;
  for (long long n = 1; n <= p.n_prime; ++n)
    if (is_prime(p.b + p.w * n)) cand.push_back(n);
  // seeded Fisher-Yates
  std::uint64_t state = seed;
  for (std::size_t i = cand.size(); i > 1; --i) {
    state = mix_seed(state, 0x9e3779b97f4a7c15ULL);
    std::swap(cand[i - 1], cand[state % i]);
  }
  std::unordered_set<long long> chosen;
  std::vector<long long> out;
  for (long long e : cand) {
    bool ok = true;
    for (long long x : out) {
      // e as endpoint (x midpoint), e as far endpoint, e as midpoint
      if (chosen.count(2 * x - e) || ((e + x) % 2 == 0 && chosen.count((e + x) / 2)) ||
          chosen.count(2 * e - x)) {
        ok = false;
        break;
      }
    }
    if (ok) {
      chosen.insert(e);
      out.push_back(e);
      if (max_size > 0 && static_cast<long long>(out.size()) >= max_size) break;
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace szlab
