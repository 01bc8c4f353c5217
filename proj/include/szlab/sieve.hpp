#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "szlab/density.hpp"

namespace szlab {

std::vector<long long> primes_up_to(long long n);
bool is_prime(long long n);

// Mobius mu for 1..n via smallest-prime-factor sieve.
std::vector<int> mobius_table(long long n);

struct SieveParams {
  long long n_prime = 0;  // the modulus-free scale N'
  double c0 = 0.25;
  double omega = 0.0;     // c0 * ln N'
  long long w = 1;        // product of primes <= omega
  long long phi_w = 1;
  long long b = 1;        // residue coprime to w, prime-count maximizer
  long long b_prime_count = 0;
  long long m = 0;        // smallest prime >= 2 N'
  double gamma = 0.1;
  double r_level = 0.0;   // N'^gamma
  std::string chi = "linear_truncation";  // chi(t) = max(0, 1 - t)
};

SieveParams w_trick_params(long long n_prime, double c0 = 0.25, double gamma = 0.1);

// Residue b coprime to W maximizing #{n in [N'] : b + Wn prime}; smallest
// b on ties. Returns (b, count).
std::pair<long long, long long> choose_residue(long long n_prime, long long w);

// lambda_{b,W}(n) = (phi(W)/W) ln(N') 1_{[N']}(n) 1_P(b+Wn), on Z_M.
DensityFunction lambda_weight(const SieveParams& p);

// f_B(n) = (M/N') (phi(W)/W) (ln N') 1_B(n) on Z_M. Validates B within [N']
// and b + W B prime. If alpha_target > 0 also requires
// |B| >= alpha_target (W/phi(W)) N'/ln N'.
DensityFunction f_b_embed(const SieveParams& p, const std::vector<long long>& b_set,
                          double alpha_target = 0.0);

struct GpyMajorant {
  DensityFunction nu;
  double scale = 0.0;             // empirical normalization factor applied
  double domination_ratio = 0.0;  // max over prime positions of lambda/nu
  bool floor = true;              // nu = 1/2 + (normalized weight)/2
};

// GPY-style truncated divisor sum majorant on Z_M:
// weight(n) ~ (phi(W)/W) ln(R) (sum_{d | Wn+b, d <= R} mu(d)(1 - ln d/ln R))^2
// normalized so the Z_M mean is exactly 1, optional uniform floor.
GpyMajorant gpy_majorant(const SieveParams& p, bool floor = true);

// Greedy seeded 3-AP-free subset of {n in [N'] : b + Wn prime}; 3-AP-free
// implies k-AP-free for every k >= 3.
std::vector<long long> greedy_ap_free_prime_positions(const SieveParams& p, std::uint64_t seed,
                                                      long long max_size = -1);

}  // namespace szlab
