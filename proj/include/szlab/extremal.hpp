#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "szlab/common.hpp"

namespace szlab {

// Exact extremal data for k-AP-free subsets of the integer interval [N].
// Note this is the interval setting; ap_count lives on the cyclic group and
// the two are never mixed implicitly.
struct ExtremalRecord {
  int ambient = 0;            // N
  int length = 0;             // k
  int r_value = 0;            // r_k(N)
  std::vector<int> witness;   // sorted subset of {1..N}, k-AP-free, size r_value
  double alpha = 0.0;         // r_value / N
};

struct SearchLimits {
  int max_n_k3 = 40;
  int max_n_general = 60;
  std::uint64_t max_nodes = 400'000'000ULL;  // branch-and-bound node budget
};

// True iff the sorted integer set contains no nontrivial k-AP.
bool is_ap_free(const std::vector<int>& sorted_set, int k);

// Exact maximum via depth-first branch and bound over [1..N].
ExtremalRecord r_k_exact(int N, int k, const SearchLimits& limits = {});

// r_k(1..N_max) in one pass (shares bounds across N).
std::vector<ExtremalRecord> r_k_table(int N_max, int k, const SearchLimits& limits = {});

// Largest N <= N_max with alpha_k(N) >= alpha. Throws table_exhausted_error
// when alpha_k(N_max) still qualifies (the true inverse lies beyond the table).
int alpha_inverse(double alpha, int k, int N_max, const SearchLimits& limits = {});

// (alpha_inverse(alpha/2, k, N_max))^{-2}; comparator shape with constant 1.
double dense_lower_bound(double alpha, int k, int N_max, const SearchLimits& limits = {});

// CSV with header N,k,r,alpha,witness (witness space-separated).
std::string extremal_csv(const std::vector<ExtremalRecord>& records);

}  // namespace szlab
