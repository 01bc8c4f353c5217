#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace szlab {

// Invalid arguments / malformed configuration (CLI exit code 1).
class usage_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A configured search/memory/time budget was exceeded (CLI exit code 2).
class budget_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Floating-point result violates a structural guarantee beyond tolerance.
class numerical_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An inverse lookup ran off the end of the computed table.
class table_exhausted_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Tree (pairwise) summation. All expectations in this library go through
// here so that results do not depend on accumulation order beyond the
// documented 1e-9 relative tolerance.
double pairwise_sum(std::span<const double> v);
double pairwise_mean(std::span<const double> v);

// splitmix64 step, used to derive independent substreams from one seed.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream);

inline int mod_index(long long x, int n) {
  long long r = x % n;
  return static_cast<int>(r < 0 ? r + n : r);
}

}  // namespace szlab
