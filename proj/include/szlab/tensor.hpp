#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "szlab/common.hpp"

namespace szlab {

// Dense real tensor with `arity` coordinates, each ranging over [0, n).
// Row-major: the first coordinate is the slowest. Entries may be signed.
struct Tensor {
  int arity = 0;
  int n = 0;
  std::vector<double> v;

  static Tensor zeros(int arity, int n);
  static Tensor constant(int arity, int n, double c);

  std::size_t size() const { return v.size(); }

  std::size_t flat(std::span<const int> idx) const {
    std::size_t f = 0;
    for (int c : idx) f = f * static_cast<std::size_t>(n) + static_cast<std::size_t>(c);
    return f;
  }
  double at(std::span<const int> idx) const { return v[flat(idx)]; }
  double& at(std::span<const int> idx) { return v[flat(idx)]; }
};

// Advance a mixed-radix counter with all digits in [0, n). Returns false on wrap.
inline bool next_index(std::span<int> idx, int n) {
  for (int i = static_cast<int>(idx.size()) - 1; i >= 0; --i) {
    if (++idx[i] < n) return true;
    idx[i] = 0;
  }
  return false;
}

std::size_t pow_size(int n, int arity);

Tensor tensor_sub(const Tensor& a, const Tensor& b);
Tensor tensor_shift(const Tensor& a, double c);  // a + c entrywise

// h(x_1,...,x_r) = f((x_1 + ... + x_r) mod n)
Tensor sum_tensor_from_function(std::span<const double> f, std::size_t n, int r);

double tensor_mean(const Tensor& t);

}  // namespace szlab
