#include "szlab/tensor.hpp"

namespace szlab {

std::size_t pow_size(int n, int arity) {
  std::size_t s = 1;
  for (int i = 0; i < arity; ++i) {
    if (s > (1ULL << 40) / static_cast<std::size_t>(n))
      throw budget_error("tensor size overflows the memory budget");
    s *= static_cast<std::size_t>(n);
  }
  return s;
}

Tensor Tensor::zeros(int arity, int n) {
  Tensor t;
  t.arity = arity;
  t.n = n;
  t.v.assign(pow_size(n, arity), 0.0);
  return t;
}

Tensor Tensor::constant(int arity, int n, double c) {
  Tensor t = zeros(arity, n);
  for (auto& x : t.v) x = c;
  return t;
}

Tensor tensor_sub(const Tensor& a, const Tensor& b) {
  if (a.arity != b.arity || a.n != b.n) throw usage_error("tensor_sub: shape mismatch");
  Tensor out = a;
  for (std::size_t i = 0; i < out.v.size(); ++i) out.v[i] -= b.v[i];
  return out;
}

Tensor tensor_shift(const Tensor& a, double c) {
  Tensor out = a;
  for (auto& x : out.v) x += c;
  return out;
}

Tensor sum_tensor_from_function(std::span<const double> f, std::size_t n, int r) {
  if (f.size() != n) throw usage_error("sum_tensor_from_function: size mismatch");
  if (r < 1) throw usage_error("sum_tensor_from_function: r must be >= 1");
  Tensor t = Tensor::zeros(r, static_cast<int>(n));
  std::vector<int> idx(r, 0);
  std::size_t flat = 0;
  do {
    long long s = 0;
    for (int c : idx) s += c;
    t.v[flat++] = f[static_cast<std::size_t>(s % static_cast<long long>(n))];
  } while (next_index(idx, static_cast<int>(n)));
  return t;
}

double tensor_mean(const Tensor& t) { return pairwise_mean(t.v); }

}  // namespace szlab
