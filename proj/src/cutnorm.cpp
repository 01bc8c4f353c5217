#include "szlab/cutnorm.hpp"

#include <bit>
#include <cmath>
#include <random>

namespace szlab {

namespace {

// flat index of x_{-j} (coords ascending, skipping position j)
inline std::size_t flat_minus(std::span<const int> x, int j, int n) {
  std::size_t f = 0;
  for (int i = 0; i < static_cast<int>(x.size()); ++i) {
    if (i == j) continue;
    f = f * static_cast<std::size_t>(n) + static_cast<std::size_t>(x[i]);
  }
  return f;
}

double signed_certificate_average(const Tensor& h,
                                  const std::vector<std::vector<char>>& member) {
  const int r = h.arity;
  const int n = h.n;
  std::vector<int> idx(r, 0);
  std::vector<double> terms;
  terms.reserve(h.size());
  std::size_t flat = 0;
  do {
    double val = h.v[flat++];
    if (val != 0.0) {
      for (int j = 0; j < r && val != 0.0; ++j)
        if (!member[j][flat_minus(idx, j, n)]) val = 0.0;
    }
    terms.push_back(val);
  } while (next_index(idx, n));
  return pairwise_mean(terms);
}

std::vector<std::vector<char>> to_membership(
    const std::vector<std::vector<std::uint64_t>>& cert, int r, std::size_t side) {
  std::vector<std::vector<char>> member(r, std::vector<char>(side, 0));
  for (int j = 0; j < r; ++j)
    for (std::uint64_t i : cert[j]) member[j][i] = 1;
  return member;
}

std::vector<std::vector<std::uint64_t>> to_indices(const std::vector<std::vector<char>>& member) {
  std::vector<std::vector<std::uint64_t>> cert(member.size());
  for (std::size_t j = 0; j < member.size(); ++j)
    for (std::size_t i = 0; i < member[j].size(); ++i)
      if (member[j][i]) cert[j].push_back(i);
  return cert;
}

// r=2 exact: enumerate A_1 (subsets of X_2) by Gray code, optimize A_2 in
// closed form per sign.
CutNormResult exact_r2(const Tensor& h) {
  const int n = h.n;
  std::vector<double> s(n, 0.0);  // s[x1] = sum over x2 in A_1 of h(x1,x2)
  std::uint32_t mask = 0;
  double best = 0.0;
  std::uint32_t best_mask = 0;
  int best_sign = 1;
  const std::uint64_t total = 1ULL << n;
  for (std::uint64_t t = 1; t < total; ++t) {
    const int b = std::countr_zero(t);
    mask ^= (1u << b);
    const double sgn = (mask >> b) & 1u ? 1.0 : -1.0;
    for (int x1 = 0; x1 < n; ++x1) s[x1] += sgn * h.v[static_cast<std::size_t>(x1) * n + b];
    double pos = 0.0, neg = 0.0;
    for (int x1 = 0; x1 < n; ++x1) {
      if (s[x1] > 0.0) pos += s[x1];
      else neg -= s[x1];
    }
    if (pos > best) { best = pos; best_mask = mask; best_sign = 1; }
    if (neg > best) { best = neg; best_mask = mask; best_sign = -1; }
  }
  // rebuild the witness from the recorded mask
  std::vector<std::vector<char>> member(2, std::vector<char>(n, 0));
  for (int x2 = 0; x2 < n; ++x2)
    if ((best_mask >> x2) & 1u) member[0][x2] = 1;
  for (int x1 = 0; x1 < n; ++x1) {
    double row = 0.0;
    for (int x2 = 0; x2 < n; ++x2)
      if (member[0][x2]) row += h.v[static_cast<std::size_t>(x1) * n + x2];
    if (best_sign * row > 0.0) member[1][x1] = 1;
  }
  CutNormResult res;
  res.exact = true;
  res.certificate = to_indices(member);
  res.value = std::fabs(signed_certificate_average(h, member));
  return res;
}

// r=3 exact for tiny n: enumerate A_1 over subsets of X_2 x X_3; for each x_1
// the optimal slices of A_2 (over x_3) and A_3 (over x_2) decouple, with the
// last side closed-form.
CutNormResult exact_r3(const Tensor& h) {
  const int n = h.n;
  const int n2 = n * n;
  const std::uint64_t total = 1ULL << n2;
  double best = 0.0;
  std::uint64_t best_a1 = 0;
  int best_sign = 1;
  std::vector<double> m(n2), s(n);
  for (std::uint64_t a1 = 0; a1 < total; ++a1) {
    for (int sign = 0; sign < 2; ++sign) {
      const double sgn = sign ? -1.0 : 1.0;
      double sum = 0.0;
      for (int x1 = 0; x1 < n; ++x1) {
        for (int x2 = 0; x2 < n; ++x2)
          for (int x3 = 0; x3 < n; ++x3) {
            const int yz = x2 * n + x3;
            m[yz] = ((a1 >> yz) & 1ULL)
                        ? sgn * h.v[(static_cast<std::size_t>(x1) * n + x2) * n + x3]
                        : 0.0;
          }
        double bx = 0.0;  // empty B gives 0
        for (std::uint32_t bmask = 1; bmask < (1u << n); ++bmask) {
          double v = 0.0;
          for (int x2 = 0; x2 < n; ++x2) {
            double sx = 0.0;
            for (int x3 = 0; x3 < n; ++x3)
              if ((bmask >> x3) & 1u) sx += m[x2 * n + x3];
            if (sx > 0.0) v += sx;
          }
          if (v > bx) bx = v;
        }
        sum += bx;
      }
      if (sum > best) { best = sum; best_a1 = a1; best_sign = sign ? -1 : 1; }
    }
  }
  // rebuild the witness sets for the winning (A_1, sign)
  std::vector<std::vector<char>> member(3);
  member[0].assign(n2, 0);
  member[1].assign(n2, 0);  // A_2 over (x1,x3)
  member[2].assign(n2, 0);  // A_3 over (x1,x2)
  for (int yz = 0; yz < n2; ++yz) member[0][yz] = (best_a1 >> yz) & 1ULL ? 1 : 0;
  for (int x1 = 0; x1 < n; ++x1) {
    for (int x2 = 0; x2 < n; ++x2)
      for (int x3 = 0; x3 < n; ++x3) {
        const int yz = x2 * n + x3;
        m[yz] = member[0][yz]
                    ? best_sign * h.v[(static_cast<std::size_t>(x1) * n + x2) * n + x3]
                    : 0.0;
      }
    double bx = 0.0;
    std::uint32_t bbest = 0;
    for (std::uint32_t bmask = 0; bmask < (1u << n); ++bmask) {
      double v = 0.0;
      for (int x2 = 0; x2 < n; ++x2) {
        double sx = 0.0;
        for (int x3 = 0; x3 < n; ++x3)
          if ((bmask >> x3) & 1u) sx += m[x2 * n + x3];
        if (sx > 0.0) v += sx;
      }
      if (v > bx) { bx = v; bbest = bmask; }
    }
    for (int x3 = 0; x3 < n; ++x3)
      if ((bbest >> x3) & 1u) member[1][x1 * n + x3] = 1;
    for (int x2 = 0; x2 < n; ++x2) {
      double sx = 0.0;
      for (int x3 = 0; x3 < n; ++x3)
        if ((bbest >> x3) & 1u) sx += m[x2 * n + x3];
      if (sx > 0.0) member[2][x1 * n + x2] = 1;
    }
  }
  CutNormResult res;
  res.exact = true;
  res.certificate = to_indices(member);
  res.value = std::fabs(signed_certificate_average(h, member));
  return res;
}

CutNormResult heuristic_ascent(const Tensor& h, const CutNormBudget& budget) {
  const int r = h.arity;
  const int n = h.n;
  const std::size_t side = pow_size(n, r - 1);
  std::mt19937_64 rng(mix_seed(budget.seed, 0xc07ULL));
  double best = -1.0;
  std::vector<std::vector<char>> best_member;
  int used = 0;
  std::vector<std::vector<char>> member(r, std::vector<char>(side, 0));
  std::vector<double> cond(side);
  for (int restart = 0; restart < budget.restarts; ++restart) {
    ++used;
    const double sgn = (restart % 2 == 0) ? 1.0 : -1.0;
    for (int j = 0; j < r; ++j)
      for (auto& c : member[j]) c = static_cast<char>(rng() & 1ULL);
    bool changed = true;
    for (int sweep = 0; sweep < 200 && changed; ++sweep) {
      changed = false;
      for (int j = 0; j < r; ++j) {
        std::fill(cond.begin(), cond.end(), 0.0);
        std::vector<int> idx(r, 0);
        std::size_t flat = 0;
        do {
          double val = h.v[flat++];
          if (val != 0.0) {
            for (int l = 0; l < r && val != 0.0; ++l)
              if (l != j && !member[l][flat_minus(idx, l, n)]) val = 0.0;
            if (val != 0.0) cond[flat_minus(idx, j, n)] += val;
          }
        } while (next_index(idx, n));
        for (std::size_t y = 0; y < side; ++y) {
          const char want = sgn * cond[y] > 0.0 ? 1 : 0;
          if (member[j][y] != want) {
            member[j][y] = want;
            changed = true;
          }
        }
      }
    }
    const double val = std::fabs(signed_certificate_average(h, member));
    if (val > best) {
      best = val;
      best_member = member;
    }
  }
  CutNormResult res;
  res.exact = false;
  res.restarts_used = used;
  res.certificate = to_indices(best_member);
  res.value = best < 0.0 ? 0.0 : best;
  return res;
}

}  // namespace

CutNormResult cut_norm_tensor(const Tensor& h, const CutNormBudget& budget) {
  const int r = h.arity;
  if (r < 2) throw usage_error("cut_norm_tensor: arity must be >= 2");
  if (r == 2 && h.n <= budget.max_exact_n_r2) return exact_r2(h);
  if (r == 3 && h.n <= budget.max_exact_n_r3) return exact_r3(h);
  if (budget.require_exact)
    throw budget_error("cut_norm_tensor: exact mode requested beyond enumeration bounds");
  return heuristic_ascent(h, budget);
}

CutNormResult cut_norm_arithmetic(std::span<const double> f, std::size_t n, int r,
                                  const CutNormBudget& budget) {
  if (r < 2) throw usage_error("cut_norm_arithmetic: r must be >= 2");
  return cut_norm_tensor(sum_tensor_from_function(f, n, r), budget);
}

double evaluate_certificate(const Tensor& h,
                            const std::vector<std::vector<std::uint64_t>>& certificate) {
  if (static_cast<int>(certificate.size()) != h.arity)
    throw usage_error("evaluate_certificate: wrong number of sets");
  const std::size_t side = pow_size(h.n, h.arity - 1);
  return std::fabs(signed_certificate_average(h, to_membership(certificate, h.arity, side)));
}

GowersResult gowers_norm(const Tensor& h) {
  const int r = h.arity;
  if (r < 1) throw usage_error("gowers_norm: arity must be >= 1");
  const int n = h.n;
  const std::size_t grid = pow_size(n, 2 * r);
  if (grid > (1ULL << 27)) throw budget_error("gowers_norm: grid too large for direct evaluation");
  const int corners = 1 << r;
  std::vector<int> idx(2 * r, 0);  // digits: (x_1^(0), x_1^(1), ..., x_r^(0), x_r^(1))
  std::vector<double> terms;
  terms.reserve(grid);
  do {
    double p = 1.0;
    for (int w = 0; w < corners && p != 0.0; ++w) {
      std::size_t flat = 0;
      for (int i = 0; i < r; ++i)
        flat = flat * static_cast<std::size_t>(n) +
               static_cast<std::size_t>(idx[2 * i + ((w >> i) & 1)]);
      p *= h.v[flat];
    }
    terms.push_back(p);
  } while (next_index(idx, n));
  GowersResult out;
  out.pre_root = pairwise_mean(terms);
  double base = out.pre_root;
  if (base < 0.0) {
    if (base < -1e-10)
      throw numerical_error("gowers_norm: box average is negative beyond tolerance");
    base = 0.0;
  }
  out.norm = std::pow(base, 1.0 / static_cast<double>(corners));
  return out;
}

}  // namespace szlab
