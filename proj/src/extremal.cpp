#include "szlab/extremal.hpp"

#include <algorithm>
#include <sstream>

namespace szlab {

namespace {

// e is the largest element; does adding it to `in` close a k-AP?
bool closes_ap(const std::vector<char>& in, int e, int k) {
  for (int d = 1; e - static_cast<long long>(k - 1) * d >= 1; ++d) {
    bool all = true;
    for (int i = 1; i < k; ++i) {
      if (!in[e - i * d]) {
        all = false;
        break;
      }
    }
    if (all) return true;
  }
  return false;
}

struct BnB {
  int n = 0;
  int k = 0;
  std::uint64_t nodes = 0;
  std::uint64_t max_nodes = 0;
  std::vector<char> in;
  std::vector<int> current;
  std::vector<int> best_set;
  int best = 0;

  void dfs(int e) {
    if (++nodes > max_nodes)
      throw budget_error("r_k_exact: search budget exceeded (node cap)");
    if (static_cast<int>(current.size()) > best) {
      best = static_cast<int>(current.size());
      best_set = current;
    }
    if (e > n) return;
    // even taking every remaining element cannot beat the incumbent
    if (static_cast<int>(current.size()) + (n - e + 1) <= best) return;
    if (!closes_ap(in, e, k)) {
      in[e] = 1;
      current.push_back(e);
      dfs(e + 1);
      current.pop_back();
      in[e] = 0;
    }
    dfs(e + 1);
  }
};

std::vector<int> greedy_seed(int n, int k) {
  std::vector<char> in(n + 1, 0);
  std::vector<int> out;
  for (int e = 1; e <= n; ++e) {
    if (!closes_ap(in, e, k)) {
      in[e] = 1;
      out.push_back(e);
    }
  }
  return out;
}

}  // namespace

bool is_ap_free(const std::vector<int>& sorted_set, int k) {
  if (k < 2) throw usage_error("is_ap_free: k must be >= 2");
  if (sorted_set.empty()) return true;
  const int hi = sorted_set.back();
  std::vector<char> in(hi + 1, 0);
  for (int e : sorted_set) {
    if (e < 1) throw usage_error("is_ap_free: elements must be positive");
    in[e] = 1;
  }
  for (int e : sorted_set)
    if (closes_ap(in, e, k)) {
      // closes_ap only looks below e, so re-check with e temporarily present
      // is unnecessary: all other AP members are below e and marked.
      return false;
    }
  return true;
}

ExtremalRecord r_k_exact(int N, int k, const SearchLimits& limits) {
  if (k < 3) throw usage_error("r_k_exact: k must be >= 3");
  if (N < 1) throw usage_error("r_k_exact: N must be >= 1");
  const int cap = (k == 3) ? limits.max_n_k3 : limits.max_n_general;
  if (N > cap)
    throw budget_error("r_k_exact: search budget exceeded (N=" + std::to_string(N) +
                       " above cap " + std::to_string(cap) + ")");
  BnB s;
  s.n = N;
  s.k = k;
  s.max_nodes = limits.max_nodes;
  s.in.assign(N + 1, 0);
  s.best_set = greedy_seed(N, k);
  s.best = static_cast<int>(s.best_set.size());
  s.dfs(1);
  ExtremalRecord rec;
  rec.ambient = N;
  rec.length = k;
  rec.r_value = s.best;
  rec.witness = s.best_set;
  rec.alpha = static_cast<double>(s.best) / N;
  return rec;
}

std::vector<ExtremalRecord> r_k_table(int N_max, int k, const SearchLimits& limits) {
  std::vector<ExtremalRecord> out;
  out.reserve(N_max);
  for (int N = 1; N <= N_max; ++N) out.push_back(r_k_exact(N, k, limits));
  return out;
}

int alpha_inverse(double alpha, int k, int N_max, const SearchLimits& limits) {
  if (!(alpha > 0.0) || alpha > 1.0) throw usage_error("alpha_inverse: alpha must be in (0,1]");
  auto table = r_k_table(N_max, k, limits);
  if (table.back().alpha >= alpha)
    throw table_exhausted_error("alpha_inverse: alpha_k(N_max) >= alpha, true inverse exceeds table");
  int result = 0;
  for (const auto& rec : table)
    if (rec.alpha >= alpha) result = rec.ambient;
  if (result == 0)
    throw table_exhausted_error("alpha_inverse: no N <= N_max satisfies alpha_k(N) >= alpha");
  return result;
}

double dense_lower_bound(double alpha, int k, int N_max, const SearchLimits& limits) {
  const int m = alpha_inverse(alpha / 2.0, k, N_max, limits);
  return 1.0 / (static_cast<double>(m) * m);
}

std::string extremal_csv(const std::vector<ExtremalRecord>& records) {
  std::ostringstream os;
  os << "N,k,r,alpha,witness\n";
  for (const auto& rec : records) {
    os << rec.ambient << ',' << rec.length << ',' << rec.r_value << ',' << rec.alpha << ',';
    for (std::size_t i = 0; i < rec.witness.size(); ++i) {
      if (i) os << ' ';
      os << rec.witness[i];
    }
    os << '\n';
  }
  return os.str();
}

}  // namespace szlab
