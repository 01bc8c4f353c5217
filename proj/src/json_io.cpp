#include "szlab/json_io.hpp"

#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace szlab {

using nlohmann::ordered_json;

ordered_json to_json(const CutNormResult& r) {
  ordered_json j;
  j["value"] = r.value;
  j["exact"] = r.exact;
  j["restarts_used"] = r.restarts_used;
  j["certificate"] = r.certificate;
  return j;
}

ordered_json to_json(const GowersResult& r) {
  return ordered_json{{"norm", r.norm}, {"pre_root", r.pre_root}};
}

ordered_json to_json(const LfcReport& r) {
  ordered_json j;
  j["k"] = r.k;
  j["N"] = r.n;
  j["delta"] = r.delta;
  j["method"] = r.method;
  j["worst_pattern"] = r.worst_pattern.bitstring();
  j["samples"] = r.samples;
  j["seed"] = r.seed;
  j["delta_all_ones"] = r.delta_all_ones;
  if (!r.per_pattern.empty()) {
    ordered_json pp = ordered_json::array();
    for (const auto& [id, dev] : r.per_pattern) pp.push_back({{"id", id}, {"deviation", dev}});
    j["per_pattern"] = std::move(pp);
  }
  return j;
}

ordered_json to_json(const CountingDiagnostics& d) {
  ordered_json j;
  j["m"] = d.m;
  j["gap"] = d.gap;
  j["epsilon"] = d.epsilon;
  j["delta"] = d.delta;
  j["bound_shape"] = d.bound_shape;
  j["ratio"] = d.ratio;
  // ladder terms keyed by the equation tag each one checks
  j["ladder"] = ordered_json{
      {"nu_prime_mean", d.nu_prime_mean},
      {"nu_prime_sq_mean", d.nu_prime_sq_mean},
      {"var_nu", ordered_json{{"lhs_cs", d.var_nu_lhs}, {"mid", d.var_nu_mid},
                              {"rhs", 3.0 * d.delta}}},
      {"cap_nu", ordered_json{{"worst_excess", d.cap_nu_worst}}},
      {"cap_small",
       ordered_json{{"lhs", d.cap_small_lhs}, {"c_m_measured", d.c_m_measured}}},
      {"nu_abs_term", d.nu_abs_term},
      {"errorone", ordered_json{{"lhs", d.errorone_lhs}, {"rhs", d.epsilon}}},
      {"errortwo", ordered_json{{"lhs", d.errortwo_lhs}, {"rhs", d.errortwo_rhs}}},
      {"errorfive",
       ordered_json{{"lhs", d.errorfive_lhs},
                    {"rhs", d.errorfive_rhs},
                    {"summand_gaps",
                     {d.summand_gaps[0], d.summand_gaps[1], d.summand_gaps[2]}}}},
      {"split_identity_residual", d.split_identity_residual},
  };
  j["ladder_ok"] = d.ladder_ok;
  if (!d.ladder_ok) j["first_failure"] = d.first_failure;
  return j;
}

ordered_json to_json(const DenseGapResult& r) {
  return ordered_json{
      {"gap", r.gap}, {"epsilon", r.epsilon}, {"bound", r.bound}, {"satisfied", r.satisfied}};
}

ordered_json to_json(const MarginalTriple& t) {
  return ordered_json{{"g_prime", t.g_prime.v},
                      {"nu_prime", t.nu_prime.v},
                      {"gtilde_prime", t.gtilde_prime.v},
                      {"g_prime_capped", t.g_prime_capped.v}};
}

ordered_json to_json(const ExtremalRecord& r) {
  return ordered_json{{"N", r.ambient},
                      {"k", r.length},
                      {"r", r.r_value},
                      {"alpha", r.alpha},
                      {"witness", r.witness}};
}

ordered_json to_json(const SieveParams& p) {
  ordered_json j;
  j["N_prime"] = p.n_prime;
  j["c0"] = p.c0;
  j["omega"] = p.omega;
  j["W"] = p.w;
  j["phi_W"] = p.phi_w;
  j["b"] = p.b;
  j["b_prime_count"] = p.b_prime_count;
  j["M"] = p.m;
  j["gamma"] = p.gamma;
  j["R"] = p.r_level;
  j["chi"] = p.chi;
  return j;
}

ordered_json to_json(const PipelineReport& r) {
  ordered_json j;
  j["schema"] = "szlab.pipeline.v1";
  j["k"] = r.k;
  j["seed"] = r.seed;
  j["params"] = to_json(r.params);
  j["B_size"] = r.b_set.size();
  j["B"] = r.b_set;
  j["alpha"] = r.alpha;
  j["lambda_mean"] = r.lambda_mean;
  j["majorant"] = ordered_json{{"scale", r.majorant_scale},
                               {"domination_ratio", r.domination_ratio},
                               {"floor", r.floor}};
  j["ap_value"] = r.ap_value;
  j["trivial_part"] = r.trivial_part;
  j["wraparound_count"] = r.wraparound_count;
  j["delta_report"] = to_json(r.delta_report);
  j["bound_comparisons"] = ordered_json{{"lhs_ap_value", r.ap_value},
                                        {"dense_term", r.dense_term},
                                        {"dense_term_table_exhausted",
                                         r.dense_term_table_exhausted},
                                        {"error_term_log_inv_delta", r.error_term_log}};
  return j;
}

ordered_json to_json(const SuiteResult& r) {
  ordered_json j;
  j["scope"] = r.scope;
  j["k"] = r.k;
  j["N"] = r.n;
  j["instances"] = r.instances;
  j["failures"] = r.failures;
  j["worst_slack"] = r.worst_slack;
  if (!r.first_failure.empty()) j["first_failure"] = r.first_failure;
  ordered_json rows = ordered_json::array();
  for (const auto& row : r.rows)
    rows.push_back(ordered_json{{"seed", row.seed},
                                {"pass", row.pass},
                                {"lhs", row.lhs},
                                {"rhs", row.rhs},
                                {"slack", row.slack},
                                {"detail", row.detail}});
  j["rows"] = std::move(rows);
  return j;
}

ordered_json to_json(const UniformityResult& r) {
  return ordered_json{{"u_norm", r.u_norm},
                      {"cut", r.cut},
                      {"bound", r.bound},
                      {"satisfied", r.satisfied},
                      {"certified", r.certified}};
}

ordered_json to_json(const StrongLfcDiagnostics& d) {
  ordered_json j;
  j["value"] = d.value;
  j["bound"] = d.bound;
  j["s1"] = d.s1;
  if (d.s_mid_valid) j["s_mid"] = d.s_mid;
  j["delta_used"] = d.delta_used;
  return j;
}

ordered_json to_json(const DenseModelVerifyResult& r) {
  return ordered_json{{"distance", r.distance},
                      {"satisfied", r.satisfied},
                      {"certified", r.certified},
                      {"mean_gap", r.mean_gap}};
}

void atomic_write_file(const std::string& path, const std::string& content) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("atomic_write_file: cannot open " + tmp);
    out << content;
    if (!out.flush()) throw std::runtime_error("atomic_write_file: write failed for " + tmp);
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0)
    throw std::runtime_error("atomic_write_file: rename failed for " + path);
}

}  // namespace szlab
