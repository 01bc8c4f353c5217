#include <cmath>
#include <cstdint>
#include <ctime>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "szlab/json_io.hpp"

using nlohmann::ordered_json;
using namespace szlab;

namespace {

struct GlobalOpts {
  std::uint64_t seed = 0;
  int jobs = 1;
  std::int64_t budget_ms = 0;
  std::string out;
  std::string format = "json";
};

ordered_json resolved_config(const std::string& command, const GlobalOpts& g,
                             ordered_json params) {
  ordered_json c;
  c["command"] = command;
  c["seed"] = g.seed;
  c["jobs"] = g.jobs;
  c["budget_ms"] = g.budget_ms;
  c["format"] = g.format;
  c["parameters"] = std::move(params);
  return c;
}

void emit(const GlobalOpts& g, const ordered_json& config, ordered_json body,
          const std::string& csv = "") {
  body["config"] = config;
  body["timestamp"] = static_cast<std::int64_t>(std::time(nullptr));
  std::string payload;
  if (g.format == "csv") {
    if (csv.empty()) throw usage_error("csv format is not available for this command");
    payload = csv;
  } else {
    payload = body.dump(2) + "\n";
  }
  if (g.out.empty())
    std::cout << payload;
  else
    atomic_write_file(g.out, payload);
}

int run(int argc, char** argv) {
  CLI::App app{"szlab: numerical laboratory for relative Szemeredi experiments"};
  app.require_subcommand(1);
  app.fallthrough();
  GlobalOpts g;
  app.add_option("--seed", g.seed, "base seed for all randomness");
  app.add_option("--jobs", g.jobs, "worker cap (recorded; execution is sequential)");
  app.add_option("--budget-ms", g.budget_ms, "wall-clock budget in milliseconds");
  app.add_option("--out", g.out, "output file (atomic write); default stdout");
  app.add_option("--format", g.format, "json or csv")
      ->check(CLI::IsMember({"json", "csv"}));

  // extremal
  auto* ext = app.add_subcommand("extremal", "exact r_k(N) with witness");
  int ext_n = 9, ext_k = 3;
  bool ext_table = false;
  ext->add_option("--N", ext_n, "ambient interval length");
  ext->add_option("--k", ext_k, "progression length");
  ext->add_flag("--table", ext_table, "emit the whole table 1..N");

  // norms
  auto* nrm = app.add_subcommand("norms", "cut norm and Gowers norm of a seeded function");
  int nrm_n = 8, nrm_r = 2, nrm_restarts = 64;
  double nrm_amp = 0.75;
  nrm->add_option("--N", nrm_n, "modulus");
  nrm->add_option("--r", nrm_r, "norm order");
  nrm->add_option("--restarts", nrm_restarts, "heuristic restarts");
  nrm->add_option("--amplitude", nrm_amp, "instance amplitude");

  // lfc
  auto* lfc = app.add_subcommand("lfc", "linear-forms deviation of a majorant");
  int lfc_n = 5, lfc_k = 3;
  std::uint64_t lfc_samples = 256;
  std::string lfc_nu = "random";
  double lfc_amp = 0.2;
  lfc->add_option("--N", lfc_n, "modulus");
  lfc->add_option("--k", lfc_k, "progression length");
  lfc->add_option("--nu", lfc_nu, "ones or random")->check(CLI::IsMember({"ones", "random"}));
  lfc->add_option("--samples", lfc_samples, "sampled patterns for k >= 4");
  lfc->add_option("--amplitude", lfc_amp, "instance amplitude");

  // counting
  auto* cnt = app.add_subcommand("counting", "relative counting diagnostics on a seeded instance");
  int cnt_n = 5, cnt_k = 3;
  cnt->add_option("--N", cnt_n, "part size");
  cnt->add_option("--k", cnt_k, "uniformity");

  // sieve
  auto* sv = app.add_subcommand("sieve", "W-trick parameters and GPY majorant summary");
  long long sv_n = 1000;
  double sv_c0 = 0.25, sv_gamma = 0.3;
  bool sv_no_floor = false;
  sv->add_option("--N-prime", sv_n, "scale N'");
  sv->add_option("--c0", sv_c0, "omega = c0 ln N'");
  sv->add_option("--gamma", sv_gamma, "sieve level exponent");
  sv->add_flag("--no-floor", sv_no_floor, "disable the uniform majorant component");

  // pipeline
  auto* pl = app.add_subcommand("pipeline", "end-to-end W-tricked primes experiment");
  PipelineConfig pcfg;
  bool pl_no_floor = false;
  pl->add_option("--N-prime", pcfg.n_prime, "scale N'");
  pl->add_option("--k", pcfg.k, "progression length");
  pl->add_option("--c0", pcfg.c0, "omega = c0 ln N'");
  pl->add_option("--gamma", pcfg.gamma, "sieve level exponent");
  pl->add_option("--mc-samples", pcfg.mc_samples, "Monte Carlo assignments per pattern");
  pl->add_option("--random-patterns", pcfg.random_patterns, "extra random patterns");
  pl->add_option("--table-N-max", pcfg.table_n_max, "r_k table depth for the dense comparator");
  pl->add_flag("--no-floor", pl_no_floor, "disable the uniform majorant component");

  // oracle
  auto* orc = app.add_subcommand("oracle", "dual-route consistency check");
  std::string orc_target = "lfc";
  int orc_n = 5, orc_k = 3;
  orc->add_option("--target", orc_target, "lfc, mixed, or ap")
      ->check(CLI::IsMember({"lfc", "mixed", "ap"}));
  orc->add_option("--N", orc_n, "size");
  orc->add_option("--k", orc_k, "progression length");

  // suite
  auto* st = app.add_subcommand("suite", "inequality suite over seeded instances");
  std::string st_scope = "propD_dense";
  int st_seeds = 20, st_n = 5, st_k = 3;
  st->add_option("--scope", st_scope,
                 "lemB, corB, lemC, propD_dense, propD_chain, eqD_varnu, eqD_capnu");
  st->add_option("--seeds", st_seeds, "number of seeded instances");
  st->add_option("--N", st_n, "part size");
  st->add_option("--k", st_k, "uniformity");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  }

  if (ext->parsed()) {
    const auto config = resolved_config(
        "extremal", g, {{"N", ext_n}, {"k", ext_k}, {"table", ext_table}});
    std::vector<ExtremalRecord> recs =
        ext_table ? r_k_table(ext_n, ext_k) : std::vector<ExtremalRecord>{r_k_exact(ext_n, ext_k)};
    ordered_json body;
    ordered_json arr = ordered_json::array();
    for (const auto& r : recs) arr.push_back(to_json(r));
    body["records"] = std::move(arr);
    emit(g, config, std::move(body), extremal_csv(recs));
    return 0;
  }
  if (nrm->parsed()) {
    const auto config = resolved_config("norms", g,
                                        {{"N", nrm_n},
                                         {"r", nrm_r},
                                         {"restarts", nrm_restarts},
                                         {"amplitude", nrm_amp}});
    const DensityFunction f = DensityFunction::random_mean_one(
        static_cast<std::size_t>(nrm_n), g.seed, nrm_amp);
    std::vector<double> centered(f.values);
    for (auto& v : centered) v -= 1.0;
    CutNormBudget cb;
    cb.restarts = nrm_restarts;
    cb.seed = g.seed;
    ordered_json body;
    body["cut_norm"] = to_json(cut_norm_arithmetic(centered, f.n, nrm_r, cb));
    body["gowers"] = to_json(gowers_norm(sum_tensor_from_function(centered, f.n, nrm_r)));
    emit(g, config, std::move(body));
    return 0;
  }
  if (lfc->parsed()) {
    const auto config = resolved_config("lfc", g,
                                        {{"N", lfc_n},
                                         {"k", lfc_k},
                                         {"nu", lfc_nu},
                                         {"samples", lfc_samples},
                                         {"amplitude", lfc_amp}});
    const DensityFunction nu =
        lfc_nu == "ones"
            ? DensityFunction::constant(static_cast<std::size_t>(lfc_n), 1.0)
            : DensityFunction::random_mean_one(static_cast<std::size_t>(lfc_n), g.seed, lfc_amp);
    LfcOptions opts;
    opts.samples = lfc_samples;
    opts.seed = g.seed;
    emit(g, config, ordered_json{{"report", to_json(lfc_delta(nu, lfc_k, opts))}});
    return 0;
  }
  if (cnt->parsed()) {
    const auto config = resolved_config("counting", g, {{"N", cnt_n}, {"k", cnt_k}});
    const WeightedHypergraph nu = random_majorant_hg(cnt_k, cnt_n, g.seed);
    const WeightedHypergraph gg = random_subfunction_hg(nu, g.seed);
    const WeightedHypergraph gt = random_bounded_hg(cnt_k, cnt_n, g.seed + 7777);
    LfcOptions opts;
    opts.seed = g.seed;
    const LfcReport rep = lfc_delta(nu, opts);
    ordered_json body;
    body["delta_report"] = to_json(rep);
    body["diagnostics"] = to_json(relative_counting_gap(gg, gt, nu, rep.delta));
    emit(g, config, std::move(body));
    return 0;
  }
  if (sv->parsed()) {
    const auto config = resolved_config(
        "sieve", g,
        {{"N_prime", sv_n}, {"c0", sv_c0}, {"gamma", sv_gamma}, {"floor", !sv_no_floor}});
    const SieveParams p = w_trick_params(sv_n, sv_c0, sv_gamma);
    const GpyMajorant maj = gpy_majorant(p, !sv_no_floor);
    ordered_json body;
    body["params"] = to_json(p);
    body["lambda_mean"] = mean(lambda_weight(p));
    body["majorant"] = ordered_json{{"mean", mean(maj.nu)},
                                    {"scale", maj.scale},
                                    {"domination_ratio", maj.domination_ratio},
                                    {"floor", maj.floor}};
    emit(g, config, std::move(body));
    return 0;
  }
  if (pl->parsed()) {
    pcfg.seed = g.seed;
    pcfg.floor = !pl_no_floor;
    pcfg.budget_ms = g.budget_ms;
    const auto config = resolved_config("pipeline", g,
                                        {{"N_prime", pcfg.n_prime},
                                         {"k", pcfg.k},
                                         {"c0", pcfg.c0},
                                         {"gamma", pcfg.gamma},
                                         {"mc_samples", pcfg.mc_samples},
                                         {"random_patterns", pcfg.random_patterns},
                                         {"table_N_max", pcfg.table_n_max},
                                         {"floor", pcfg.floor}});
    emit(g, config, to_json(run_pipeline(pcfg)));
    return 0;
  }
  if (orc->parsed()) {
    const auto config =
        resolved_config("oracle", g, {{"target", orc_target}, {"N", orc_n}, {"k", orc_k}});
    double a = 0.0, b = 0.0;
    if (orc_target == "lfc") {
      const DensityFunction nu =
          DensityFunction::random_mean_one(static_cast<std::size_t>(orc_n), g.seed, 0.2);
      const LfcPattern p = LfcPattern::all_ones(orc_k);
      a = lfc_value_arithmetic(nu, orc_k, p);
      b = lfc_value_arithmetic_bruteforce(nu, orc_k, p);
    } else if (orc_target == "mixed") {
      const WeightedHypergraph nu = random_majorant_hg(orc_k, orc_n, g.seed);
      MixedFactorAssignment asg = MixedFactorAssignment::from_id(
          orc_k, mix_seed(g.seed, 3) % 531441ULL);
      a = mixed_blowup_average(nu, asg);
      b = mixed_blowup_average_by_expansion(nu, asg);
    } else {  // ap: arithmetic vs hypergraph correspondence
      const DensityFunction f =
          DensityFunction::random_mean_one(static_cast<std::size_t>(orc_n), g.seed, 0.5);
      a = ap_count(f, orc_k);
      b = clique_density(WeightedHypergraph::from_arithmetic(f, orc_k));
    }
    const double gap = std::abs(a - b) / (1.0 + std::abs(a));
    const bool match = gap <= 1e-9;
    emit(g, config,
         ordered_json{{"primary", a}, {"oracle", b}, {"relative_gap", gap}, {"match", match}});
    return match ? 0 : 3;
  }
  if (st->parsed()) {
    const auto config = resolved_config(
        "suite", g, {{"scope", st_scope}, {"seeds", st_seeds}, {"N", st_n}, {"k", st_k}});
    const SuiteResult r =
        run_suite(suite_scope_from_string(st_scope), st_seeds, st_n, st_k, g.seed + 1);
    std::string csv = "seed,pass,lhs,rhs,slack,detail\n";
    for (const auto& row : r.rows)
      csv += std::to_string(row.seed) + "," + (row.pass ? "1" : "0") + "," +
             std::to_string(row.lhs) + "," + std::to_string(row.rhs) + "," +
             std::to_string(row.slack) + "," + row.detail + "\n";
    emit(g, config, to_json(r), csv);
    return r.failures == 0 ? 0 : 3;
  }
  throw usage_error("no command given");
}

void error_json(const char* kind, const std::string& what) {
  std::cerr << ordered_json{{"error", {{"kind", kind}, {"message", what}}}}.dump() << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return 0;  // --help
    error_json("usage", e.what());
    return 1;
  } catch (const usage_error& e) {
    error_json("usage", e.what());
    return 1;
  } catch (const budget_error& e) {
    error_json("budget", e.what());
    return 2;
  } catch (const std::exception& e) {
    error_json("internal", e.what());
    return 1;
  }
}
