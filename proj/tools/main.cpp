#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "croftonlab/banach.hpp"
#include "croftonlab/cosine.hpp"
#include "croftonlab/estimate.hpp"
#include "croftonlab/product_crofton.hpp"
#include "croftonlab/scenario.hpp"

using json = nlohmann::ordered_json;
using namespace croftonlab;

namespace {

struct CommonOpts {
  std::string config;
  std::string scenario;
  long samples = 0;
  int grid = 0;
  std::uint64_t seed = 0;
  std::string out_dir;
  std::string format = "json";
};

void add_common(CLI::App* cmd, CommonOpts& o, bool scenario_cmd) {
  if (scenario_cmd) {
    cmd->add_option("--config", o.config, "scenario config file");
    cmd->add_option("--scenario", o.scenario, "built-in scenario name");
    cmd->add_option("--samples", o.samples, "Monte-Carlo sample count override");
    cmd->add_option("--grid", o.grid, "quadrature grid override");
    cmd->add_option("--seed", o.seed, "random seed override");
  }
  cmd->add_option("--out-dir", o.out_dir, "directory for report artifacts");
  cmd->add_option("--format", o.format, "report format: json or csv")
      ->check(CLI::IsMember({"json", "csv"}));
}

Scenario resolve_scenario(const CommonOpts& o) {
  Scenario sc;
  if (!o.config.empty())
    sc = load_scenario_config(o.config);
  else if (!o.scenario.empty())
    sc = builtin_scenario(o.scenario);
  else
    throw std::invalid_argument("either --config or --scenario is required");
  if (o.samples > 0) sc.samples = o.samples;
  if (o.grid > 0) sc.grid = o.grid;
  if (o.seed > 0) sc.seed = o.seed;
  return sc;
}

void flatten_csv(const json& j, const std::string& prefix, std::ostream& out) {
  for (const auto& [key, value] : j.items()) {
    std::string name = prefix.empty() ? key : prefix + "." + key;
    if (value.is_object())
      flatten_csv(value, name, out);
    else
      out << name << "," << value.dump() << "\n";
  }
}

void emit_report(const json& report, const CommonOpts& o, const std::string& name) {
  std::cout << report.dump(2) << "\n";
  if (o.out_dir.empty()) return;
  std::filesystem::create_directories(o.out_dir);
  std::filesystem::path base = std::filesystem::path(o.out_dir) / name;
  if (o.format == "csv") {
    std::ofstream out(base.string() + ".csv");
    out << "key,value\n";
    flatten_csv(report, "", out);
  } else {
    std::ofstream out(base.string() + ".json");
    out << report.dump(2) << "\n";
  }
}

json scenario_json(const Scenario& sc) {
  json factors = json::array();
  for (const auto& f : sc.factors)
    factors.push_back({{"family", f.family},
                       {"coord", f.coord},
                       {"orders", f.orders},
                       {"norm", f.norm_spec}});
  return {{"name", sc.name},
          {"chart_dim", sc.chart.n},
          {"mode", sc.mode == Mode::Theorem1 ? "theorem-1" : "theorem-2"},
          {"u_lo", std::vector<double>(sc.U.lo.data(), sc.U.lo.data() + sc.U.lo.size())},
          {"u_hi", std::vector<double>(sc.U.hi.data(), sc.U.hi.data() + sc.U.hi.size())},
          {"samples", sc.samples},
          {"grid", sc.grid},
          {"root_grid", sc.root_grid},
          {"seed", sc.seed},
          {"symmetrize_resolution", sc.symmetrize_resolution},
          {"rhs_rel_tol", sc.rhs_rel_tol},
          {"factors", factors}};
}

json verification_json(const VerificationRecord& r) {
  return {{"scenario", r.scenario}, {"mode", r.mode},
          {"lhs", r.lhs},           {"lhs_std_error", r.lhs_std_error},
          {"rhs", r.rhs},           {"rhs_tolerance", r.rhs_tolerance},
          {"z_score", r.z_score},   {"pass", r.pass},
          {"samples", r.samples},   {"grid", r.grid},
          {"seed", r.seed}};
}

int run_symmetrize(const CommonOpts& o, const std::string& norm_spec, int resolution) {
  Norm base = parse_norm_spec(norm_spec);
  SymmetrizedNorm sym = symmetrize(base, resolution);
  int probe = base.dim() == 2 ? 64 : 2;
  json samples = json::array();
  if (base.dim() == 2) {
    for (int i = 0; i < probe; ++i) {
      double a = 2.0 * M_PI * i / probe;
      Vec y(2);
      y << std::cos(a), std::sin(a);
      samples.push_back({{"angle", a}, {"h", sym.h(y)}, {"base_gauge", base.gauge(y)}});
    }
  }
  Vec e1 = Vec::Zero(base.dim());
  e1[0] = 1.0;
  json report = {{"command", "symmetrize"},
                 {"norm", norm_spec},
                 {"resolution", sym.resolution},
                 {"h_e1", sym.h(e1)},
                 {"atoms", static_cast<int>(sym.norm.atoms().cols())},
                 {"grid", samples}};
  emit_report(report, o, "symmetrize");
  return 0;
}

int run_crofton_density(const CommonOpts& o, const std::string& norm_spec, int degree,
                        double regularization) {
  Norm space = parse_norm_spec(norm_spec);
  InversionReport ir;
  GrassmannDensity phi = crofton_density_for(space, regularization, degree, &ir);
  json report = {{"command", "crofton-density"},
                 {"norm", norm_spec},
                 {"degree", ir.degree},
                 {"residual_sup", ir.residual_sup},
                 {"min_density", phi.min_value()},
                 {"mean_density", phi.mean_value()}};
  emit_report(report, o, "crofton_density");
  if (!o.out_dir.empty())
    phi.write_csv((std::filesystem::path(o.out_dir) / "crofton_density_grid.csv").string());
  return 0;
}

int run_zonoid_check(const CommonOpts& o, const std::string& norm_spec, int degree,
                     double regularization) {
  Norm space = parse_norm_spec(norm_spec);
  ZonoidReport zr = zonoid_check(space, regularization, degree);
  json report = {{"command", "zonoid-check"},
                 {"norm", norm_spec},
                 {"is_zonoid", zr.is_zonoid},
                 {"min_density", zr.min_density},
                 {"mean_density", zr.mean_density}};
  emit_report(report, o, "zonoid_check");
  return 0;
}

int run_mixed_volume(const CommonOpts& o) {
  Scenario sc = resolve_scenario(o);
  FinslerReport fr;
  double rhs = mixed_volume_side(sc, sc.grid, &fr);
  json report = {{"command", "mixed-volume"},
                 {"scenario", scenario_json(sc)},
                 {"value", rhs},
                 {"finsler_integral", fr.value},
                 {"coarse_value", fr.coarse_value},
                 {"refinement_delta", fr.refinement_delta},
                 {"grid", fr.grid}};
  emit_report(report, o, "mixed_volume");
  return 0;
}

int run_average_solutions(const CommonOpts& o, const std::string& sample_csv) {
  Scenario sc = resolve_scenario(o);
  EstimateReport er = estimate_average(sc, sc.samples, sc.seed);
  json ranges = json::array();
  for (const auto& r : er.t_ranges) ranges.push_back({r[0], r[1]});
  json report = {{"command", "average-solutions"},
                 {"scenario", scenario_json(sc)},
                 {"estimate", er.estimate},
                 {"std_error", er.std_error},
                 {"samples", er.samples},
                 {"uncertain_samples", er.uncertain_samples},
                 {"t_ranges", ranges}};
  emit_report(report, o, "average_solutions");
  (void)sample_csv;
  return 0;
}

int run_verify(const CommonOpts& o) {
  Scenario sc = resolve_scenario(o);
  VerificationRecord rec = verify(sc, sc.samples, sc.grid, sc.seed);
  json report = {{"command", "verify"},
                 {"scenario", scenario_json(sc)},
                 {"result", verification_json(rec)}};
  emit_report(report, o, "verify");
  return rec.pass ? 0 : 1;
}

int run_selftest(const CommonOpts& o) {
  json table = json::array();
  bool all_pass = true;
  for (const std::string& name : builtin_scenario_names()) {
    Scenario sc = builtin_scenario(name);
    if (o.samples > 0) sc.samples = o.samples;
    if (o.seed > 0) sc.seed = o.seed;
    VerificationRecord rec = verify(sc, sc.samples, sc.grid, sc.seed);
    all_pass = all_pass && rec.pass;
    std::printf("%-22s lhs=%10.5f  rhs=%10.5f  z=%7.2f  %s\n", name.c_str(), rec.lhs,
                rec.rhs, rec.z_score, rec.pass ? "pass" : "FAIL");
    table.push_back(verification_json(rec));
  }
  json report = {{"command", "selftest"}, {"results", table}, {"pass", all_pass}};
  if (!o.out_dir.empty()) emit_report(report, o, "selftest");
  return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Numerical laboratory for averaged solution counts of random "
               "equation systems and mixed volumes of convex bodies"};
  app.require_subcommand(1);

  CommonOpts o;
  std::string norm_spec = "euclidean:2";
  int resolution = 2048;
  int degree = 0;
  double regularization = 1e-10;
  double zc_regularization = 1e-3;
  std::string sample_csv;

  auto* c_sym = app.add_subcommand("symmetrize", "zonoid symmetrization of a norm");
  c_sym->add_option("--norm", norm_spec, "norm spec, e.g. lp:4:3");
  c_sym->add_option("--resolution", resolution, "sphere quadrature resolution");
  add_common(c_sym, o, false);

  auto* c_cd = app.add_subcommand("crofton-density", "invert the cosine transform of a norm");
  c_cd->add_option("--norm", norm_spec, "norm spec");
  c_cd->add_option("--degree", degree, "max harmonic degree (0: default)");
  c_cd->add_option("--regularization", regularization, "Tikhonov term");
  add_common(c_cd, o, false);

  auto* c_zc = app.add_subcommand("zonoid-check", "Crofton density positivity test");
  c_zc->add_option("--norm", norm_spec, "norm spec");
  c_zc->add_option("--degree", degree, "max harmonic degree (0: default)");
  c_zc->add_option("--regularization", zc_regularization, "Tikhonov term");
  add_common(c_zc, o, false);

  auto* c_mv = app.add_subcommand("mixed-volume", "mixed-volume side of a scenario");
  add_common(c_mv, o, true);

  auto* c_avg = app.add_subcommand("average-solutions",
                                   "Monte-Carlo average solution count of a scenario");
  c_avg->add_option("--sample-csv", sample_csv, "per-sample diagnostics CSV path");
  add_common(c_avg, o, true);

  auto* c_ver = app.add_subcommand("verify", "compare both sides of a scenario");
  add_common(c_ver, o, true);

  auto* c_st = app.add_subcommand("selftest", "run all built-in scenarios");
  c_st->add_option("--samples", o.samples, "sample count override");
  c_st->add_option("--seed", o.seed, "seed override");
  add_common(c_st, o, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (c_sym->parsed()) return run_symmetrize(o, norm_spec, resolution);
    if (c_cd->parsed()) return run_crofton_density(o, norm_spec, degree, regularization);
    if (c_zc->parsed()) return run_zonoid_check(o, norm_spec, degree, zc_regularization);
    if (c_mv->parsed()) return run_mixed_volume(o);
    if (c_avg->parsed()) return run_average_solutions(o, sample_csv);
    if (c_ver->parsed()) return run_verify(o);
    if (c_st->parsed()) return run_selftest(o);
  } catch (const non_convergence_error& e) {
    std::cerr << "non-convergence: " << e.what() << " (residual " << e.residual << ")\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
