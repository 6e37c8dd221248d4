#include "commands.hpp"

#include "fock/criterion.hpp"
#include "fock/io.hpp"
#include "fock/operators.hpp"
#include "fock/selftest.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

namespace fock::cli {

namespace {

std::ostream &log(const RunContext &ctx) {
  static std::ostringstream sink;
  sink.str("");
  return ctx.quiet || !ctx.out ? sink : *ctx.out;
}

std::string path_in(const RunContext &ctx, const std::string &name) {
  return (std::filesystem::path(ctx.config.output.directory) / name).string();
}

void write_json(const RunContext &ctx, const std::string &name, const nlohmann::json &j) {
  write_text_file(path_in(ctx, name), j.dump(2) + "\n");
}

template <class F> void write_csv(const RunContext &ctx, const std::string &name, F body) {
  std::ostringstream os;
  body(os);
  write_text_file(path_in(ctx, name), os.str());
}

nlohmann::json config_echo(const ExperimentConfig &cfg) {
  nlohmann::json j;
  j["s_values"] = cfg.s_values;
  if (cfg.N)
    j["N"] = *cfg.N;
  if (cfg.k_max)
    j["k_max"] = *cfg.k_max;
  if (cfg.j_max)
    j["j_max"] = *cfg.j_max;
  j["tolerances"] = {{"quad_abs", cfg.tolerances.quad_abs},
                     {"quad_rel", cfg.tolerances.quad_rel},
                     {"verdict_multiplier", cfg.tolerances.verdict_multiplier}};
  return j;
}

nlohmann::json symbol_json(const SymbolSpec &spec) {
  nlohmann::json modes = nlohmann::json::array();
  for (const auto &[j, v] : spec.modes())
    modes.push_back({{"j", j}, {"profile", v.description()}});
  return {{"name", spec.name()}, {"radial", spec.is_radial()}, {"modes", std::move(modes)}};
}

std::string s_tag(std::size_t i) { return "s" + std::to_string(i); }

} // namespace

int cmd_matrix(const RunContext &ctx) {
  const ExperimentConfig &cfg = ctx.config;
  const int N = cfg.require_N();
  std::vector<std::pair<std::string, SymbolSpec>> symbols;
  if (cfg.u)
    symbols.emplace_back("u", *cfg.u);
  if (cfg.v)
    symbols.emplace_back("v", *cfg.v);
  if (symbols.empty())
    throw ConfigError("config is missing required field 'u' (or 'v')");
  const QuadratureSpec quad = cfg.quadrature();

  nlohmann::json index = nlohmann::json::array();
  for (std::size_t i = 0; i < cfg.s_values.size(); ++i) {
    const SobolevOrder s(cfg.s_values[i]);
    for (const auto &[role, spec] : symbols) {
      const TruncatedOperator T = toeplitz_matrix(spec, s, N, quad);
      const std::string stem = "matrix_" + role + "_" + s_tag(i);
      if (cfg.output.csv)
        write_csv(ctx, stem + ".csv", [&](std::ostream &os) { write_matrix_csv(os, T); });
      if (cfg.output.json)
        write_json(ctx, stem + ".json", to_json(T));
      index.push_back({{"file", stem}, {"symbol", role}, {"label", T.label}, {"s", s.value()},
                       {"exact_band", T.exact_band}, {"exact_window", T.exact_window}});
      log(ctx) << stem << ": " << role << " = " << T.label << ", s = " << format_double(s.value())
               << ", N = " << N << ", band " << T.exact_band << ", window 0.." << T.exact_window
               << '\n';
    }
  }
  if (cfg.output.json)
    write_json(ctx, "matrix_index.json", {{"config", config_echo(cfg)}, {"matrices", index}});
  return kSuccess;
}

int cmd_commutator(const RunContext &ctx) {
  const ExperimentConfig &cfg = ctx.config;
  const int N = cfg.require_N();
  const SymbolSpec &u = cfg.require_u();
  const SymbolSpec &v = cfg.require_v();
  const QuadratureSpec quad = cfg.quadrature();

  nlohmann::json rows = nlohmann::json::array();
  std::ostringstream table;
  table << "s,window,residual,row,col,tolerance,commutes\n";
  for (std::size_t i = 0; i < cfg.s_values.size(); ++i) {
    const SobolevOrder s(cfg.s_values[i]);
    const TruncatedOperator C =
        commutator(toeplitz_matrix(u, s, N, quad), toeplitz_matrix(v, s, N, quad));
    int window = C.exact_window;
    if (cfg.k_max)
      window = std::min(window, *cfg.k_max + std::max(cfg.j_max.value_or(0), C.exact_band));
    if (window < 0)
      throw ConfigError("config field 'N': N = " + std::to_string(N) +
                        " leaves no exactness window for the commutator");
    const WindowPeak peak = window_peak(C, window);
    const double tol = std::max(cfg.tolerances.verdict_multiplier * C.abs_error, 1e-10);
    const bool commutes = peak.value <= tol;
    const std::string stem = "commutator_" + s_tag(i);
    if (cfg.output.csv)
      write_csv(ctx, stem + ".csv", [&](std::ostream &os) { write_matrix_csv(os, C); });
    if (cfg.output.json)
      write_json(ctx, stem + ".json", to_json(C));
    rows.push_back({{"s", s.value()}, {"window", window}, {"residual", peak.value},
                    {"row", peak.row}, {"col", peak.col}, {"tolerance", tol},
                    {"commutes", commutes}});
    table << format_double(s.value()) << ',' << window << ',' << format_double(peak.value) << ','
          << peak.row << ',' << peak.col << ',' << format_double(tol) << ','
          << (commutes ? "true" : "false") << '\n';
    log(ctx) << "s = " << format_double(s.value()) << ": window 0.." << window << ", residual "
             << format_double(peak.value) << " at (" << peak.row << ", " << peak.col << ")"
             << (commutes ? ", commutes" : ", does not commute") << '\n';
  }
  if (cfg.output.csv)
    write_text_file(path_in(ctx, "commutator_summary.csv"), table.str());
  if (cfg.output.json)
    write_json(ctx, "commutator_summary.json",
               {{"config", config_echo(cfg)}, {"u", symbol_json(u)}, {"v", symbol_json(v)},
                {"rows", rows}});
  return kSuccess;
}

int cmd_criterion(const RunContext &ctx) {
  const ExperimentConfig &cfg = ctx.config;
  const int N = cfg.require_N();
  const int k_max = cfg.require_k_max();
  const SymbolSpec &u = cfg.require_u();
  const SymbolSpec &v = cfg.require_v();
  if (!u.is_radial())
    throw ConfigError("config field 'u': the radiality criterion needs a radial u "
                      "(the criterion assumes u is nonconstant and radial); got modes beyond j = 0");
  if (cfg.j_max && v.max_abs_mode() > *cfg.j_max)
    throw ConfigError("config field 'j_max': v has mode " + std::to_string(v.max_abs_mode()) +
                      " beyond j_max = " + std::to_string(*cfg.j_max));
  const RadialProfile u0 = u.mode(0);
  const QuadratureSpec quad = cfg.quadrature();
  CriterionOptions opts;
  opts.verdict_multiplier = cfg.tolerances.verdict_multiplier;
  opts.asserted_commutation = cfg.assert_commutation;

  std::vector<CriterionReport> reports;
  nlohmann::json out = nlohmann::json::array();
  int failures = 0;
  for (double sv : cfg.s_values) {
    const SobolevOrder s(sv);
    CriterionReport rep = functional_equation_residuals(u0, v, s, k_max, quad, opts);
    attach_matrix_residuals(rep, commutator_cross_check(u0, v, s, N, quad));
    for (const auto &[idx, cell] : rep.cells)
      failures += cell.ok() ? 0 : 1;
    std::string verdict = Verdict::kind_name(rep.verdict.kind);
    if (!rep.verdict.modes.empty()) {
      verdict += "(";
      for (std::size_t i = 0; i < rep.verdict.modes.size(); ++i)
        verdict += (i ? "," : "") + std::to_string(rep.verdict.modes[i]);
      verdict += ")";
    } else if (!rep.verdict.reason.empty()) {
      verdict += ": " + rep.verdict.reason;
    }
    log(ctx) << "s = " << format_double(sv) << ": " << rep.cells.size() << " cells, verdict "
             << verdict << '\n';
    out.push_back(to_json(rep));
    reports.push_back(std::move(rep));
  }
  if (cfg.output.json)
    write_json(ctx, "criterion.json",
               {{"config", config_echo(cfg)}, {"N", N}, {"u", symbol_json(u)}, {"v", symbol_json(v)},
                {"reports", out}});
  if (cfg.output.csv)
    write_csv(ctx, "criterion.csv", [&](std::ostream &os) { write_criterion_csv(os, reports); });
  return failures ? kRuntimeFailure : kSuccess;
}

int cmd_decompose(const RunContext &ctx) {
  const ExperimentConfig &cfg = ctx.config;
  const std::string &path = cfg.require_samples();
  if (!cfg.j_max)
    throw ConfigError("config is missing required field 'j_max'");
  std::ifstream in(path);
  if (!in)
    throw ConfigError("cannot open samples file '" + path + "'");
  PolarSamples samples;
  try {
    samples = read_polar_csv(in);
  } catch (const InputFormatError &e) {
    throw ConfigError(path + ": " + e.what());
  }
  const int M = samples.angle_count;
  if (M < 2 * *cfg.j_max + 2)
    throw ConfigError("samples: " + std::to_string(M) + " angles alias modes up to j_max = " +
                      std::to_string(*cfg.j_max) + "; need M >= " +
                      std::to_string(2 * *cfg.j_max + 2));
  const SymbolSpec rec = decompose(samples, *cfg.j_max);

  // Round trip on the sample grid: pointwise, and in L^2(G_s) with the
  // trapezoid rule over the sampled radii.
  double max_err = 0.0;
  std::vector<double> ring_err(samples.radii.size(), 0.0);
  for (std::size_t i = 0; i < samples.radii.size(); ++i)
    for (int k = 0; k < M; ++k) {
      const cplx z = std::polar(samples.radii[i], samples.angle(k));
      const double e = std::abs(evaluate(rec, z) - samples.at(i, k));
      max_err = std::max(max_err, e);
      ring_err[i] += e * e / M;
    }
  nlohmann::json l2 = nlohmann::json::array();
  for (double sv : cfg.s_values) {
    double total = 0.0;
    for (std::size_t i = 0; i + 1 < samples.radii.size(); ++i) {
      auto w = [&](std::size_t n) {
        const double r = samples.radii[n];
        return ring_err[n] * std::pow(r, 2.0 * sv + 1.0) * std::exp(-r * r);
      };
      total += 0.5 * (samples.radii[i + 1] - samples.radii[i]) * (w(i) + w(i + 1));
    }
    // (1/pi) * 2 pi * radial integral
    l2.push_back({{"s", sv}, {"residual", std::sqrt(2.0 * total)}});
  }

  std::vector<int> modes;
  for (const auto &[j, p] : rec.modes())
    modes.push_back(j);
  log(ctx) << "decompose: " << samples.radii.size() << " radii x " << M << " angles, "
           << modes.size() << " mode(s) kept, max sample error " << format_double(max_err) << '\n';
  if (cfg.output.json)
    write_json(ctx, "decompose.json",
               {{"config", config_echo(cfg)},
                {"samples", {{"file", std::filesystem::path(path).filename().string()},
                             {"radii", samples.radii.size()},
                             {"angles", M}}},
                {"modes", modes},
                {"symbol", to_json(rec, samples.radii)},
                {"max_sample_error", max_err},
                {"l2_residual", l2}});
  if (cfg.output.csv)
    write_csv(ctx, "modes.csv", [&](std::ostream &os) { write_modes_csv(os, rec, samples.radii); });
  return kSuccess;
}

int cmd_selftest(std::ostream &out, bool quiet) {
  const auto results = run_acceptance();
  std::ostringstream table;
  const bool ok = print_acceptance(table, results);
  if (!quiet || !ok)
    out << table.str();
  return ok ? kSuccess : kRuntimeFailure;
}

int run(int argc, char **argv, std::ostream &out, std::ostream &err) {
  CLI::App app{"Toeplitz operators on Fock-Sobolev spaces: matrices, commutators and the "
               "radiality criterion"};
  app.require_subcommand(1);
  std::string config_path, out_dir, format, samples;
  bool quiet = false;
  auto add_common = [&](CLI::App *sub) {
    sub->add_option("--config", config_path, "Experiment file (YAML)")->required();
    sub->add_option("--out", out_dir, "Output directory (overrides output.directory)");
    sub->add_option("--format", format, "json, csv or both")
        ->check(CLI::IsMember({"json", "csv", "both"}));
  };
  app.add_flag("--quiet", quiet, "Suppress progress output");
  CLI::App *matrix = app.add_subcommand("matrix", "Truncated Toeplitz matrices of u and v");
  CLI::App *comm = app.add_subcommand("commutator", "Commutator [T_u, T_v] and window residuals");
  CLI::App *crit = app.add_subcommand("criterion", "Functional-equation cells and radiality verdict");
  CLI::App *dec = app.add_subcommand("decompose", "Fourier-radial modes of polar samples");
  CLI::App *self = app.add_subcommand("selftest", "Run the acceptance suite");
  for (CLI::App *sub : {matrix, comm, crit, dec}) {
    add_common(sub);
    sub->add_flag("--quiet", quiet, "Suppress progress output");
  }
  dec->add_option("--samples", samples, "Polar sample CSV (overrides the samples field)");
  self->add_flag("--quiet", quiet, "Only print failures");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kConfigError;
  }

  try {
    if (self->parsed())
      return cmd_selftest(out, quiet);
    RunContext ctx{load_config(config_path), quiet, &out};
    if (!out_dir.empty())
      ctx.config.output.directory = out_dir;
    if (!format.empty())
      apply_format(ctx.config.output, format);
    if (!samples.empty())
      ctx.config.samples = samples;
    if (matrix->parsed())
      return cmd_matrix(ctx);
    if (comm->parsed())
      return cmd_commutator(ctx);
    if (crit->parsed())
      return cmd_criterion(ctx);
    return cmd_decompose(ctx);
  } catch (const ConfigError &e) {
    err << "configuration error: " << e.what() << '\n';
    return kConfigError;
  } catch (const std::exception &e) {
    err << "error: " << e.what() << '\n';
    return kRuntimeFailure;
  }
}

} // namespace fock::cli
