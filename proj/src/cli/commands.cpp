#include "cli/commands.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <map>
#include <memory>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "cli/json_writer.hpp"
#include "cli/records.hpp"
#include "cli/verification.hpp"
#include "dirac_rm/errors.hpp"
#include "dirac_rm/oracle.hpp"
#include "dirac_rm/wavefunctions.hpp"

namespace dirac_rm::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ModelOptions {
  std::string symmetry = "spin";
  std::string variant = "rosen-morse";
  double v1 = 4.0;
  double v2 = 1.0;
  double alpha = 1.0;
  int gamma = 1;
  double mass = 5.0;
  double c = 0.0;
  double e_lo = 0.0;
  double e_hi = 0.0;
  CLI::Option* e_lo_opt = nullptr;
  CLI::Option* e_hi_opt = nullptr;
  double tolerance = 1e-10;
  int scan_points = 2000;
  int max_scan_points = 16000;
};

struct OutputOptions {
  std::string format = "json";
  std::string output = "-";
};

void add_model_options(CLI::App* app, ModelOptions& m) {
  app->add_option("--symmetry", m.symmetry, "spin or pseudospin")
      ->check(CLI::IsMember({"spin", "pseudospin"}));
  app->add_option("--variant", m.variant, "rosen-morse, eckart, pt, reflectionless")
      ->check(CLI::IsMember({"rosen-morse", "rm", "eckart", "pt", "pt-symmetric",
                             "reflectionless"}));
  app->add_option("--v1", m.v1, "well depth V1");
  app->add_option("--v2", m.v2, "tanh strength V2");
  app->add_option("--alpha", m.alpha, "range parameter");
  app->add_option("--gamma", m.gamma, "reflectionless integer gamma");
  app->add_option("--mass", m.mass, "Dirac mass M");
  app->add_option("--c", m.c, "Cs (spin) or Cps (pseudospin)");
  m.e_lo_opt = app->add_option("--e-lo", m.e_lo, "search window lower end");
  m.e_hi_opt = app->add_option("--e-hi", m.e_hi, "search window upper end");
  app->add_option("--tolerance", m.tolerance, "residual tolerance");
  app->add_option("--scan-points", m.scan_points, "initial scan resolution");
  app->add_option("--max-scan-points", m.max_scan_points, "scan resolution cap");
}

void add_output_options(CLI::App* app, OutputOptions& o, bool with_format = true) {
  if (with_format) {
    app->add_option("--format", o.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  }
  app->add_option("--output", o.output, "output path, - for standard output");
}

void add_config_option(CLI::App* app) {
  // Consumed before parsing; registered so it is accepted.
  app->add_option("--config", "key=value file merged under the flags");
}

ModelConfig build_model(const ModelOptions& m) {
  ModelConfig cfg;
  cfg.mass = m.mass;
  cfg.symmetry = m.symmetry == "spin" ? Symmetry::spin(m.c) : Symmetry::pseudospin(m.c);
  const auto variant = variant_from_string(m.variant);
  if (!variant) throw UsageError("unknown variant " + m.variant);
  switch (*variant) {
    case Variant::RosenMorse: cfg.params = PotentialParams::rosen_morse(m.v1, m.v2, m.alpha); break;
    case Variant::Eckart: cfg.params = PotentialParams::eckart(m.v1, m.v2, m.alpha); break;
    case Variant::PtSymmetric: cfg.params = PotentialParams::pt_symmetric(m.v1, m.v2, m.alpha); break;
    case Variant::Reflectionless:
      if (m.gamma < 1) throw UsageError("--gamma must be a positive integer");
      cfg.params = PotentialParams::reflectionless(m.gamma, m.alpha);
      break;
  }
  const bool lo = m.e_lo_opt && m.e_lo_opt->count() > 0;
  const bool hi = m.e_hi_opt && m.e_hi_opt->count() > 0;
  if (lo != hi) throw UsageError("--e-lo and --e-hi must be given together");
  if (lo) cfg.search_window = std::make_pair(m.e_lo, m.e_hi);
  cfg.tolerance = m.tolerance;
  cfg.scan_points = m.scan_points;
  cfg.max_scan_points = m.max_scan_points;
  try {
    cfg.validate();
  } catch (const InvalidArgument& e) {
    throw UsageError(e.what());
  }
  return cfg;
}

// Writes to the named file or to `out`.
class Sink {
 public:
  Sink(const std::string& path, std::ostream& out) {
    if (path.empty() || path == "-") {
      os_ = &out;
    } else {
      file_ = std::make_unique<std::ofstream>(path, std::ios::binary);
      if (!*file_) throw UsageError("cannot open output file " + path);
      os_ = file_.get();
    }
  }
  std::ostream& stream() { return *os_; }

 private:
  std::unique_ptr<std::ofstream> file_;
  std::ostream* os_ = nullptr;
};

struct SpectrumRun {
  std::vector<SpectrumRecord> records;
  std::vector<std::string> errors;
};

double closest(const std::vector<double>& xs, double target) {
  double best = std::numeric_limits<double>::quiet_NaN();
  for (double x : xs) {
    if (std::isnan(best) || std::abs(x - target) < std::abs(best - target)) best = x;
  }
  return best;
}

SpectrumRun compute_spectrum(const ModelConfig& cfg, int n_min, int n_max, bool physical,
                             const std::optional<OracleConfig>& oracle, Exec exec) {
  SpectrumRun run;
  for (int n = n_min; n <= n_max; ++n) {
    std::vector<BoundState> states;
    try {
      if (cfg.params.is_complex()) {
        states = solve_energy_complex(cfg, n, default_pt_seeds(cfg));
      } else {
        states = solve_energy(cfg, n, nullptr, exec);
      }
    } catch (const Error& e) {
      run.errors.push_back(fmt::format("n={}: {}: {}", n, e.kind(), e.what()));
      continue;
    }
    std::vector<double> crossings;
    if (oracle && !cfg.params.is_complex() && !states.empty()) {
      try {
        crossings = self_consistent_energies(cfg, *oracle, n, exec);
      } catch (const Error& e) {
        run.errors.push_back(fmt::format("n={} oracle: {}: {}", n, e.kind(), e.what()));
      }
    }
    for (const BoundState& s : states) {
      if (physical && !s.flags.all()) continue;
      SpectrumRecord rec{s, std::nullopt, std::nullopt};
      if (!crossings.empty()) {
        const double o = closest(crossings, s.energy.real());
        rec.oracle_energy = o;
        rec.oracle_delta = std::abs(o - s.energy.real());
      }
      run.records.push_back(rec);
    }
  }
  return run;
}

void write_run(std::ostream& os, const std::string& format, const SpectrumRun& run) {
  if (format == "csv") {
    os << spectrum_csv_header() << '\n';
    for (const auto& r : run.records) write_record_csv(os, r);
    return;
  }
  JsonWriter w(os);
  write_records_json(w, run.records);
}

std::optional<OracleConfig> make_oracle(bool enabled, const std::string& geometry, double extent,
                                        int points, double alpha) {
  if (!enabled) return std::nullopt;
  OracleConfig o = geometry == "half" ? OracleConfig::half_line(extent / alpha, points)
                                      : OracleConfig::full_line(extent / alpha, points);
  try {
    o.validate(alpha);
  } catch (const InvalidArgument& e) {
    throw UsageError(e.what());
  }
  return o;
}

// --config FILE: key=value lines become --key=value tokens placed right
// after the subcommand, so explicit flags (parsed later) win.
std::vector<std::string> merge_config(const std::vector<std::string>& args) {
  std::string path;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--config" && i + 1 < args.size()) path = args[i + 1];
    if (args[i].rfind("--config=", 0) == 0) path = args[i].substr(9);
  }
  if (path.empty()) return args;
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read config file " + path);
  std::vector<std::string> injected;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    auto trim = [](std::string s) {
      const auto b = s.find_first_not_of(" \t\r");
      const auto e = s.find_last_not_of(" \t\r");
      return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
    };
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw UsageError(fmt::format("{}:{}: expected key=value", path, lineno));
    }
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key.empty() || key == "config") {
      throw UsageError(fmt::format("{}:{}: invalid key", path, lineno));
    }
    injected.push_back("--" + key + "=" + value);
  }
  std::vector<std::string> out;
  std::size_t insert_at = 0;
  if (!args.empty() && args[0].rfind("-", 0) != 0) insert_at = 1;
  out.insert(out.end(), args.begin(), args.begin() + static_cast<std::ptrdiff_t>(insert_at));
  out.insert(out.end(), injected.begin(), injected.end());
  out.insert(out.end(), args.begin() + static_cast<std::ptrdiff_t>(insert_at), args.end());
  return out;
}

int cmd_spectrum(const ModelOptions& mo, const OutputOptions& oo, int n_min, int n_max,
                 bool physical, bool oracle, const std::string& geometry, double extent,
                 int points, std::ostream& out, std::ostream& err) {
  const ModelConfig cfg = build_model(mo);
  if (n_min < 0 || n_max < n_min) throw UsageError("need 0 <= --n-min <= --n-max");
  const auto ocfg = make_oracle(oracle, geometry, extent, points, cfg.params.alpha);
  const SpectrumRun run = compute_spectrum(cfg, n_min, n_max, physical, ocfg, Exec::parallel);
  for (const auto& e : run.errors) err << "warning: " << e << '\n';
  Sink sink(oo.output, out);
  write_run(sink.stream(), oo.format, run);
  return kOk;
}

int cmd_wavefunction(const ModelOptions& mo, const OutputOptions& oo, int n, int root,
                     const std::string& mode_name, const std::string& geometry, int points,
                     double extent, const std::string& sidecar_path, bool raw, std::ostream& out,
                     std::ostream& err) {
  const ModelConfig cfg = build_model(mo);
  const auto mode = wave_mode_from_string(mode_name);
  if (!mode) throw UsageError("unknown --mode " + mode_name);
  if (n < 0) throw UsageError("--n must be non-negative");
  if (points < 2) throw UsageError("--points must be at least 2");

  std::vector<BoundState> states;
  try {
    states = cfg.params.is_complex() ? solve_energy_complex(cfg, n, default_pt_seeds(cfg))
                                     : solve_energy(cfg, n);
  } catch (const DegenerateShift& e) {
    err << "no bound state: " << e.what() << '\n';
    return kNoState;
  }
  const BoundState* chosen = nullptr;
  if (root >= 0) {
    if (root < static_cast<int>(states.size())) chosen = &states[static_cast<std::size_t>(root)];
  } else {
    for (const auto& s : states) {
      if (s.flags.all()) {
        chosen = &s;
        break;
      }
    }
    if (!chosen && !states.empty()) chosen = &states.front();
  }
  if (!chosen) {
    err << "no bound state found at n = " << n << '\n';
    return kNoState;
  }

  const double alpha = cfg.params.alpha;
  const Grid grid = geometry == "half" ? half_line_grid(alpha, points, extent > 0 ? extent : 30.0)
                                       : full_line_grid(alpha, points, extent > 0 ? extent : 15.0);
  SpinorSet set = sample_spinor(cfg, *chosen, grid, *mode);
  if (set.samples.size() >= 50) set.residual_report = ode_residual(set);
  bool normalized = false;
  std::string note;
  if (!raw) {
    try {
      const ResidualReport report = set.residual_report;
      set = normalize(set);
      set.residual_report = report;
      normalized = true;
    } catch (const NonNormalizable& e) {
      note = std::string("NonNormalizable: ") + e.what();
      err << "warning: " << note << '\n';
    }
  }

  Sink sink(oo.output, out);
  write_samples_csv(sink.stream(), set);
  std::string side = sidecar_path;
  if (side.empty() && !oo.output.empty() && oo.output != "-") side = oo.output + ".json";
  if (!side.empty()) {
    Sink s(side, out);
    write_sidecar_json(s.stream(), set, normalized, note);
  }
  return kOk;
}

int cmd_verify(const ModelOptions& mo, const OutputOptions& oo,
               const std::vector<std::string>& suites, bool inject_fault, std::uint64_t seed,
               int oracle_points, double oracle_extent, int wave_points, std::ostream& out) {
  for (const auto& s : suites) {
    if (!is_suite(s)) throw UsageError("unknown suite " + s);
  }
  VerifyOptions opts;
  opts.model = build_model(mo);
  opts.seed = seed;
  opts.inject_fault = inject_fault;
  opts.oracle_points = oracle_points;
  opts.oracle_extent = oracle_extent;
  opts.wave_points = wave_points;
  const auto results = run_verification(opts, suites);

  Sink sink(oo.output, out);
  std::ostream& os = sink.stream();
  if (oo.format == "csv") {
    os << "check,status,max_residual,tolerance,detail\n";
    for (const auto& r : results) {
      std::string detail = r.detail;
      std::replace(detail.begin(), detail.end(), '"', '\'');
      os << r.check << ',' << (r.passed ? "PASS" : "FAIL") << ',' << format_double(r.max_residual)
         << ',' << format_double(r.tolerance) << ",\"" << detail << "\"\n";
    }
  } else {
    JsonWriter w(os);
    w.begin_array();
    for (const auto& r : results) {
      w.begin_object();
      w.field("check", r.check);
      w.field("status", r.passed ? "PASS" : "FAIL");
      w.field("max_residual", r.max_residual);
      w.field("tolerance", r.tolerance);
      w.field("detail", r.detail);
      w.end_object();
    }
    w.end_array();
  }
  const bool all = std::all_of(results.begin(), results.end(), [](const auto& r) { return r.passed; });
  return all ? kOk : kVerifyFailed;
}

int cmd_sweep(const ModelOptions& mo, const OutputOptions& oo, const std::string& param,
              double from, double to, int steps, int n_max, bool physical, std::ostream& out,
              std::ostream& err) {
  static const std::vector<std::string> declared = {"v1", "v2", "alpha", "mass", "c"};
  if (std::find(declared.begin(), declared.end(), param) == declared.end()) {
    throw UsageError("cannot sweep undeclared parameter " + param);
  }
  if (steps < 1) throw UsageError("--steps must be positive");
  if (n_max < 0) throw UsageError("--n-max must be non-negative");
  build_model(mo);  // reject bad base flags up front

  struct Block {
    double value = 0.0;
    SpectrumRun run;
  };
  std::vector<Block> blocks(static_cast<std::size_t>(steps));
#pragma omp parallel for schedule(dynamic)
  for (int i = 0; i < steps; ++i) {
    Block& b = blocks[static_cast<std::size_t>(i)];
    b.value = steps == 1 ? from : from + (to - from) * i / (steps - 1);
    if (i == steps - 1 && steps > 1) b.value = to;
    ModelOptions m = mo;
    if (param == "v1") m.v1 = b.value;
    if (param == "v2") m.v2 = b.value;
    if (param == "alpha") m.alpha = b.value;
    if (param == "mass") m.mass = b.value;
    if (param == "c") m.c = b.value;
    try {
      const ModelConfig cfg = build_model(m);
      b.run = compute_spectrum(cfg, 0, n_max, physical, std::nullopt, Exec::serial);
    } catch (const std::exception& e) {
      b.run.errors.push_back(e.what());
    }
  }

  Sink sink(oo.output, out);
  std::ostream& os = sink.stream();
  if (oo.format == "csv") {
    os << spectrum_csv_header({"param", "value"}) << '\n';
    for (const auto& b : blocks) {
      for (const auto& r : b.run.records) write_record_csv(os, r, {param, format_double(b.value)});
      for (const auto& e : b.run.errors) err << param << '=' << format_double(b.value) << ": " << e << '\n';
    }
    return kOk;
  }
  JsonWriter w(os);
  w.begin_array();
  for (const auto& b : blocks) {
    w.begin_object();
    w.field("param", param);
    w.field("value", b.value);
    w.key("records");
    write_records_json(w, b.run.records);
    w.key("errors").begin_array();
    for (const auto& e : b.run.errors) w.value(e);
    w.end_array();
    w.end_object();
  }
  w.end_array();
  return kOk;
}

int cmd_special(const OutputOptions& oo, const std::string& which, int n_max, std::ostream& out) {
  std::vector<std::pair<std::string, ModelConfig>> cases;
  if (which == "eckart" || which == "all") cases.emplace_back("eckart", eckart_default());
  if (which == "pt" || which == "all") cases.emplace_back("pt", pt_default());
  if (which == "reflectionless" || which == "all") {
    cases.emplace_back("reflectionless", reflectionless_default());
  }
  if (cases.empty()) throw UsageError("unknown --case " + which);
  if (n_max < 0) throw UsageError("--n-max must be non-negative");

  std::vector<SpectrumRun> runs;
  for (const auto& [name, cfg] : cases) {
    runs.push_back(compute_spectrum(cfg, 0, n_max, false, std::nullopt, Exec::parallel));
  }
  Sink sink(oo.output, out);
  std::ostream& os = sink.stream();
  if (oo.format == "csv") {
    os << spectrum_csv_header({"case"}) << '\n';
    for (std::size_t i = 0; i < cases.size(); ++i) {
      for (const auto& r : runs[i].records) write_record_csv(os, r, {cases[i].first});
    }
    return kOk;
  }
  JsonWriter w(os);
  w.begin_array();
  for (std::size_t i = 0; i < cases.size(); ++i) {
    const ModelConfig& cfg = cases[i].second;
    w.begin_object();
    w.field("case", cases[i].first);
    w.field("variant", to_string(cfg.params.variant));
    w.field("v1", cfg.params.v1);
    w.field("v2", cfg.params.v2);
    w.field("alpha", cfg.params.alpha);
    w.field("mass", cfg.mass);
    w.key("records");
    write_records_json(w, runs[i].records);
    w.key("errors").begin_array();
    for (const auto& e : runs[i].errors) w.value(e);
    w.end_array();
    w.end_object();
  }
  w.end_array();
  return kOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& raw_args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Dirac Rosen-Morse bound states under spin and pseudospin symmetry", "dirac-rm"};
  app.require_subcommand(1);
  app.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);

  ModelOptions mo;
  OutputOptions oo;

  auto* spectrum = app.add_subcommand("spectrum", "bound-state energies");
  add_model_options(spectrum, mo);
  add_output_options(spectrum, oo);
  add_config_option(spectrum);
  int n_min = 0;
  int n_max = 3;
  bool physical = false;
  bool oracle = false;
  std::string geometry = "full";
  double oracle_extent = 15.0;
  int oracle_points = 6000;
  spectrum->add_option("--n-min", n_min, "lowest n");
  spectrum->add_option("--n-max", n_max, "highest n");
  spectrum->add_flag("--physical", physical, "keep only roots with every validity flag set");
  spectrum->add_flag("--oracle", oracle, "attach finite-difference oracle energies");
  spectrum->add_option("--geometry", geometry, "oracle geometry: full or half")
      ->check(CLI::IsMember({"full", "half"}));
  spectrum->add_option("--oracle-extent", oracle_extent, "L or r_max in units of 1/alpha");
  spectrum->add_option("--oracle-points", oracle_points, "interior grid points");

  auto* wave = app.add_subcommand("wavefunction", "sampled spinor components");
  add_model_options(wave, mo);
  add_output_options(wave, oo, false);
  add_config_option(wave);
  int wave_n = 0;
  int root = -1;
  std::string mode = "corrected";
  std::string wave_geometry = "full";
  int wave_points = 2001;
  double wave_extent = 0.0;
  std::string sidecar;
  bool raw = false;
  wave->add_option("--n", wave_n, "quantum number");
  wave->add_option("--root", root, "root index at this n (default: first physical root)");
  wave->add_option("--mode", mode, "corrected or paper_literal");
  wave->add_option("--geometry", wave_geometry, "full or half")
      ->check(CLI::IsMember({"full", "half"}));
  wave->add_option("--points", wave_points, "grid points");
  wave->add_option("--extent", wave_extent, "grid extent in units of 1/alpha (15 full, 30 half)");
  wave->add_option("--sidecar", sidecar, "JSON sidecar path (default: <output>.json)");
  wave->add_flag("--raw", raw, "skip normalization");

  auto* verify = app.add_subcommand("verify", "run the verification suites");
  add_model_options(verify, mo);
  add_output_options(verify, oo);
  add_config_option(verify);
  std::vector<std::string> suites;
  bool inject_fault = false;
  std::uint64_t seed = 7;
  int verify_oracle_points = 6000;
  double verify_oracle_extent = 15.0;
  int verify_wave_points = 2001;
  verify->add_option("--suite", suites, "run only the named suites")
      ->multi_option_policy(CLI::MultiOptionPolicy::TakeAll);
  verify->add_flag("--inject-fault", inject_fault, "perturb Q1 in the riccati suite");
  verify->add_option("--seed", seed, "seed for the random parameter sets");
  verify->add_option("--oracle-points", verify_oracle_points, "oracle interior points");
  verify->add_option("--oracle-extent", verify_oracle_extent, "oracle half-width in 1/alpha");
  verify->add_option("--wave-points", verify_wave_points, "wavefunction grid points");

  auto* sweep = app.add_subcommand("sweep", "spectrum over a linear parameter range");
  add_model_options(sweep, mo);
  add_output_options(sweep, oo);
  add_config_option(sweep);
  std::string param;
  double from = 0.0;
  double to = 1.0;
  int steps = 11;
  int sweep_n_max = 3;
  bool sweep_physical = false;
  sweep->add_option("--param", param, "v1, v2, alpha, mass or c")->required();
  sweep->add_option("--from", from, "first value");
  sweep->add_option("--to", to, "last value");
  sweep->add_option("--steps", steps, "number of points");
  sweep->add_option("--n-max", sweep_n_max, "highest n");
  sweep->add_flag("--physical", sweep_physical, "keep only roots with every validity flag set");

  auto* special = app.add_subcommand("special", "spectra of the shipped special-case sets");
  add_output_options(special, oo);
  add_config_option(special);
  std::string which = "all";
  int special_n_max = 3;
  special->add_option("--case", which, "eckart, pt, reflectionless or all");
  special->add_option("--n-max", special_n_max, "highest n");

  try {
    std::vector<std::string> args = merge_config(raw_args);
    std::reverse(args.begin(), args.end());
    app.parse(args);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  try {
    if (spectrum->parsed()) {
      return cmd_spectrum(mo, oo, n_min, n_max, physical, oracle, geometry, oracle_extent,
                          oracle_points, out, err);
    }
    if (wave->parsed()) {
      return cmd_wavefunction(mo, oo, wave_n, root, mode, wave_geometry, wave_points,
                              wave_extent, sidecar, raw, out, err);
    }
    if (verify->parsed()) {
      return cmd_verify(mo, oo, suites, inject_fault, seed, verify_oracle_points,
                        verify_oracle_extent, verify_wave_points, out);
    }
    if (sweep->parsed()) {
      return cmd_sweep(mo, oo, param, from, to, steps, sweep_n_max, sweep_physical, out, err);
    }
    if (special->parsed()) return cmd_special(oo, which, special_n_max, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const NoBoundState& e) {
    err << "error: " << e.what() << '\n';
    return kNoState;
  } catch (const Error& e) {
    err << "numerical failure (" << e.kind() << "): " << e.what() << '\n';
    return kNumerical;
  }
  return kUsage;
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run_cli(args, out, err);
}

}  // namespace dirac_rm::cli
