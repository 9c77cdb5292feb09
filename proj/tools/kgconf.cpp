// kgconf: spectra, verification suites and conformal-map evaluation.
//
// Exit codes: 0 pass, 1 verification failure, 2 configuration error,
// 3 numerical domain error.

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "kgconf/harness.hpp"
#include "kgconf/report_io.hpp"

namespace {

using namespace kgconf;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitConfig = 2;
constexpr int kExitDomain = 3;
constexpr int kMaxQuantum = 50;

struct Common {
  double hbar = 1.0;
  double c = 1.0;
  double m0 = 1.0;
  std::string output;
  std::string format = "csv";

  UnitSystem units() const {
    UnitSystem u{hbar, c, m0};
    u.validate();
    return u;
  }
};

void emit(const Common& common, const std::string& content) {
  if (common.output.empty() || common.output == "-")
    std::cout << content;
  else
    write_atomic(common.output, content);
}

// ---------------------------------------------------------------- spectrum

struct SpectrumArgs {
  std::string system;
  double omega = 1.0;
  double alpha = coulomb::Model{}.alpha;
  std::string n = "0..3";
  std::string states = "(0,0);(1,0);(0,1)";
  std::string branch = "sommerfeld";
};

int cmd_spectrum(const Common& common, const SpectrumArgs& args) {
  const UnitSystem units = common.units();
  const Format format = parse_format(common.format);
  Table table;
  if (args.system == "oscillator") {
    const auto model = oscillator::Model::make(args.omega, units);
    const auto [lo, hi] = parse_range(args.n);
    if (lo < 0 || hi > kMaxQuantum)
      throw ConfigError("oscillator n must lie in [0, " + std::to_string(kMaxQuantum) + "]");
    table.columns = {"n", "degeneracy", "E"};
    for (int n = lo; n <= hi; ++n)
      table.add_row({(long long)n, (long long)((n + 1) * (n + 2) / 2),
                     oscillator::energy(model, n)});
  } else if (args.system == "coulomb") {
    if (!(args.alpha > 0.0))
      throw ConfigError("alpha must be > 0: at alpha = 0 the map scale b = hbar c (1 - eta_0)/"
                        "(alpha E) diverges");
    const auto model = coulomb::Model::make(args.alpha, units);
    const Branch branch = parse_branch(args.branch);
    table.columns = {"n", "l", "branch", "eta_l", "E", "binding", "r_nl", "a", "b"};
    for (const auto& s : parse_states(args.states, branch)) {
      if (s.n > kMaxQuantum || s.l > kMaxQuantum)
        throw ConfigError("coulomb n and l must be <= " + std::to_string(kMaxQuantum));
      const double e = coulomb::energy(model, s);
      const auto mc = coulomb::map_coefficients(model, s);
      table.add_row({(long long)s.n, (long long)s.l, std::string(to_string(branch)),
                     coulomb::eta(model, s.l, branch), e, units.rest_energy() - e,
                     coulomb::radial_scale(model, s), mc.a, mc.b});
    }
  } else {
    throw ConfigError("unknown system '" + args.system + "' (oscillator or coulomb)");
  }
  emit(common, render(table, format));
  return kExitPass;
}

// ------------------------------------------------------------------ verify

struct VerifyArgs {
  std::string suite;
  std::string mode = "exact";
  double step = 1e-3;
  int levels = 2;
  double tolerance = 0.0;
  int nmax = 6;
  double omega = 1.0;
  double alpha = coulomb::Model{}.alpha;
  std::vector<std::string> states;
  std::string branch = "sommerfeld";
  std::uint64_t seed = SuiteParams{}.seed;
  int fields = SuiteParams{}.random_fields;
  int shells = SuiteParams{}.shells;
  int directions = SuiteParams{}.directions;
  bool serial = false;
  bool timing = false;
};

int cmd_verify(const Common& common, const VerifyArgs& args) {
  SuiteParams params;
  params.units = common.units();
  params.nmax = args.nmax;
  params.omega = args.omega;
  params.alpha = args.alpha;
  params.seed = args.seed;
  params.random_fields = args.fields;
  params.shells = args.shells;
  params.directions = args.directions;
  params.tolerance = args.tolerance;
  params.exec = args.serial ? Execution::serial : Execution::parallel;
  const Branch branch = parse_branch(args.branch);
  if (!args.states.empty()) {
    params.coulomb_states.clear();
    for (const auto& s : args.states) params.coulomb_states.push_back(parse_state(s, branch));
  } else if (branch != Branch::sommerfeld) {
    for (auto& s : params.coulomb_states) s.branch = branch;
  }

  const DiffMode mode = parse_diff_mode(args.mode);
  const DiffConfig cfg =
      mode == DiffMode::exact ? DiffConfig::exact() : DiffConfig::stencil(args.step, args.levels);
  const ResidualReport report = run_suite(args.suite, params, cfg);
  emit(common, report_to_json(report, args.timing));
  return report.pass() ? kExitPass : kExitFail;
}

// --------------------------------------------------------------------- map

struct MapArgs {
  std::string system = "oscillator";
  double omega = 1.0;
  int n = 0;
  double alpha = coulomb::Model{}.alpha;
  std::string state = "0,0";
  std::string branch = "sommerfeld";
  double a = 0.0;
  double b = std::numeric_limits<double>::infinity();
  double lambda = 2.0;
  std::optional<double> energy;
  std::string points = "-";
};

ConformalMap build_map(const UnitSystem& units, const MapArgs& args) {
  if (args.system == "oscillator") {
    const auto model = oscillator::Model::make(args.omega, units);
    if (args.n < 0 || args.n > kMaxQuantum) throw ConfigError("n must lie in [0, 50]");
    return oscillator::conformal_map(model,
                                     args.energy.value_or(oscillator::energy(model, args.n)));
  }
  if (args.system == "coulomb") {
    if (!(args.alpha > 0.0))
      throw ConfigError("alpha must be > 0: at alpha = 0 the map scale b diverges");
    const auto model = coulomb::Model::make(args.alpha, units);
    const auto state = parse_state(args.state, parse_branch(args.branch));
    ConformalMap map = coulomb::conformal_map(model, state);
    if (args.energy) map = ConformalMap::make(map.a, map.b, map.lambda, *args.energy, units);
    return map;
  }
  if (args.system == "custom")
    return ConformalMap::make(args.a, args.b, args.lambda, args.energy.value_or(1.0), units);
  throw ConfigError("unknown system '" + args.system + "' (oscillator, coulomb or custom)");
}

int cmd_map(const Common& common, const MapArgs& args) {
  const UnitSystem units = common.units();
  const Format format = parse_format(common.format);
  const ConformalMap map = build_map(units, args);

  std::vector<SpaceTimePoint> points;
  if (args.points == "-") {
    points = parse_points(std::cin);
  } else {
    std::ifstream in(args.points);
    if (!in) throw ConfigError("cannot open points file '" + args.points + "'");
    points = parse_points(in);
  }

  Table table;
  table.columns = {"x1", "x2", "x3", "t", "z1", "z2", "z3", "re_s", "im_s", "roundtrip_err"};
  for (const auto& p : points) {
    const ComplexPoint q = forward(map, p);
    const SpaceTimePoint back = inverse(map, q);
    double err = std::abs(back.t - p.t);
    for (int i = 0; i < 3; ++i) err = std::max(err, std::abs(back.x[i] - p.x[i]));
    table.add_row({p.x[0], p.x[1], p.x[2], p.t, q.z[0], q.z[1], q.z[2], q.s.real(),
                   q.s.imag(), err});
  }
  emit(common, render(table, format));
  return kExitPass;
}

void add_common(CLI::App& sub, Common& common, bool with_format) {
  sub.add_option("--output,-o", common.output, "Output path ('-' or empty for stdout)");
  if (with_format)
    sub.add_option("--format", common.format, "Output format")
        ->check(CLI::IsMember({"json", "csv"}))
        ->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Klein-Gordon conformal-map spectra and verification suites"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_config("--config", "", "TOML/INI file supplying option values");

  Common common;
  app.add_option("--hbar", common.hbar, "hbar in the chosen units")->capture_default_str();
  app.add_option("--c", common.c, "Speed of light in the chosen units")->capture_default_str();
  app.add_option("--m0", common.m0, "Rest mass in the chosen units")->capture_default_str();

  SpectrumArgs sa;
  auto* spectrum = app.add_subcommand("spectrum", "Tabulate energy levels");
  spectrum->add_option("--system", sa.system, "oscillator or coulomb")->required();
  spectrum->add_option("--omega", sa.omega, "Oscillator Omega")->capture_default_str();
  spectrum->add_option("--n", sa.n, "Oscillator levels, 'a..b' or 'a'")->capture_default_str();
  spectrum->add_option("--alpha", sa.alpha, "Coupling alpha")->capture_default_str();
  spectrum->add_option("--states", sa.states, "Coulomb states '(n,l);(n,l)'")
      ->capture_default_str();
  spectrum->add_option("--branch", sa.branch, "sommerfeld or hydrino")->capture_default_str();
  add_common(*spectrum, common, true);

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "Run a verification suite, write a JSON report");
  verify->add_option("--suite", va.suite, "Suite name")
      ->required()
      ->check(CLI::IsMember(suite_names()));
  verify->add_option("--mode", va.mode, "exact or stencil")
      ->envname("KGCONF_MODE")
      ->capture_default_str();
  verify->add_option("--step", va.step, "Stencil base step")->capture_default_str();
  verify->add_option("--levels", va.levels, "Richardson levels")->capture_default_str();
  verify->add_option("--tolerance", va.tolerance, "Override tolerance (0: mode default)")
      ->envname("KGCONF_TOLERANCE")
      ->capture_default_str();
  verify->add_option("--nmax", va.nmax, "Highest oscillator level")->capture_default_str();
  verify->add_option("--omega", va.omega, "Oscillator Omega")->capture_default_str();
  verify->add_option("--alpha", va.alpha, "Coupling alpha")->capture_default_str();
  verify->add_option("--state", va.states, "Coulomb state 'n,l[,k]' (repeatable)");
  verify->add_option("--branch", va.branch, "sommerfeld or hydrino")->capture_default_str();
  verify->add_option("--seed", va.seed, "Seed for random test fields")->capture_default_str();
  verify->add_option("--fields", va.fields, "Number of random test fields")
      ->capture_default_str();
  verify->add_option("--shells", va.shells, "Radial shells per grid")->capture_default_str();
  verify->add_option("--directions", va.directions, "Directions per shell")
      ->capture_default_str();
  verify->add_flag("--serial", va.serial, "Use the serial reference kernels");
  verify->add_flag("--timing", va.timing, "Record wall time in the report");
  add_common(*verify, common, false);

  MapArgs ma;
  auto* map = app.add_subcommand("map", "Evaluate the conformal map on a points file");
  map->add_option("--system", ma.system, "oscillator, coulomb or custom")
      ->capture_default_str();
  map->add_option("--omega", ma.omega, "Oscillator Omega")->capture_default_str();
  map->add_option("--n", ma.n, "Oscillator level fixing E")->capture_default_str();
  map->add_option("--alpha", ma.alpha, "Coupling alpha")->capture_default_str();
  map->add_option("--state", ma.state, "Coulomb state 'n,l'")->capture_default_str();
  map->add_option("--branch", ma.branch, "sommerfeld or hydrino")->capture_default_str();
  map->add_option("--a", ma.a, "Custom map: a")->capture_default_str();
  map->add_option("--b", ma.b, "Custom map: b (inf disables the power term)");
  map->add_option("--lambda", ma.lambda, "Custom map: lambda")->capture_default_str();
  map->add_option("--energy", ma.energy, "Energy E in the map (overrides the system value)");
  map->add_option("--points", ma.points, "Points file, one 'x1 x2 x3 t' per line ('-': stdin)")
      ->capture_default_str();
  add_common(*map, common, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitPass : kExitConfig;
  }

  try {
    if (*spectrum) return cmd_spectrum(common, sa);
    if (*verify) return cmd_verify(common, va);
    return cmd_map(common, ma);
  } catch (const ConfigError& e) {
    std::cerr << "kgconf: configuration error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const Error& e) {
    std::cerr << "kgconf: numerical domain error: " << e.what() << "\n";
    return kExitDomain;
  } catch (const std::exception& e) {
    std::cerr << "kgconf: " << e.what() << "\n";
    return kExitConfig;
  }
}
