#include <algorithm>
#include <cmath>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "magicpol/atomdata.hpp"
#include "magicpol/constants.hpp"
#include "magicpol/errors.hpp"
#include "magicpol/heating.hpp"
#include "magicpol/matcher.hpp"
#include "magicpol/polarizability.hpp"
#include "magicpol/units.hpp"
#include "output.hpp"

namespace {

using namespace magicpol;
namespace out = magicpol::output;

constexpr double kRb87AMU = 86.909180531;

struct RunConfig {
  std::string levels_path;
  std::string dipoles_path;
  std::string format = "table";
  std::string omega_unit = "au";
  int n_max = 23;
  double core_alpha = 9.1;
  double core_unc = 0.05;
  std::vector<std::string> tail_specs;  // "VALUE" or "LABEL=VALUE"
  double exclusion_halfwidth = 1e-6;
};

struct Loaded {
  LevelTable levels;
  DipoleTable dipoles;
};

Loaded load_tables(const RunConfig& cfg) {
  if (cfg.levels_path.empty())
    throw UsageError("no levels file: pass --levels PATH (or set it in the "
                     "config file / MAGICPOL_LEVELS)");
  if (cfg.dipoles_path.empty())
    throw UsageError("no dipoles file: pass --dipoles PATH (or set it in the "
                     "config file / MAGICPOL_DIPOLES)");
  LevelTable levels = LevelTable::load(cfg.levels_path);
  DipoleTable dipoles = DipoleTable::load(cfg.dipoles_path, levels);
  return {std::move(levels), std::move(dipoles)};
}

double parse_number(const std::string& s, const std::string& what);

double tail_for(const RunConfig& cfg, const std::string& label) {
  // label-specific entries beat plain values; within a kind the last wins
  double value = 0.0;
  bool have_specific = false;
  for (const auto& spec : cfg.tail_specs) {
    auto eq = spec.find('=');
    if (eq == std::string::npos) {
      if (!have_specific)
        value = parse_number(spec, "--tail-alpha");
    } else if (spec.substr(0, eq) == label) {
      value = parse_number(spec.substr(eq + 1), "--tail-alpha");
      have_specific = true;
    }
  }
  return value;
}

PolarizabilityModel model_for(const RunConfig& cfg, const Loaded& data,
                              const std::string& label) {
  ModelConfig mc;
  mc.n_max = cfg.n_max;
  mc.core_alpha = cfg.core_alpha;
  mc.core_alpha_rel_unc = cfg.core_unc;
  mc.tail_alpha = tail_for(cfg, label);
  mc.exclusion_halfwidth = cfg.exclusion_halfwidth;
  return build_model(data.levels.require(label), data.levels, data.dipoles,
                     mc, [](const std::string& w) {
                       std::cerr << "warning: " << w << '\n';
                     });
}

double parse_number(const std::string& s, const std::string& what) {
  try {
    std::size_t pos = 0;
    double v = std::stod(s, &pos);
    if (pos != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw UsageError("cannot parse " + what + " '" + s + "'");
  }
}

/// "A:B" or "A" in the configured omega unit -> ordered a.u. range.
OmegaRange parse_omega_range(const RunConfig& cfg, const std::string& text) {
  OmegaUnit unit = parse_omega_unit(cfg.omega_unit);
  auto colon = text.find(':');
  double a, b;
  if (colon == std::string::npos) {
    a = b = parse_number(text, "omega");
  } else {
    a = parse_number(text.substr(0, colon), "omega range start");
    b = parse_number(text.substr(colon + 1), "omega range end");
  }
  a = convert_omega(a, unit, OmegaUnit::Au);
  b = convert_omega(b, unit, OmegaUnit::Au);
  if (a > b) std::swap(a, b);  // nm input inverts the ordering
  return {a, b};
}

double parse_omega_value(const RunConfig& cfg, const std::string& text) {
  OmegaUnit unit = parse_omega_unit(cfg.omega_unit);
  return convert_omega(parse_number(text, "omega"), unit, OmegaUnit::Au);
}

/// Default search window for magic/zero: between the ground model's two
/// lowest resonances, trimmed by 10x the exclusion half-width.
OmegaRange default_match_range(const PolarizabilityModel& ground) {
  auto res = list_resonances(ground);
  if (res.size() < 2)
    throw UsageError("model has fewer than two resonances; pass an explicit "
                     "--omega range");
  double pad = 10.0 * ground.exclusion_halfwidth;
  return {res[0].omega_au + pad, res[1].omega_au - pad};
}

out::Cell lambda_cell(double omega_au) {
  if (omega_au <= 0.0) return out::Cell::none();
  return out::Cell::number(omega_au_to_lambda_nm(omega_au));
}

void common_params(out::Document& doc, const RunConfig& cfg) {
  doc.params.emplace_back("levels", cfg.levels_path);
  doc.params.emplace_back("dipoles", cfg.dipoles_path);
  doc.params.emplace_back("n_max", std::to_string(cfg.n_max));
  doc.params.emplace_back("core_alpha", out::format_number(cfg.core_alpha));
  doc.params.emplace_back("core_unc", out::format_number(cfg.core_unc));
  doc.params.emplace_back("exclusion_halfwidth",
                          out::format_number(cfg.exclusion_halfwidth));
}

void emit(const out::Document& doc, const RunConfig& cfg) {
  out::emit(doc, out::parse_format(cfg.format), std::cout);
}

// ---------------------------------------------------------------- scan

struct ScanArgs {
  std::string state;
  std::string omega;
  double step = 0.0;
  int count = 0;
  bool force_excluded = false;
};

void cmd_scan(const RunConfig& cfg, const ScanArgs& args) {
  Loaded data = load_tables(cfg);
  PolarizabilityModel model = model_for(cfg, data, args.state);
  OmegaRange range = parse_omega_range(cfg, args.omega);

  std::vector<double> grid;
  double width = range.hi - range.lo;
  if (width == 0.0) {
    grid.push_back(range.lo);
  } else if (args.count > 0 && args.step > 0.0) {
    throw UsageError("pass either --step or --count, not both");
  } else if (args.count == 1) {
    grid.push_back(range.lo);
  } else if (args.count > 1) {
    for (int i = 0; i < args.count; ++i)
      grid.push_back(range.lo + width * i / (args.count - 1));
  } else if (args.step > 0.0) {
    for (double w = range.lo; w <= range.hi + 1e-9 * args.step;
         w += args.step)
      grid.push_back(std::min(w, range.hi));
  } else {
    throw UsageError("a non-trivial range needs --step or --count");
  }

  out::Document doc;
  doc.command = "scan";
  doc.params.emplace_back("state", args.state);
  common_params(doc, cfg);
  doc.params.emplace_back("tail_alpha",
                          out::format_number(tail_for(cfg, args.state)));
  doc.columns = {"omega_au", "lambda_nm", "alpha_au", "alpha_unc_au",
                 "excluded"};
  EvalOptions allow;
  allow.allow_inside_exclusion = true;
  for (double w : grid) {
    std::vector<out::Cell> row;
    row.push_back(out::Cell::number(w));
    row.push_back(lambda_cell(w));
    try {
      PolarizabilityResult res = total_alpha(model, w, allow);
      if (res.excluded && !args.force_excluded) {
        row.push_back(out::Cell::none());
        row.push_back(out::Cell::none());
        row.push_back(out::Cell::boolean(true));
      } else {
        row.push_back(out::Cell::number(res.total));
        row.push_back(out::Cell::number(res.uncertainty));
        row.push_back(out::Cell::boolean(res.excluded));
      }
    } catch (const DomainError&) {  // exact pole
      row.push_back(out::Cell::none());
      row.push_back(out::Cell::none());
      row.push_back(out::Cell::boolean(true));
    }
    doc.rows.push_back(std::move(row));
  }
  emit(doc, cfg);
}

// ---------------------------------------------------------------- magic/zero

struct MagicArgs {
  std::string ground;
  std::string rydberg;
  std::string omega;
  bool zero = false;
};

void cmd_magic(const RunConfig& cfg, const MagicArgs& args) {
  Loaded data = load_tables(cfg);
  PolarizabilityModel ground = model_for(cfg, data, args.ground);
  OmegaRange range = args.omega.empty() ? default_match_range(ground)
                                        : parse_omega_range(cfg, args.omega);

  std::vector<MagicPoint> points;
  if (args.zero) {
    if (!args.rydberg.empty())
      throw UsageError("--zero and --rydberg are mutually exclusive");
    points = find_zero_crossings(ground, range);
  } else {
    if (args.rydberg.empty())
      throw UsageError("pass --rydberg LABEL or --zero");
    PolarizabilityModel rydberg = model_for(cfg, data, args.rydberg);
    points = find_magic_wavelength(ground, rydberg, range);
  }

  out::Document doc;
  doc.command = args.zero ? "zero" : "magic";
  doc.params.emplace_back("ground", args.ground);
  doc.params.emplace_back("rydberg", args.zero ? "zero" : args.rydberg);
  doc.params.emplace_back("omega_range",
                          out::format_number(range.lo) + ":" +
                              out::format_number(range.hi) + " au");
  common_params(doc, cfg);
  doc.columns = {"omega_au",     "lambda_nm",  "alpha_at_match_au",
                 "residual_au",  "bracket_lo", "bracket_hi",
                 "ground",       "reference"};
  for (const auto& p : points) {
    std::string ref = p.rydberg ? p.rydberg->label
                                : (p.reference == MatchReference::Zero
                                       ? "zero"
                                       : "free-electron");
    doc.rows.push_back({out::Cell::number(p.omega_au),
                        out::Cell::number(p.lambda_nm),
                        out::Cell::number(p.alpha_at_match),
                        out::Cell::number(p.residual),
                        out::Cell::number(p.bracket_lo),
                        out::Cell::number(p.bracket_hi),
                        out::Cell::str(p.ground.label), out::Cell::str(ref)});
  }
  if (points.empty())
    doc.notes.push_back("no matching point in the searched range");
  emit(doc, cfg);
}

// ---------------------------------------------------------------- breakdown

void cmd_breakdown(const RunConfig& cfg, const std::string& state,
                   const std::string& at) {
  Loaded data = load_tables(cfg);
  PolarizabilityModel model = model_for(cfg, data, state);
  double w = parse_omega_value(cfg, at);
  PolarizabilityResult res = total_alpha(model, w);

  out::Document doc;
  doc.command = "breakdown";
  doc.params.emplace_back("state", state);
  doc.params.emplace_back("omega_au", out::format_number(w));
  if (w > 0.0)
    doc.params.emplace_back("lambda_nm",
                            out::format_number(omega_au_to_lambda_nm(w)));
  common_params(doc, cfg);
  doc.params.emplace_back("tail_alpha",
                          out::format_number(tail_for(cfg, state)));
  doc.columns = {"np", "d_au", "delta_e_au", "denominator_au2",
                 "alpha_contr_au", "alpha_acc_au"};
  for (const auto& t : res.terms) {
    doc.rows.push_back({out::Cell::str(t.intermediate.label),
                        out::Cell::number(t.d_value),
                        out::Cell::number(t.delta_e),
                        out::Cell::number(t.denominator),
                        out::Cell::number(t.contribution),
                        out::Cell::number(t.accumulated)});
  }
  doc.notes.push_back("valence = " + out::format_number(res.valence) +
                      ", core = " + out::format_number(res.core) +
                      ", tail = " + out::format_number(res.tail) +
                      ", total = " + out::format_number(res.total) + " +- " +
                      out::format_number(res.uncertainty) + " a0^3");
  emit(doc, cfg);
}

// ---------------------------------------------------------------- coincide

void cmd_coincide(const RunConfig& cfg, const std::string& pair,
                  double tolerance, bool all_pairs) {
  auto colon = pair.find(':');
  if (colon == std::string::npos || colon == 0 || colon + 1 == pair.size())
    throw UsageError("malformed --pair '" + pair +
                     "' (expected LABEL:LABEL, e.g. 5s1/2:5p3/2)");
  Loaded data = load_tables(cfg);
  const Level& a = data.levels.require(pair.substr(0, colon));
  const Level& b = data.levels.require(pair.substr(colon + 1));
  auto found = find_coincidences(data.levels, a, b, tolerance, !all_pairs);

  out::Document doc;
  doc.command = "coincide";
  doc.params.emplace_back("pair", pair);
  doc.params.emplace_back("tolerance_cm1", out::format_number(tolerance));
  doc.params.emplace_back("dipole_allowed_only", all_pairs ? "false" : "true");
  double target_cm1 = std::abs(a.energy_cm1 - b.energy_cm1);
  double target_au =
      convert_energy(target_cm1, EnergyUnit::InverseCm, EnergyUnit::Au);
  doc.params.emplace_back("target_delta_e_cm1", out::format_number(target_cm1));
  doc.params.emplace_back("target_omega_au", out::format_number(target_au));
  if (target_au > 0.0)
    doc.params.emplace_back(
        "target_lambda_nm",
        out::format_number(omega_au_to_lambda_nm(target_au)));
  doc.params.emplace_back("levels", cfg.levels_path);
  doc.columns = {"state_a", "state_b", "delta_e_cm1", "mismatch_cm1"};
  for (const auto& c : found) {
    doc.rows.push_back({out::Cell::str(c.a.label), out::Cell::str(c.b.label),
                        out::Cell::number(c.delta_e_cm1),
                        out::Cell::number(c.mismatch_cm1)});
  }
  emit(doc, cfg);
}

// ---------------------------------------------------------------- heat

struct HeatArgs {
  double freq = 0.0;
  std::string freq_unit = "rad/s";
  double mass_amu = kRb87AMU;
  double tau = 0.0;
};

void cmd_heat(const RunConfig& cfg, const HeatArgs& args) {
  double mass = args.mass_amu * constants::atomic_mass_kg;
  TrapSpec trap;
  if (args.freq_unit == "rad/s" || args.freq_unit == "rads")
    trap = TrapSpec::from_angular(args.freq, mass);
  else if (args.freq_unit == "hz")
    trap = TrapSpec::from_cyclic(args.freq, mass);
  else
    throw UsageError("unknown --freq-unit '" + args.freq_unit +
                     "' (expected rad/s or hz)");
  HeatingResult heat = heating_per_cycle(trap, args.tau);
  double restored = restored_energy(trap, args.tau);

  out::Document doc;
  doc.command = "heat";
  doc.params.emplace_back("freq", out::format_number(args.freq));
  doc.params.emplace_back("freq_unit", args.freq_unit);
  doc.params.emplace_back("mass_amu", out::format_number(args.mass_amu));
  doc.params.emplace_back("tau_s", out::format_number(args.tau));
  doc.columns = {"omega0_rad_s",      "omega0_tau",    "ground_energy_j",
                 "restored_energy_j", "heat_hbar_omega0", "heat_kelvin"};
  doc.rows.push_back(
      {out::Cell::number(trap.omega0_rad_s),
       out::Cell::number(trap.omega0_rad_s * args.tau),
       out::Cell::number(trap.ground_energy_j), out::Cell::number(restored),
       out::Cell::number(heat.hbar_omega0_units),
       out::Cell::number(heat.kelvin)});
  doc.notes.push_back(
      "k_B T = (hbar omega0) (omega0 tau)^2 / 4 per release/restore cycle");
  doc.notes.push_back(
      "the frequently quoted ~0.006 hbar*omega0 for a 1 MHz trap and 1 us "
      "release is not reproducible from this formula under either frequency "
      "convention (omega0 = 1e6 rad/s gives 0.25, nu0 = 1 MHz gives 9.87); "
      "state the convention explicitly via --freq-unit");
  emit(doc, cfg);
}

// ---------------------------------------------------------------- convert

void cmd_convert(const RunConfig& cfg, const std::string& kind,
                 const std::string& value, const std::string& from,
                 const std::string& to) {
  double in = parse_number(value, "value");
  double result;
  if (kind == "omega")
    result = convert_omega(in, parse_omega_unit(from), parse_omega_unit(to));
  else if (kind == "alpha")
    result = convert_alpha(in, parse_alpha_unit(from), parse_alpha_unit(to));
  else if (kind == "energy")
    result =
        convert_energy(in, parse_energy_unit(from), parse_energy_unit(to));
  else
    throw UsageError("unknown quantity '" + kind +
                     "' (expected omega, alpha, or energy)");

  out::Document doc;
  doc.command = "convert";
  doc.params.emplace_back("quantity", kind);
  doc.columns = {"value", "unit", "result", "result_unit"};
  doc.rows.push_back({out::Cell::number(in), out::Cell::str(from),
                      out::Cell::number(result), out::Cell::str(to)});
  emit(doc, cfg);
}

}  // namespace

int main(int argc, char** argv) {
  RunConfig cfg;
  CLI::App app{
      "magicpol: frequency-dependent polarizabilities of alkali atoms, "
      "magic-frequency search, transition coincidences, and trap-release "
      "heating"};
  app.fallthrough();
  app.require_subcommand(1);
  app.set_config("--config", "", "key=value config file mirroring the flags");

  app.add_option("--levels", cfg.levels_path, "levels CSV file")
      ->envname("MAGICPOL_LEVELS");
  app.add_option("--dipoles", cfg.dipoles_path, "dipoles CSV file")
      ->envname("MAGICPOL_DIPOLES");
  app.add_option("--format", cfg.format, "output format: table, csv, json")
      ->envname("MAGICPOL_FORMAT");
  app.add_option("--omega-unit", cfg.omega_unit,
                 "unit of --omega/--at inputs: au, nm, hz")
      ->envname("MAGICPOL_OMEGA_UNIT");
  app.add_option("--n-max", cfg.n_max, "channel truncation bound")
      ->envname("MAGICPOL_N_MAX");
  app.add_option("--core-alpha", cfg.core_alpha,
                 "core polarizability constant, a0^3")
      ->envname("MAGICPOL_CORE_ALPHA");
  app.add_option("--core-unc", cfg.core_unc,
                 "relative uncertainty of the core constant")
      ->envname("MAGICPOL_CORE_UNC");
  app.add_option("--tail-alpha", cfg.tail_specs,
                 "tail constant, a0^3; plain VALUE or LABEL=VALUE, repeatable")
      ->envname("MAGICPOL_TAIL_ALPHA");
  app.add_option("--exclusion-halfwidth", cfg.exclusion_halfwidth,
                 "resonance exclusion half-width, a.u. of omega")
      ->envname("MAGICPOL_EXCLUSION_HALFWIDTH");

  ScanArgs scan_args;
  CLI::App* scan = app.add_subcommand(
      "scan", "evaluate alpha(omega) for one state over a frequency grid");
  scan->add_option("--state", scan_args.state, "target state label")
      ->required();
  scan->add_option("--omega", scan_args.omega, "range MIN:MAX (omega-unit)")
      ->required();
  scan->add_option("--step", scan_args.step, "grid step, a.u.");
  scan->add_option("--count", scan_args.count, "number of grid points");
  scan->add_flag("--force-excluded", scan_args.force_excluded,
                 "print values inside exclusion windows");

  MagicArgs magic_args;
  CLI::App* magic = app.add_subcommand(
      "magic", "solve alpha_ground(omega) = alpha_rydberg(omega)");
  magic->add_option("--ground", magic_args.ground, "ground state label")
      ->required();
  magic->add_option("--rydberg", magic_args.rydberg, "rydberg state label");
  magic->add_flag("--zero", magic_args.zero,
                  "solve alpha_ground(omega) = 0 instead");
  magic->add_option("--omega", magic_args.omega,
                    "search range MIN:MAX (omega-unit); default: between the "
                    "two lowest ground-model resonances");

  MagicArgs zero_args;
  zero_args.zero = true;
  CLI::App* zero =
      app.add_subcommand("zero", "solve alpha_state(omega) = 0");
  zero->add_option("--state", zero_args.ground, "state label")->required();
  zero->add_option("--omega", zero_args.omega,
                   "search range MIN:MAX (omega-unit)");

  std::string bd_state, bd_at;
  CLI::App* breakdown = app.add_subcommand(
      "breakdown", "per-channel contribution table at one frequency");
  breakdown->add_option("--state", bd_state, "target state label")->required();
  breakdown->add_option("--at", bd_at, "omega (omega-unit)")->required();

  std::string co_pair;
  double co_tol = 0.0;
  bool co_all = false;
  CLI::App* coincide = app.add_subcommand(
      "coincide", "find level pairs whose transition energy nearly matches a "
                  "target transition");
  coincide->add_option("--pair", co_pair, "target pair LABEL:LABEL")
      ->required();
  coincide->add_option("--tol", co_tol, "tolerance, cm^-1")->required();
  coincide->add_flag("--all-pairs", co_all,
                     "include dipole-forbidden pairs");

  HeatArgs heat_args;
  CLI::App* heat = app.add_subcommand(
      "heat", "trap release/restore heating estimate");
  heat->add_option("--freq", heat_args.freq, "trap frequency")->required();
  heat->add_option("--freq-unit", heat_args.freq_unit,
                   "rad/s (default) or hz");
  heat->add_option("--mass-amu", heat_args.mass_amu,
                   "atomic mass in u (default: 87Rb)");
  heat->add_option("--tau", heat_args.tau, "release duration, s")->required();

  std::string cv_kind, cv_value, cv_from, cv_to;
  CLI::App* convert = app.add_subcommand(
      "convert", "unit conversion for omega, alpha, or energy");
  convert->add_option("kind", cv_kind, "omega | alpha | energy")->required();
  convert->add_option("value", cv_value, "value to convert")->required();
  convert->add_option("from", cv_from, "source unit")->required();
  convert->add_option("to", cv_to, "destination unit")->required();

  try {
    app.parse(argc, argv);
    if (scan->parsed()) cmd_scan(cfg, scan_args);
    if (magic->parsed()) cmd_magic(cfg, magic_args);
    if (zero->parsed()) cmd_magic(cfg, zero_args);
    if (breakdown->parsed()) cmd_breakdown(cfg, bd_state, bd_at);
    if (coincide->parsed()) cmd_coincide(cfg, co_pair, co_tol, co_all);
    if (heat->parsed()) cmd_heat(cfg, heat_args);
    if (convert->parsed()) cmd_convert(cfg, cv_kind, cv_value, cv_from, cv_to);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;  // fold CLI11's exit codes into "usage error"
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const DataError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  }
  return 0;
}
