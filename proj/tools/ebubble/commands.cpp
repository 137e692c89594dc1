#include <algorithm>
#include <cmath>
#include <fstream>
#include <functional>
#include <iterator>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "cli.hpp"
#include "config.hpp"
#include "ebubble/error.hpp"
#include "ebubble/model.hpp"
#include "ebubble/solvers.hpp"
#include "ebubble/sweep.hpp"
#include "ebubble/units.hpp"
#include "output.hpp"

namespace ebubble::cli {

namespace {

using units::Dimension;
using units::Quantity;
using units::Unit;

constexpr std::string_view kComparisonPrefix =
    "comparison (literature/experiment values, not computed): ";

struct CommandResult {
  CommandResult(std::string body = {}) : text(std::move(body)) {}

  std::string text;
  int code = kSuccess;
  std::vector<std::string> diagnostics;
};

using CommandFn = std::function<CommandResult(Validator&, const RawConfig&)>;

struct CommandSpec {
  std::string name;
  std::string description;
  std::vector<std::string> keys;
  RawConfig defaults;
  CommandFn run;
};

double relative_difference(double a, double b) { return std::abs(a - b) / std::abs(a); }

std::string unit_tag(Unit u) { return std::string(units::to_string(u)); }

double to_unit(double si_value, Dimension dimension, Unit target) {
  return Quantity::si(si_value, dimension).in(target);
}

void require_positive(Validator& v, const std::optional<double>& value, std::string_view key) {
  if (value && !(*value > 0.0)) v.fail("--" + std::string(key) + " must be > 0");
}

// ---------------------------------------------------------------------------

CommandResult cmd_radius(Validator& v, const RawConfig& effective) {
  const auto gamma = v.number("gamma", true);
  require_positive(v, gamma, "gamma");
  const auto gamma_unit = v.unit("gamma-unit", Dimension::surface_tension);
  const auto zp = v.zero_point_model();
  const auto profile = v.profile();
  const auto length_unit = v.unit("length-unit", Dimension::length);
  const auto energy_unit = v.unit("energy-unit", Dimension::energy);
  const auto format = v.format();
  if (!v.ok()) return {};

  const auto& constants = units::constants(*profile);
  const double gamma_si = Quantity(*gamma, *gamma_unit).in(Unit::N_per_m);
  const double a0 = model::equilibrium_radius_zero_pressure(gamma_si, *zp, constants);
  const auto e = model::energy_breakdown(a0, {gamma_si, 0.0}, *zp, constants);
  const auto energy = [&](double joules) { return to_unit(joules, Dimension::energy, *energy_unit); };
  const std::string eu = unit_tag(*energy_unit);

  Report report{"radius", effective, {}, {}};
  report.rows = {
      {"gamma", gamma_si, "N_per_m"},
      {"zero_point_coefficient", zp->coefficient(), "1"},
      {"a0", to_unit(a0, Dimension::length, *length_unit), unit_tag(*length_unit)},
      {"U_zero_point", energy(e.zero_point), eu},
      {"U_surface", energy(e.surface), eu},
      {"U_pv", energy(e.pressure_work), eu},
      {"U_total", energy(e.total), eu},
  };
  report.footnotes = {std::string(kComparisonPrefix) +
                      "rough estimate a ~ 7 angstrom (C=1, gamma=4 erg_per_cm2); "
                      "corrected estimate a ~ 19 angstrom (C=pi^2/2, gamma=0.0004 N_per_m); "
                      "measured a ~ 17 angstrom"};
  return {render(report, *format)};
}

// ---------------------------------------------------------------------------

CommandResult cmd_critical(Validator& v, const RawConfig& effective) {
  const auto gamma = v.number("gamma", true);
  require_positive(v, gamma, "gamma");
  const auto gamma_unit = v.unit("gamma-unit", Dimension::surface_tension);
  const auto zp = v.zero_point_model();
  const auto profile = v.profile();
  const auto length_unit = v.unit("length-unit", Dimension::length);
  const auto pressure_unit = v.unit("pressure-unit", Dimension::pressure);
  const auto format = v.format();
  if (!v.ok()) return {};

  const auto& constants = units::constants(*profile);
  const double gamma_si = Quantity(*gamma, *gamma_unit).in(Unit::N_per_m);
  const double a0 = model::equilibrium_radius_zero_pressure(gamma_si, *zp, constants);
  const auto closed = model::critical_point_closed_form(gamma_si, *zp, constants);
  const auto numeric = solvers::critical_pressure_numeric(gamma_si, *zp, constants);
  const double radius_gap = relative_difference(closed.radius, numeric.radius);
  const double pressure_gap = relative_difference(closed.pressure, numeric.pressure);

  const auto length = [&](double m) { return to_unit(m, Dimension::length, *length_unit); };
  const auto pressure = [&](double pa) { return to_unit(pa, Dimension::pressure, *pressure_unit); };
  const std::string lu = unit_tag(*length_unit);
  const std::string pu = unit_tag(*pressure_unit);

  Report report{"critical", effective, {}, {}};
  report.rows = {
      {"gamma", gamma_si, "N_per_m"},
      {"zero_point_coefficient", zp->coefficient(), "1"},
      {"a0", length(a0), lu},
      {"a_c_closed", length(closed.radius), lu},
      {"a_c_numeric", length(numeric.radius), lu},
      {"a_c_relative_difference", radius_gap, "1"},
      {"P_c_closed", pressure(closed.pressure), pu},
      {"P_c_numeric", pressure(numeric.pressure), pu},
      {"P_c_relative_difference", pressure_gap, "1"},
      {"x_c_numeric", numeric.x_critical, "1"},
      {"p_c_numeric", numeric.p_critical, "1"},
      {"bisection_iterations", static_cast<double>(numeric.iterations), "1"},
      {"residual_first_derivative", numeric.residual_first, "1"},
      {"residual_second_derivative", numeric.residual_second, "1"},
  };
  report.footnotes = {std::string(kComparisonPrefix) +
                      "rough estimate P_c ~ -64 bar (C=1, gamma=0.004 N_per_m); "
                      "corrected estimate P_c ~ -2.4 bar (C=pi^2/2, gamma=0.0004 N_per_m); "
                      "measured P_c ~ -1.6 bar"};

  CommandResult result{render(report, *format)};
  if (!(radius_gap <= kCrossCheckTolerance) || !(pressure_gap <= kCrossCheckTolerance)) {
    result.code = kCrossCheckFailure;
    result.diagnostics.push_back("closed-form and numeric critical point disagree (radius " +
                                 format_number(radius_gap) + ", pressure " +
                                 format_number(pressure_gap) + ")");
  }
  return result;
}

// ---------------------------------------------------------------------------

CommandResult cmd_curve(Validator& v, const RawConfig& effective) {
  const auto gamma = v.number("gamma", true);
  require_positive(v, gamma, "gamma");
  const auto gamma_unit = v.unit("gamma-unit", Dimension::surface_tension);
  const auto zp = v.zero_point_model();
  const auto profile = v.profile();
  const auto pressures = v.number_list("pressures", true);
  const auto pressure_unit = v.unit("pressure-unit", Dimension::pressure);
  const auto rmin = v.number("radius-min", true);
  const auto rmax = v.number("radius-max", true);
  const auto rcount = v.count("radius-count");
  const auto spacing = v.spacing("radius-spacing");
  const auto length_unit = v.unit("length-unit", Dimension::length);
  const auto energy_unit = v.unit("energy-unit", Dimension::energy);
  const bool components = v.flag("components");
  const auto format = v.format();
  if (rmin && rmax && !(*rmin > 0.0 && *rmin < *rmax))
    v.fail("malformed radius grid: need 0 < --radius-min < --radius-max");
  if (rcount && *rcount < 2) v.fail("--radius-count must be at least 2");
  if (!v.ok()) return {};

  const auto& constants = units::constants(*profile);
  const double gamma_si = Quantity(*gamma, *gamma_unit).in(Unit::N_per_m);
  const auto grid = sweep::make_grid(*rmin, *rmax, *rcount, *spacing);
  std::vector<double> grid_si(grid.size());
  std::transform(grid.begin(), grid.end(), grid_si.begin(),
                 [&](double r) { return Quantity(r, *length_unit).in(Unit::m); });
  std::vector<double> pressures_si(pressures->size());
  std::transform(pressures->begin(), pressures->end(), pressures_si.begin(),
                 [&](double p) { return Quantity(p, *pressure_unit).in(Unit::Pa); });

  std::optional<sweep::CurveTable> curves;
  try {
    curves = sweep::energy_curves(grid_si, pressures_si, gamma_si, *zp, constants);
  } catch (const InvalidArgument& e) {
    v.fail(e.what());
    return {};
  }
  const auto& table = *curves;

  const auto energy = [&](double joules) { return to_unit(joules, Dimension::energy, *energy_unit); };
  const std::string lu = unit_tag(*length_unit);
  const std::string eu = unit_tag(*energy_unit);
  const std::string pu = unit_tag(*pressure_unit);

  if (*format == OutputFormat::json) {
    nlohmann::ordered_json doc;
    doc["command"] = "curve";
    doc["config"] = effective;
    doc["units"] = {{"radius", lu}, {"energy", eu}, {"pressure", pu}};
    auto& curves = doc["curves"] = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < table.pressures.size(); ++i) {
      nlohmann::ordered_json curve;
      curve["pressure"] = (*pressures)[i];
      curve["radius"] = grid;
      std::vector<double> total, zero_point, surface, pv;
      for (const auto& e : table.energies[i]) {
        total.push_back(energy(e.total));
        zero_point.push_back(energy(e.zero_point));
        surface.push_back(energy(e.surface));
        pv.push_back(energy(e.pressure_work));
      }
      curve["U_total"] = total;
      if (components) {
        curve["U_zp"] = zero_point;
        curve["U_surf"] = surface;
        curve["U_pv"] = pv;
      }
      curves.push_back(std::move(curve));
    }
    return {doc.dump(2) + "\n"};
  }

  std::string out = config_echo_line("curve", effective) + "\n";
  std::string header = "radius_" + lu + ",U_total_" + eu;
  if (components) header += ",U_zp_" + eu + ",U_surf_" + eu + ",U_pv_" + eu;
  for (std::size_t i = 0; i < table.pressures.size(); ++i) {
    if (i > 0) out += "\n";
    out += "# pressure=" + format_number((*pressures)[i]) + " " + pu + "\n";
    out += header + "\n";
    for (std::size_t j = 0; j < grid.size(); ++j) {
      const auto& e = table.energies[i][j];
      out += format_number(grid[j]) + "," + format_number(energy(e.total));
      if (components)
        out += "," + format_number(energy(e.zero_point)) + "," + format_number(energy(e.surface)) +
               "," + format_number(energy(e.pressure_work));
      out += "\n";
    }
  }
  return {out};
}

// ---------------------------------------------------------------------------

CommandResult cmd_sweep(Validator& v, const RawConfig& effective) {
  const auto gamma_unit = v.unit("gamma-unit", Dimension::surface_tension);
  const auto zp = v.zero_point_model();
  const auto profile = v.profile();
  const auto length_unit = v.unit("length-unit", Dimension::length);
  const auto pressure_unit = v.unit("pressure-unit", Dimension::pressure);
  const auto format = v.format();

  std::vector<double> gammas;
  const bool has_list = v.has("gammas");
  const bool has_range = v.has("gamma-min") || v.has("gamma-max");
  if (has_list && has_range) {
    v.fail("give either --gammas or --gamma-min/--gamma-max, not both");
  } else if (has_list) {
    if (auto list = v.number_list("gammas", true)) gammas = *list;
  } else if (has_range) {
    const auto lo = v.number("gamma-min", true);
    const auto hi = v.number("gamma-max", true);
    const auto n = v.count("gamma-count");
    if (lo && hi && n) {
      if (!(*lo > 0.0 && *lo < *hi))
        v.fail("malformed gamma range: need 0 < --gamma-min < --gamma-max");
      else if (*n >= 2)
        gammas = sweep::make_grid(*lo, *hi, *n, sweep::GridSpacing::log);
      else if (*n == 1)
        gammas = {*lo};
    }
  } else {
    v.fail("missing required --gammas (or --gamma-min and --gamma-max)");
  }
  for (double g : gammas)
    if (!(g > 0.0)) {
      v.fail("every gamma must be > 0");
      break;
    }
  std::vector<double> distinct = gammas;
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  if ((has_list || has_range) && v.ok() && distinct.size() < 3)
    v.fail("sweep needs at least 3 distinct gamma values, got " +
           std::to_string(distinct.size()));
  if (!v.ok()) return {};

  const auto& constants = units::constants(*profile);
  std::vector<double> gammas_si(gammas.size());
  std::transform(gammas.begin(), gammas.end(), gammas_si.begin(),
                 [&](double g) { return Quantity(g, *gamma_unit).in(Unit::N_per_m); });
  const auto scan = sweep::gamma_scan(gammas_si, *zp, constants);
  const double exponent_numeric =
      sweep::fit_scaling_exponent(scan, sweep::PressureColumn::numeric);
  const double exponent_closed =
      sweep::fit_scaling_exponent(scan, sweep::PressureColumn::closed_form);

  const auto length = [&](double m) { return to_unit(m, Dimension::length, *length_unit); };
  const auto pressure = [&](double pa) { return to_unit(pa, Dimension::pressure, *pressure_unit); };
  const std::string gu = unit_tag(*gamma_unit);
  const std::string lu = unit_tag(*length_unit);
  const std::string pu = unit_tag(*pressure_unit);

  std::string out;
  if (*format == OutputFormat::json) {
    nlohmann::ordered_json doc;
    doc["command"] = "sweep";
    doc["config"] = effective;
    doc["units"] = {{"gamma", gu}, {"length", lu}, {"pressure", pu}};
    auto& rows = doc["rows"] = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < scan.rows.size(); ++i) {
      const auto& r = scan.rows[i];
      rows.push_back({{"gamma", gammas[i]},
                      {"C", r.coefficient},
                      {"a0", length(r.a0)},
                      {"a_c", length(r.critical_radius)},
                      {"a_c_numeric", length(r.critical_radius_numeric)},
                      {"P_c_closed", pressure(r.pressure_closed)},
                      {"P_c_numeric", pressure(r.pressure_numeric)},
                      {"P_c_relative_difference",
                       relative_difference(r.pressure_closed, r.pressure_numeric)}});
    }
    doc["exponent"] = exponent_numeric;
    doc["exponent_closed_form"] = exponent_closed;
    out = doc.dump(2) + "\n";
  } else {
    out = config_echo_line("sweep", effective) + "\n";
    out += "gamma_" + gu + ",C,a0_" + lu + ",a_c_" + lu + ",a_c_numeric_" + lu + ",P_c_closed_" +
           pu + ",P_c_numeric_" + pu + ",P_c_relative_difference\n";
    for (std::size_t i = 0; i < scan.rows.size(); ++i) {
      const auto& r = scan.rows[i];
      out += format_number(gammas[i]) + "," + format_number(r.coefficient) + "," +
             format_number(length(r.a0)) + "," + format_number(length(r.critical_radius)) + "," +
             format_number(length(r.critical_radius_numeric)) + "," +
             format_number(pressure(r.pressure_closed)) + "," +
             format_number(pressure(r.pressure_numeric)) + "," +
             format_number(relative_difference(r.pressure_closed, r.pressure_numeric)) + "\n";
    }
    out += "# exponent=" + format_number(exponent_numeric) + "\n";
    out += "# exponent_closed_form=" + format_number(exponent_closed) + "\n";
  }

  CommandResult result{out};
  const double mismatch = std::max(scan.max_pressure_mismatch(), scan.max_radius_mismatch());
  if (!(mismatch <= kCrossCheckTolerance)) {
    result.code = kCrossCheckFailure;
    result.diagnostics.push_back("closed-form and numeric columns disagree by " +
                                 format_number(mismatch));
  }
  return result;
}

// ---------------------------------------------------------------------------

CommandResult cmd_estimate_gamma(Validator& v, const RawConfig& effective) {
  const auto binding = v.number("binding-energy", true);
  const auto binding_unit = v.unit("binding-energy-unit", Dimension::energy);
  const auto spacing = v.number("spacing", true);
  const auto spacing_unit = v.unit("spacing-unit", Dimension::length);
  const auto format = v.format();
  require_positive(v, spacing, "spacing");
  if (binding && *binding < 0.0) v.fail("--binding-energy must be >= 0");
  if (!v.ok()) return {};

  const auto gamma =
      model::estimate_surface_tension({*binding, *binding_unit}, {*spacing, *spacing_unit});
  Report report{"estimate-gamma", effective, {}, {}};
  report.rows = {
      {"gamma", gamma.in(Unit::erg_per_cm2), "erg_per_cm2"},
      {"gamma", gamma.in(Unit::N_per_m), "N_per_m"},
      {"gamma", gamma.in(Unit::eV_per_cm2), "eV_per_cm2"},
  };
  report.footnotes = {std::string(kComparisonPrefix) +
                      "rough estimate gamma ~ 4 erg_per_cm2 from 2.5e-4 eV per (1 angstrom)^2"};
  return {render(report, *format)};
}

// ---------------------------------------------------------------------------

std::vector<CommandSpec> command_table() {
  const RawConfig common{{"constants", "precise"}, {"format", "csv"}, {"output", "-"}};
  const auto with_common = [&](RawConfig extra) {
    extra.insert(common.begin(), common.end());
    return extra;
  };
  const std::vector<std::string> model_keys{"gamma", "gamma-unit", "model", "zero-point-c",
                                            "constants", "format", "output"};
  const auto keys = [&](std::vector<std::string> extra) {
    extra.insert(extra.begin(), model_keys.begin(), model_keys.end());
    return extra;
  };

  std::vector<CommandSpec> specs;
  specs.push_back({"radius", "Zero-pressure equilibrium radius and its energy breakdown",
                   keys({"length-unit", "energy-unit"}),
                   with_common({{"gamma-unit", "N_per_m"},
                                {"model", "c1"},
                                {"length-unit", "angstrom"},
                                {"energy-unit", "eV"}}),
                   cmd_radius});
  specs.push_back({"critical", "Critical (spinodal) radius and pressure, closed form and numeric",
                   keys({"length-unit", "pressure-unit"}),
                   with_common({{"gamma-unit", "N_per_m"},
                                {"model", "c1"},
                                {"length-unit", "angstrom"},
                                {"pressure-unit", "bar"}}),
                   cmd_critical});
  specs.push_back({"curve", "Energy-versus-radius curves for a family of pressures",
                   keys({"pressures", "pressure-unit", "radius-min", "radius-max", "radius-count",
                         "radius-spacing", "length-unit", "energy-unit", "components"}),
                   with_common({{"gamma", "0.0004"},
                                {"gamma-unit", "N_per_m"},
                                {"model", "infinite_well"},
                                {"pressures", "0,-0.5,-1,-1.5,-2,-2.3"},
                                {"pressure-unit", "bar"},
                                {"radius-min", "5"},
                                {"radius-max", "200"},
                                {"radius-count", "400"},
                                {"radius-spacing", "linear"},
                                {"length-unit", "angstrom"},
                                {"energy-unit", "eV"},
                                {"components", "false"}}),
                   cmd_curve});
  specs.push_back({"sweep", "Critical pressure over a range of surface tensions",
                   {"gammas", "gamma-min", "gamma-max", "gamma-count", "gamma-unit", "model",
                    "zero-point-c", "constants", "format", "output", "length-unit",
                    "pressure-unit"},
                   with_common({{"gamma-count", "7"},
                                {"gamma-unit", "N_per_m"},
                                {"model", "c1"},
                                {"length-unit", "angstrom"},
                                {"pressure-unit", "bar"}}),
                   cmd_sweep});
  specs.push_back({"estimate-gamma", "Surface tension from a binding energy and atom spacing",
                   {"binding-energy", "binding-energy-unit", "spacing", "spacing-unit", "format",
                    "output"},
                   {{"binding-energy-unit", "eV"},
                    {"spacing-unit", "angstrom"},
                    {"format", "csv"},
                    {"output", "-"}},
                   cmd_estimate_gamma});
  return specs;
}

bool read_file(const std::string& path, std::string& contents) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return false;
  contents.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
  return !in.bad();
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        const Environment& env) {
  const auto specs = command_table();

  CLI::App app{"Electron bubble energetics in liquid helium", "ebubble"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string config_path;
  app.add_option("--config", config_path, "Config file of `key = value` lines");

  // Flag values land here; std::map keeps element addresses stable.
  std::vector<std::map<std::string, std::string>> flag_values(specs.size());
  std::vector<std::map<std::string, CLI::Option*>> flag_options(specs.size());
  std::vector<CLI::App*> subcommands;
  for (std::size_t i = 0; i < specs.size(); ++i) {
    auto* sub = app.add_subcommand(specs[i].name, specs[i].description);
    subcommands.push_back(sub);
    for (const auto& key : specs[i].keys) {
      std::string help = "(default: ";
      const auto def = specs[i].defaults.find(key);
      help += def == specs[i].defaults.end() ? "none" : def->second;
      help += ")";
      auto& slot = flag_values[i][key];
      if (key == "components")
        flag_options[i][key] = sub->add_flag("--" + key, "Also emit U_zp, U_surf, U_pv columns");
      else
        flag_options[i][key] = sub->add_option("--" + key, slot, help);
    }
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "ebubble: error: " << e.what() << "\n";
    if (e.get_exit_code() == 0) return kSuccess;
    return kInvalidInput;
  }

  std::size_t index = 0;
  while (!subcommands[index]->parsed()) ++index;
  const auto& spec = specs[index];

  std::vector<std::string> errors;
  RawConfig file_values;
  const std::optional<std::string> path =
      !config_path.empty() ? std::optional<std::string>(config_path) : env.config_path;
  if (path && !path->empty()) {
    std::string text;
    if (!read_file(*path, text)) {
      err << "ebubble " << spec.name << ": error: cannot read config file '" << *path << "'\n";
      return kIoFailure;
    }
    auto parsed = parse_config_text(text, *path);
    file_values = std::move(parsed.values);
    errors = std::move(parsed.errors);
  }

  RawConfig effective = spec.defaults;
  for (const auto& key : spec.keys) {
    if (const auto it = file_values.find(key); it != file_values.end()) effective[key] = it->second;
    auto* opt = flag_options[index].at(key);
    if (opt->count() > 0) effective[key] = key == "components" ? "true" : flag_values[index][key];
  }

  Validator validator(effective);
  for (auto& e : errors) validator.fail(std::move(e));
  CommandResult result;
  result = spec.run(validator, effective);
  if (!validator.ok()) {
    for (const auto& e : validator.errors()) err << "ebubble " << spec.name << ": error: " << e << "\n";
    return kInvalidInput;
  }

  const std::string output = effective.count("output") ? effective.at("output") : "-";
  if (output == "-") {
    out << result.text;
    out.flush();
  } else {
    std::ofstream file(output, std::ios::binary | std::ios::trunc);
    if (!file || !(file << result.text) || !file.flush()) {
      err << "ebubble " << spec.name << ": error: cannot write output file '" << output << "'\n";
      return kIoFailure;
    }
  }
  for (const auto& d : result.diagnostics) err << "ebubble " << spec.name << ": " << d << "\n";
  return result.code;
}

}  // namespace ebubble::cli
