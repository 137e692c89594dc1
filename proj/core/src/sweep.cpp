#include "ebubble/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "ebubble/error.hpp"
#include "ebubble/solvers.hpp"

namespace ebubble::sweep {

std::vector<double> make_grid(double min, double max, std::size_t count, GridSpacing spacing) {
  if (!(min > 0.0) || !(max > min) || !std::isfinite(max))
    throw InvalidArgument("grid requires 0 < min < max");
  if (count < 2) throw InvalidArgument("grid requires at least 2 points");
  std::vector<double> grid(count);
  const double last = static_cast<double>(count - 1);
  for (std::size_t i = 0; i < count; ++i) {
    const double t = static_cast<double>(i) / last;
    grid[i] = spacing == GridSpacing::linear
                  ? min + t * (max - min)
                  : std::exp(std::log(min) + t * (std::log(max) - std::log(min)));
  }
  grid.front() = min;
  grid.back() = max;
  return grid;
}

CurveTable energy_curves(std::span<const double> radius_grid, std::span<const double> pressures,
                         double gamma, const model::ZeroPointModel& model,
                         const units::ConstantProfile& constants) {
  if (radius_grid.empty()) throw InvalidArgument("radius grid is empty");
  if (pressures.empty()) throw InvalidArgument("pressure list is empty");
  for (std::size_t i = 0; i < radius_grid.size(); ++i) {
    if (!(radius_grid[i] > 0.0) || !std::isfinite(radius_grid[i]))
      throw InvalidArgument("radii must be finite and > 0");
    if (i > 0 && !(radius_grid[i] > radius_grid[i - 1]))
      throw InvalidArgument("radius grid must be strictly increasing");
  }
  for (std::size_t i = 0; i < pressures.size(); ++i) {
    if (!std::isfinite(pressures[i])) throw InvalidArgument("pressures must be finite");
    for (std::size_t j = 0; j < i; ++j)
      if (pressures[j] == pressures[i]) throw InvalidArgument("pressures must be distinct");
  }

  CurveTable table{{radius_grid.begin(), radius_grid.end()},
                   {pressures.begin(), pressures.end()},
                   {},
                   {gamma, model, constants.name}};
  table.energies.reserve(pressures.size());
  for (double pressure : pressures) {
    const model::MediumParams medium{gamma, pressure};
    auto& row = table.energies.emplace_back();
    row.reserve(radius_grid.size());
    for (double r : radius_grid) row.push_back(model::energy_breakdown(r, medium, model, constants));
  }
  return table;
}

CurveExtrema find_interior_extrema(std::span<const double> values) {
  CurveExtrema out;
  // Plateaus count once, at their first sample.
  for (std::size_t i = 1; i + 1 < values.size(); ++i) {
    const double left = values[i - 1];
    const double here = values[i];
    if (here == left) continue;
    std::size_t j = i + 1;
    while (j < values.size() && values[j] == here) ++j;
    if (j == values.size()) break;
    const double right = values[j];
    if (here < left && here < right) out.minima.push_back(i);
    if (here > left && here > right) out.maxima.push_back(i);
  }
  return out;
}

std::vector<double> totals(const CurveTable& table, std::size_t pressure_index) {
  const auto& row = table.energies.at(pressure_index);
  std::vector<double> out(row.size());
  std::transform(row.begin(), row.end(), out.begin(), [](const auto& e) { return e.total; });
  return out;
}

double ScanTable::max_pressure_mismatch() const noexcept {
  double worst = 0.0;
  for (const auto& r : rows)
    worst = std::max(worst, std::abs(r.pressure_closed - r.pressure_numeric) /
                                std::abs(r.pressure_closed));
  return worst;
}

double ScanTable::max_radius_mismatch() const noexcept {
  double worst = 0.0;
  for (const auto& r : rows)
    worst = std::max(worst, std::abs(r.critical_radius - r.critical_radius_numeric) /
                                r.critical_radius);
  return worst;
}

ScanTable gamma_scan(std::span<const double> gammas, const model::ZeroPointModel& model,
                     const units::ConstantProfile& constants) {
  if (gammas.empty()) throw InvalidArgument("gamma scan needs at least one value");
  for (double g : gammas)
    if (!(g > 0.0) || !std::isfinite(g))
      throw InvalidArgument("every gamma must be finite and > 0, got " + std::to_string(g));

  ScanTable scan{{}, constants.name};
  scan.rows.reserve(gammas.size());
  for (double g : gammas) {
    const auto closed = model::critical_point_closed_form(g, model, constants);
    const auto numeric = solvers::critical_pressure_numeric(g, model, constants);
    scan.rows.push_back({g, model.coefficient(),
                         model::equilibrium_radius_zero_pressure(g, model, constants),
                         closed.radius, numeric.radius, closed.pressure, numeric.pressure});
  }
  return scan;
}

double fit_scaling_exponent(const ScanTable& scan, PressureColumn column) {
  if (scan.rows.empty()) throw InvalidArgument("scaling fit needs at least 3 distinct gammas");
  std::vector<double> gs;
  for (const auto& r : scan.rows) {
    if (r.coefficient != scan.rows.front().coefficient)
      throw InvalidArgument("scaling fit requires a single zero-point coefficient C");
    if (std::find(gs.begin(), gs.end(), r.gamma) == gs.end()) gs.push_back(r.gamma);
  }
  if (gs.size() < 3) throw InvalidArgument("scaling fit needs at least 3 distinct gammas");

  const double n = static_cast<double>(scan.rows.size());
  std::vector<double> lx;
  std::vector<double> ly;
  for (const auto& r : scan.rows) {
    const double pc = column == PressureColumn::closed_form ? r.pressure_closed : r.pressure_numeric;
    lx.push_back(std::log(r.gamma));
    ly.push_back(std::log(std::abs(pc)));
  }
  const double mx = std::accumulate(lx.begin(), lx.end(), 0.0) / n;
  const double my = std::accumulate(ly.begin(), ly.end(), 0.0) / n;
  double sxy = 0.0;
  double sxx = 0.0;
  for (std::size_t i = 0; i < lx.size(); ++i) {
    sxy += (lx[i] - mx) * (ly[i] - my);
    sxx += (lx[i] - mx) * (lx[i] - mx);
  }
  return sxy / sxx;
}

}  // namespace ebubble::sweep
