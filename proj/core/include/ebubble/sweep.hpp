#pragma once

// Energy-curve families and surface-tension scans.

#include <cstddef>
#include <span>
#include <vector>

#include "ebubble/model.hpp"
#include "ebubble/units.hpp"

namespace ebubble::sweep {

enum class GridSpacing { linear, log };

/// `count` radii from `min` to `max` inclusive. Requires 0 < min < max, count >= 2.
std::vector<double> make_grid(double min, double max, std::size_t count, GridSpacing spacing);

struct CurveMetadata {
  double gamma;  // N/m
  model::ZeroPointModel model;
  units::ProfileName constants;
};

struct CurveTable {
  std::vector<double> radius_grid;  // m, strictly increasing
  std::vector<double> pressures;    // Pa, caller order
  /// energies[i][j] = U(radius_grid[j]) at pressures[i], J
  std::vector<std::vector<model::EnergyBreakdown>> energies;
  CurveMetadata metadata;
};

/// Evaluates model::energy_breakdown on every (pressure, radius) pair.
/// Throws InvalidArgument for an empty or non-increasing radius grid, an
/// empty pressure list, repeated pressures, or non-finite values.
CurveTable energy_curves(std::span<const double> radius_grid, std::span<const double> pressures,
                         double gamma, const model::ZeroPointModel& model,
                         const units::ConstantProfile& constants);

/// Interior local extrema of a sampled curve (indices into the samples).
struct CurveExtrema {
  std::vector<std::size_t> minima;
  std::vector<std::size_t> maxima;
};

CurveExtrema find_interior_extrema(std::span<const double> values);

/// Totals of one curve row.
std::vector<double> totals(const CurveTable& table, std::size_t pressure_index);

struct ScanRow {
  double gamma;                 // N/m
  double coefficient;           // C
  double a0;                    // m
  double critical_radius;       // m, closed form
  double critical_radius_numeric;
  double pressure_closed;       // Pa
  double pressure_numeric;      // Pa
};

struct ScanTable {
  std::vector<ScanRow> rows;
  units::ProfileName constants;

  /// Largest |P_closed - P_numeric| / |P_closed| over the rows.
  double max_pressure_mismatch() const noexcept;
  double max_radius_mismatch() const noexcept;
};

/// One row per gamma, in input order. Throws for any gamma <= 0 or an empty list.
ScanTable gamma_scan(std::span<const double> gammas, const model::ZeroPointModel& model,
                     const units::ConstantProfile& constants);

enum class PressureColumn { closed_form, numeric };

/// Least-squares slope of log|P_c| against log gamma.
/// Throws InvalidArgument for fewer than 3 distinct gammas or mixed C.
double fit_scaling_exponent(const ScanTable& scan,
                            PressureColumn column = PressureColumn::closed_form);

/// Pressures (bar) of the default curve family, chosen to straddle the
/// spinodal of gamma = 0.0004 N/m, C = pi^2/2 (about -2.30 bar).
inline constexpr double kDefaultCurvePressuresBar[] = {0.0, -0.5, -1.0, -1.5, -2.0, -2.3};
inline constexpr double kDefaultCurveGamma = 0.0004;  // N/m

}  // namespace ebubble::sweep
