#pragma once

// Numerical analysis of the normal-form landscape u(x) = x^-2 + x^2 + (p/3) x^3.
//
// Nothing here uses the closed-form critical point; these routines exist to
// check it independently and to answer questions at arbitrary pressure.

#include <functional>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "ebubble/model.hpp"
#include "ebubble/units.hpp"

namespace ebubble::solvers {

/// Solver tolerances and limits.
inline constexpr double kRootTolerance = 1e-12;        // bisection width in x
inline constexpr int kNewtonPolishSteps = 2;
inline constexpr double kDegenerateCurvature = 1e-6;   // |u''| below this is degenerate
inline constexpr double kDegenerateSlope = 1e-14;      // |u'| at the inflection point
inline constexpr double kSearchLower = 1e-2;
inline constexpr double kPressureBracketLow = -2.0;
inline constexpr double kPressureBracketHigh = -1e-6;
inline constexpr int kMaxPressureIterations = 200;

struct BisectionResult {
  double root;
  int iterations;
};

/// Bracketed bisection on [lo, hi]; f(lo) and f(hi) must differ in sign (or
/// one of them be zero). Stops once hi - lo <= xtol or the midpoint no longer
/// separates the endpoints. Throws SolverError if the bracket is invalid.
BisectionResult bisect(const std::function<double(double)>& f, double lo, double hi,
                       double xtol, int max_iterations = 400);

enum class StationaryKind { minimum, maximum, degenerate };

std::string_view to_string(StationaryKind kind) noexcept;

struct StationaryPoint {
  double x;
  StationaryKind kind;
};

struct StationaryPointSet {
  std::vector<StationaryPoint> points;  // ascending in x
  double pressure;                      // dimensionless p
};

/// Positive roots of u'(x) at dimensionless pressure p, classified by u''.
/// Structure: p >= 0 -> {minimum}; p_c < p < 0 -> {minimum, maximum};
/// p = p_c -> {degenerate}; p < p_c -> {}.
StationaryPointSet find_stationary_points(double p);

/// Location of the unique inflection point u''(x) = 0 for p < 0 (the maximum
/// of u'). Empty for p >= 0, where u is convex.
std::optional<double> inflection_point(double p);

struct CriticalSolution {
  double x_critical;
  double p_critical;
  int iterations;
  double residual_first;   // |u'| at the solution
  double residual_second;  // |u''| at the solution
  double radius;           // m
  double pressure;         // Pa
};

/// Dimensionless spinodal located by bisection on p with the predicate
/// "find_stationary_points(p) is non-empty" (minimum and barrier exist).
CriticalSolution critical_pressure_numeric_dimensionless();

/// As above, scaled to physical units for the given medium and model.
CriticalSolution critical_pressure_numeric(double gamma, const model::ZeroPointModel& model,
                                           const units::ConstantProfile& constants);

/// u(x_max) - u(x_min); 0 at coalescence; empty when no barrier exists.
std::optional<double> barrier_height(double p);

struct StepError {
  double step_relative;     // h / a0
  double max_error_first;   // relative error of the central first difference
  double max_error_second;  // relative error of the central second difference
};

struct DerivativeReport {
  std::vector<StepError> steps;
  double order_first;   // least-squares slope of log error vs log h
  double order_second;
  double max_error_first;
  double max_error_second;
};

inline constexpr double kDefaultSteps[] = {1e-3, 1e-4, 1e-5};

/// Compares central differences of the energy with the analytic derivatives
/// on each radius of `radius_grid`, for every step h = step * a0.
///
/// The differences are evaluated in quad precision so that the reported error
/// is the truncation error of the stencil rather than double roundoff. Errors
/// are relative to max(|exact|, scale) with scale 4 pi gamma a0 for dU/da and
/// 4 pi gamma for d2U/da2, since both derivatives cross zero.
///
/// Throws InvalidArgument for fewer than 3 radii, a zero-width grid, a
/// radius not larger than the widest step, or fewer than 2 steps.
DerivativeReport validate_derivatives(std::span<const double> radius_grid,
                                      const model::MediumParams& medium,
                                      const model::ZeroPointModel& model,
                                      const units::ConstantProfile& constants,
                                      std::span<const double> relative_steps = kDefaultSteps);

}  // namespace ebubble::solvers
