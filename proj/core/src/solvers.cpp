#include "ebubble/solvers.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "ebubble/error.hpp"

namespace ebubble::solvers {

namespace nf = model::normal_form;

namespace {

struct Bracket {
  double lo;
  double hi;
};

struct RefinedRoot {
  double x;
  int iterations;
};

BisectionResult bisect_impl(const std::function<double(double)>& f, double& lo, double& hi,
                            double xtol, int max_iterations) {
  double flo = f(lo);
  double fhi = f(hi);
  if (flo == 0.0) return {lo, 0};
  if (fhi == 0.0) return {hi, 0};
  if ((flo < 0.0) == (fhi < 0.0))
    throw SolverError("bisection: root not bracketed on [" + std::to_string(lo) + ", " +
                      std::to_string(hi) + "]");
  int it = 0;
  while (it < max_iterations && hi - lo > xtol) {
    const double mid = lo + 0.5 * (hi - lo);
    if (mid <= lo || mid >= hi) break;
    ++it;
    const double fmid = f(mid);
    if (fmid == 0.0) {
      lo = hi = mid;
      break;
    }
    if ((fmid < 0.0) == (flo < 0.0)) {
      lo = mid;
      flo = fmid;
    } else {
      hi = mid;
    }
  }
  return {lo + 0.5 * (hi - lo), it};
}

// Root of u' on a sign-changing bracket: bisection to kRootTolerance, then a
// few Newton steps that are discarded if they leave the final bracket.
RefinedRoot refine_stationary_root(double p, Bracket b) {
  const auto slope = [p](double x) { return nf::first_derivative(x, p); };
  double lo = b.lo;
  double hi = b.hi;
  auto res = bisect_impl(slope, lo, hi, kRootTolerance, 400);
  double x = res.root;
  for (int i = 0; i < kNewtonPolishSteps; ++i) {
    const double curvature = nf::second_derivative(x, p);
    if (curvature == 0.0) break;
    const double next = x - nf::first_derivative(x, p) / curvature;
    if (!(next >= lo && next <= hi)) break;
    x = next;
  }
  return {x, res.iterations};
}

// Smallest lower bound (starting at kSearchLower) where u' < 0.
double lower_search_bound(double p) {
  double lo = kSearchLower;
  while (nf::first_derivative(lo, p) >= 0.0) lo *= 0.1;
  return lo;
}

// For p < 0 the nontrivial zero of the large-x asymptote 2x + p x^2 is near
// -2/p; 4/|p| is safely past it.
double upper_search_bound(double p) {
  return p < 0.0 ? std::max(10.0, 4.0 / -p) : 10.0;
}

bool has_barrier(double p) { return !find_stationary_points(p).points.empty(); }

using Quad = boost::multiprecision::cpp_bin_float_quad;

double least_squares_slope(std::span<const double> xs, std::span<const double> ys) {
  const double n = static_cast<double>(xs.size());
  const double mx = std::accumulate(xs.begin(), xs.end(), 0.0) / n;
  const double my = std::accumulate(ys.begin(), ys.end(), 0.0) / n;
  double sxy = 0.0;
  double sxx = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sxy += (xs[i] - mx) * (ys[i] - my);
    sxx += (xs[i] - mx) * (xs[i] - mx);
  }
  return sxy / sxx;
}

}  // namespace

BisectionResult bisect(const std::function<double(double)>& f, double lo, double hi,
                       double xtol, int max_iterations) {
  if (!(lo < hi)) throw SolverError("bisection: empty interval");
  return bisect_impl(f, lo, hi, xtol, max_iterations);
}

std::string_view to_string(StationaryKind kind) noexcept {
  switch (kind) {
    case StationaryKind::minimum: return "minimum";
    case StationaryKind::maximum: return "maximum";
    case StationaryKind::degenerate: return "degenerate";
  }
  return "unknown";
}

std::optional<double> inflection_point(double p) {
  if (!std::isfinite(p)) throw InvalidArgument("pressure must be finite");
  if (p >= 0.0) return std::nullopt;
  // u''' < 0 for p < 0, so u'' falls monotonically from +inf to -inf.
  double lo = kSearchLower;
  while (nf::second_derivative(lo, p) <= 0.0) lo *= 0.1;
  double hi = upper_search_bound(p);
  while (nf::second_derivative(hi, p) >= 0.0) hi *= 2.0;
  const auto curvature = [p](double x) { return nf::second_derivative(x, p); };
  return bisect_impl(curvature, lo, hi, 0.0, 400).root;
}

StationaryPointSet find_stationary_points(double p) {
  if (!std::isfinite(p)) throw InvalidArgument("pressure must be finite");
  StationaryPointSet out{{}, p};

  if (p >= 0.0) {
    // Convex landscape: u' increases monotonically, one minimum.
    double hi = upper_search_bound(p);
    while (nf::first_derivative(hi, p) <= 0.0) hi *= 2.0;
    const auto root = refine_stationary_root(p, {lower_search_bound(p), hi});
    out.points.push_back({root.x, StationaryKind::minimum});
    return out;
  }

  // u' is unimodal with its maximum at the inflection point.
  const double xi = *inflection_point(p);
  const double peak = nf::first_derivative(xi, p);
  if (std::abs(peak) <= kDegenerateSlope) {
    out.points.push_back({xi, StationaryKind::degenerate});
    return out;
  }
  if (peak < 0.0) return out;

  double lo = lower_search_bound(p);
  while (lo >= xi) lo *= 0.1;
  double hi = upper_search_bound(p);
  while (nf::first_derivative(hi, p) >= 0.0) hi *= 2.0;

  const auto left = refine_stationary_root(p, {lo, xi});
  const auto right = refine_stationary_root(p, {xi, hi});
  const double c_left = nf::second_derivative(left.x, p);
  const double c_right = nf::second_derivative(right.x, p);
  if (std::abs(c_left) < kDegenerateCurvature || std::abs(c_right) < kDegenerateCurvature) {
    out.points.push_back({xi, StationaryKind::degenerate});
    return out;
  }
  out.points.push_back({left.x, StationaryKind::minimum});
  out.points.push_back({right.x, StationaryKind::maximum});
  return out;
}

CriticalSolution critical_pressure_numeric_dimensionless() {
  double lo = kPressureBracketLow;
  double hi = kPressureBracketHigh;
  if (has_barrier(lo) || !has_barrier(hi))
    throw SolverError("critical pressure: bracket [" + std::to_string(lo) + ", " +
                      std::to_string(hi) + "] does not straddle the coalescence");

  int it = 0;
  while (it < kMaxPressureIterations) {
    const double mid = lo + 0.5 * (hi - lo);
    if (mid <= lo || mid >= hi) break;
    ++it;
    if (has_barrier(mid))
      hi = mid;
    else
      lo = mid;
  }

  CriticalSolution s{};
  s.p_critical = hi;
  s.x_critical = *inflection_point(hi);
  s.iterations = it;
  s.residual_first = std::abs(nf::first_derivative(s.x_critical, s.p_critical));
  s.residual_second = std::abs(nf::second_derivative(s.x_critical, s.p_critical));
  s.radius = 0.0;
  s.pressure = 0.0;
  return s;
}

CriticalSolution critical_pressure_numeric(double gamma, const model::ZeroPointModel& model,
                                           const units::ConstantProfile& constants) {
  const double a0 = model::equilibrium_radius_zero_pressure(gamma, model, constants);
  CriticalSolution s = critical_pressure_numeric_dimensionless();
  s.radius = s.x_critical * a0;
  s.pressure = s.p_critical * gamma / a0;

  // Residuals re-evaluated on the dimensional derivatives, in units of the
  // natural derivative scales.
  const double four_pi_gamma = 4.0 * std::numbers::pi * gamma;
  const model::MediumParams medium{gamma, s.pressure};
  s.residual_first =
      std::abs(model::energy_first_derivative(s.radius, medium, model, constants)) /
      (four_pi_gamma * a0);
  s.residual_second =
      std::abs(model::energy_second_derivative(s.radius, medium, model, constants)) /
      four_pi_gamma;
  return s;
}

std::optional<double> barrier_height(double p) {
  const auto set = find_stationary_points(p);
  if (set.points.size() == 2)
    return nf::energy(set.points[1].x, p) - nf::energy(set.points[0].x, p);
  if (set.points.size() == 1 && set.points[0].kind == StationaryKind::degenerate) return 0.0;
  return std::nullopt;
}

DerivativeReport validate_derivatives(std::span<const double> radius_grid,
                                      const model::MediumParams& medium,
                                      const model::ZeroPointModel& model,
                                      const units::ConstantProfile& constants,
                                      std::span<const double> relative_steps) {
  if (radius_grid.size() < 3)
    throw InvalidArgument("derivative validation needs at least 3 radii, got " +
                          std::to_string(radius_grid.size()));
  if (relative_steps.size() < 2)
    throw InvalidArgument("derivative validation needs at least 2 step sizes");
  const auto [rmin, rmax] = std::minmax_element(radius_grid.begin(), radius_grid.end());
  if (!(*rmax > *rmin)) throw InvalidArgument("derivative validation grid has zero width");

  const double a0 = model::equilibrium_radius_zero_pressure(medium.gamma, model, constants);
  const double widest = *std::max_element(relative_steps.begin(), relative_steps.end());
  for (double s : relative_steps)
    if (!(s > 0.0)) throw InvalidArgument("finite-difference steps must be > 0");
  for (double r : radius_grid)
    if (!(r > widest * a0) || !std::isfinite(r))
      throw InvalidArgument("every radius must exceed the widest finite-difference step");

  const double c_hbar2_over_m = model.coefficient() * constants.hbar_squared_over_mass();
  const double scale_first = 4.0 * std::numbers::pi * medium.gamma * a0;
  const double scale_second = 4.0 * std::numbers::pi * medium.gamma;
  const auto energy = [&](const Quad& r) {
    return model::total_energy<Quad>(r, medium.gamma, medium.pressure, c_hbar2_over_m);
  };

  DerivativeReport report{};
  std::vector<double> log_h;
  std::vector<double> log_e1;
  std::vector<double> log_e2;
  for (double step : relative_steps) {
    const Quad h = Quad(step) * Quad(a0);
    StepError row{step, 0.0, 0.0};
    for (double r : radius_grid) {
      const Quad plus = energy(Quad(r) + h);
      const Quad mid = energy(Quad(r));
      const Quad minus = energy(Quad(r) - h);
      const double fd1 = static_cast<double>((plus - minus) / (2 * h));
      const double fd2 = static_cast<double>((plus - 2 * mid + minus) / (h * h));
      const double d1 = model::energy_first_derivative(r, medium, model, constants);
      const double d2 = model::energy_second_derivative(r, medium, model, constants);
      row.max_error_first =
          std::max(row.max_error_first, std::abs(fd1 - d1) / std::max(std::abs(d1), scale_first));
      row.max_error_second = std::max(row.max_error_second,
                                      std::abs(fd2 - d2) / std::max(std::abs(d2), scale_second));
    }
    report.steps.push_back(row);
    log_h.push_back(std::log(step));
    log_e1.push_back(std::log(std::max(row.max_error_first, 1e-300)));
    log_e2.push_back(std::log(std::max(row.max_error_second, 1e-300)));
    report.max_error_first = std::max(report.max_error_first, row.max_error_first);
    report.max_error_second = std::max(report.max_error_second, row.max_error_second);
  }
  report.order_first = least_squares_slope(log_h, log_e1);
  report.order_second = least_squares_slope(log_h, log_e2);
  return report;
}

}  // namespace ebubble::solvers
