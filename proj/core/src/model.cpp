#include "ebubble/model.hpp"

#include <cmath>
#include <string>

#include "ebubble/error.hpp"

namespace ebubble::model {

namespace {

constexpr double kPi = std::numbers::pi;

void require_positive_radius(double radius) {
  if (!(radius > 0.0) || !std::isfinite(radius))
    throw InvalidArgument("radius must be finite and > 0, got " + std::to_string(radius));
}

void require_positive_gamma(double gamma) {
  if (!(gamma > 0.0) || !std::isfinite(gamma))
    throw InvalidArgument("surface tension must be finite and > 0, got " +
                          std::to_string(gamma));
}

void require_medium(const MediumParams& medium) {
  require_positive_gamma(medium.gamma);
  if (!std::isfinite(medium.pressure))
    throw InvalidArgument("pressure must be finite");
}

double c_hbar2_over_m(const ZeroPointModel& model, const units::ConstantProfile& constants) {
  return model.coefficient() * constants.hbar_squared_over_mass();
}

}  // namespace

ZeroPointModel ZeroPointModel::custom(double coefficient) {
  if (!(coefficient > 0.0) || !std::isfinite(coefficient))
    throw InvalidArgument("custom zero-point coefficient must be finite and > 0, got " +
                          std::to_string(coefficient));
  return {ZeroPointKind::custom, coefficient};
}

std::string_view to_string(ZeroPointKind kind) noexcept {
  switch (kind) {
    case ZeroPointKind::uncertainty_rounded: return "uncertainty_rounded";
    case ZeroPointKind::uncertainty_exact: return "uncertainty_exact";
    case ZeroPointKind::infinite_well: return "infinite_well";
    case ZeroPointKind::custom: return "custom";
  }
  return "unknown";
}

double zero_point_coefficient(const ZeroPointModel& model) noexcept {
  return model.coefficient();
}

namespace normal_form {

double critical_x() noexcept {
  static const double x = std::pow(5.0, 0.25);
  return x;
}

double critical_pressure() noexcept {
  static const double p = -8.0 * std::pow(5.0, -1.25);
  return p;
}

}  // namespace normal_form

units::Quantity estimate_surface_tension(const units::Quantity& binding_energy,
                                         const units::Quantity& atom_spacing) {
  const double energy = binding_energy.in(units::Unit::J);
  const double spacing = atom_spacing.in(units::Unit::m);
  if (!(spacing > 0.0) || !std::isfinite(spacing))
    throw InvalidArgument("atom spacing must be finite and > 0");
  if (!(energy >= 0.0) || !std::isfinite(energy))
    throw InvalidArgument("binding energy must be finite and >= 0");
  return {energy / (spacing * spacing), units::Unit::N_per_m};
}

EnergyBreakdown energy_breakdown(double radius, const MediumParams& medium,
                                 const ZeroPointModel& model,
                                 const units::ConstantProfile& constants) {
  require_positive_radius(radius);
  require_medium(medium);
  const double r2 = radius * radius;
  EnergyBreakdown out{};
  out.zero_point = c_hbar2_over_m(model, constants) / r2;
  out.surface = 4.0 * kPi * r2 * medium.gamma;
  out.pressure_work = 4.0 * kPi * r2 * radius * medium.pressure / 3.0;
  out.total = out.zero_point + out.surface + out.pressure_work;
  return out;
}

double energy_first_derivative(double radius, const MediumParams& medium,
                               const ZeroPointModel& model,
                               const units::ConstantProfile& constants) {
  require_positive_radius(radius);
  require_medium(medium);
  return -2.0 * c_hbar2_over_m(model, constants) / (radius * radius * radius) +
         8.0 * kPi * radius * medium.gamma + 4.0 * kPi * radius * radius * medium.pressure;
}

double energy_second_derivative(double radius, const MediumParams& medium,
                                const ZeroPointModel& model,
                                const units::ConstantProfile& constants) {
  require_positive_radius(radius);
  require_medium(medium);
  const double r2 = radius * radius;
  return 6.0 * c_hbar2_over_m(model, constants) / (r2 * r2) + 8.0 * kPi * medium.gamma +
         8.0 * kPi * radius * medium.pressure;
}

double equilibrium_radius_zero_pressure(double gamma, const ZeroPointModel& model,
                                        const units::ConstantProfile& constants) {
  require_positive_gamma(gamma);
  // Normal form: the P = 0 minimum sits at x = 1, so a = a0 exactly.
  return std::pow(c_hbar2_over_m(model, constants) / (4.0 * kPi * gamma), 0.25);
}

CriticalPoint critical_point_closed_form(double gamma, const ZeroPointModel& model,
                                         const units::ConstantProfile& constants) {
  const double a0 = equilibrium_radius_zero_pressure(gamma, model, constants);
  return {normal_form::critical_x() * a0, normal_form::critical_pressure() * gamma / a0};
}

double energy_scale(double gamma, const ZeroPointModel& model,
                    const units::ConstantProfile& constants) {
  const double a0 = equilibrium_radius_zero_pressure(gamma, model, constants);
  return 4.0 * kPi * gamma * a0 * a0;
}

DimensionlessState nondimensionalize(double radius, const MediumParams& medium,
                                     const ZeroPointModel& model,
                                     const units::ConstantProfile& constants) {
  require_positive_radius(radius);
  require_medium(medium);
  const double a0 = equilibrium_radius_zero_pressure(medium.gamma, model, constants);
  const long double a0l = a0;
  const long double escale = 4.0L * std::numbers::pi_v<long double> * medium.gamma * a0l * a0l;
  const double total = energy_breakdown(radius, medium, model, constants).total;

  DimensionlessState s{};
  s.a0 = a0;
  s.x = static_cast<double>(radius / a0l);
  s.p = static_cast<double>(medium.pressure * a0l / medium.gamma);
  s.u = static_cast<double>(total / escale);
  return s;
}

DimensionalState dimensionalize(const DimensionlessState& state, const MediumParams& medium,
                                const ZeroPointModel& model,
                                const units::ConstantProfile& constants) {
  require_positive_gamma(medium.gamma);
  if (!(state.x > 0.0)) throw InvalidArgument("dimensionless radius must be > 0");
  const long double a0 = equilibrium_radius_zero_pressure(medium.gamma, model, constants);
  const long double escale = 4.0L * std::numbers::pi_v<long double> * medium.gamma * a0 * a0;

  DimensionalState d{};
  d.radius = static_cast<double>(state.x * a0);
  d.pressure = static_cast<double>(state.p * medium.gamma / a0);
  d.energy = static_cast<double>(state.u * escale);
  return d;
}

}  // namespace ebubble::model
