#pragma once

// Energy of a spherical electron bubble of radius a in a liquid with surface
// tension gamma held at pressure P:
//
//   U(a) = C hbar^2 / (m a^2) + 4 pi a^2 gamma + (4/3) pi a^3 P
//
// With the length scale a0 = (C hbar^2 / (4 pi gamma m))^(1/4) and
//   x = a / a0,   p = P a0 / gamma,   u = U / (4 pi gamma a0^2)
// every instance collapses onto the parameter-free normal form
//
//   u(x) = x^-2 + x^2 + (p/3) x^3.
//
// All quantities are SI unless a name says otherwise.

#include <numbers>
#include <string>
#include <string_view>

#include "ebubble/units.hpp"

namespace ebubble::model {

enum class ZeroPointKind {
  uncertainty_rounded,  // C = 1
  uncertainty_exact,    // C = 27/32
  infinite_well,        // C = pi^2/2
  custom,
};

/// Coefficient C of the hbar^2 / (m a^2) zero-point term.
///
/// The uncertainty-principle estimate takes dx ~ 2a/3, so dp_x ~ 3 hbar / 4a
/// and <p^2> = 3 <p_x^2>, giving 27/32; rounding that to 1 is the usual quick
/// estimate. The ground state of an infinite spherical well gives pi^2/2.
class ZeroPointModel {
 public:
  static ZeroPointModel uncertainty_rounded() noexcept {
    return {ZeroPointKind::uncertainty_rounded, 1.0};
  }
  static ZeroPointModel uncertainty_exact() noexcept {
    return {ZeroPointKind::uncertainty_exact, 27.0 / 32.0};
  }
  static ZeroPointModel infinite_well() noexcept {
    return {ZeroPointKind::infinite_well, std::numbers::pi * std::numbers::pi / 2.0};
  }
  /// Throws InvalidArgument unless coefficient is finite and > 0.
  static ZeroPointModel custom(double coefficient);

  ZeroPointKind kind() const noexcept { return kind_; }
  double coefficient() const noexcept { return coefficient_; }

  friend bool operator==(const ZeroPointModel&, const ZeroPointModel&) = default;

 private:
  ZeroPointModel(ZeroPointKind kind, double coefficient) noexcept
      : kind_(kind), coefficient_(coefficient) {}

  ZeroPointKind kind_;
  double coefficient_;
};

std::string_view to_string(ZeroPointKind kind) noexcept;

double zero_point_coefficient(const ZeroPointModel& model) noexcept;

/// Surface tension and ambient pressure of the liquid.
struct MediumParams {
  double gamma;     // N/m, > 0
  double pressure;  // Pa, any sign
};

struct EnergyBreakdown {
  double zero_point;
  double surface;
  double pressure_work;
  double total;
};

struct DimensionlessState {
  double x;
  double p;
  double u;
  double a0;  // m
};

struct DimensionalState {
  double radius;    // m
  double pressure;  // Pa
  double energy;    // J
};

struct CriticalPoint {
  double radius;    // m
  double pressure;  // Pa, always negative
};

/// Dimensionless normal form and its derivatives. Valid for x > 0.
namespace normal_form {

constexpr double energy(double x, double p) noexcept {
  return 1.0 / (x * x) + x * x + p / 3.0 * x * x * x;
}
constexpr double first_derivative(double x, double p) noexcept {
  return -2.0 / (x * x * x) + 2.0 * x + p * x * x;
}
constexpr double second_derivative(double x, double p) noexcept {
  return 6.0 / (x * x * x * x) + 2.0 + 2.0 * p * x;
}
constexpr double third_derivative(double x, double p) noexcept {
  return -24.0 / (x * x * x * x * x) + 2.0 * p;
}

/// Coalescence point of the minimum and the barrier: u' = u'' = 0.
double critical_x() noexcept;         // 5^(1/4)
double critical_pressure() noexcept;  // -8 * 5^(-5/4)

}  // namespace normal_form

/// gamma = binding energy / spacing^2, returned in N/m.
/// Throws for spacing <= 0 or negative binding energy.
units::Quantity estimate_surface_tension(const units::Quantity& binding_energy,
                                         const units::Quantity& atom_spacing);

/// The generic energy expression, reused with wider types by derivative checks.
template <typename Real>
Real total_energy(Real radius, double gamma, double pressure, double c_hbar2_over_m) {
  const Real pi = Real(std::numbers::pi);
  const Real r2 = radius * radius;
  return Real(c_hbar2_over_m) / r2 + Real(4) * pi * r2 * Real(gamma) +
         Real(4) * pi * r2 * radius * Real(pressure) / Real(3);
}

EnergyBreakdown energy_breakdown(double radius, const MediumParams& medium,
                                 const ZeroPointModel& model,
                                 const units::ConstantProfile& constants);

/// dU/da = -2 C hbar^2 / (m a^3) + 8 pi a gamma + 4 pi a^2 P.
double energy_first_derivative(double radius, const MediumParams& medium,
                               const ZeroPointModel& model,
                               const units::ConstantProfile& constants);

/// d2U/da2 = 6 C hbar^2 / (m a^4) + 8 pi gamma + 8 pi a P.
double energy_second_derivative(double radius, const MediumParams& medium,
                                const ZeroPointModel& model,
                                const units::ConstantProfile& constants);

/// Length scale a0; the equilibrium radius at zero pressure.
double equilibrium_radius_zero_pressure(double gamma, const ZeroPointModel& model,
                                        const units::ConstantProfile& constants);

/// Closed-form spinodal: a_c = 5^(1/4) a0, P_c = -8 gamma / (5 a_c).
CriticalPoint critical_point_closed_form(double gamma, const ZeroPointModel& model,
                                         const units::ConstantProfile& constants);

DimensionlessState nondimensionalize(double radius, const MediumParams& medium,
                                     const ZeroPointModel& model,
                                     const units::ConstantProfile& constants);

/// Inverse of nondimensionalize. Uses state.x and state.u; the pressure is
/// recovered from state.p.
DimensionalState dimensionalize(const DimensionlessState& state, const MediumParams& medium,
                                const ZeroPointModel& model,
                                const units::ConstantProfile& constants);

/// Energy scale 4 pi gamma a0^2 (J).
double energy_scale(double gamma, const ZeroPointModel& model,
                    const units::ConstantProfile& constants);

}  // namespace ebubble::model
