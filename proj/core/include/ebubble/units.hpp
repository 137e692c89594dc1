#pragma once

// Physical quantities tagged with a dimension and a unit.
//
// Everything inside the library works in SI (m, kg, J, Pa, N/m). The other
// units exist only so that inputs and outputs can be expressed the way they
// are usually quoted for liquid helium (angstrom, erg/cm^2, eV, bar).

#include <array>
#include <optional>
#include <string>
#include <string_view>

namespace ebubble::units {

enum class Dimension {
  length,
  mass,
  energy,
  pressure,
  surface_tension,
  inverse_pressure_work,  // 1 / energy
};

enum class Unit {
  // length
  m,
  cm,
  angstrom,
  // mass
  kg,
  g,
  // energy
  J,
  erg,
  eV,
  // pressure
  Pa,
  bar,
  dyn_per_cm2,
  // surface tension
  N_per_m,
  erg_per_cm2,
  eV_per_cm2,
  // inverse energy
  per_J,
  per_erg,
  per_eV,
};

inline constexpr std::array kAllUnits{
    Unit::m,       Unit::cm,          Unit::angstrom,    Unit::kg,
    Unit::g,       Unit::J,           Unit::erg,         Unit::eV,
    Unit::Pa,      Unit::bar,         Unit::dyn_per_cm2, Unit::N_per_m,
    Unit::erg_per_cm2, Unit::eV_per_cm2, Unit::per_J,   Unit::per_erg,
    Unit::per_eV,
};

/// Exact SI value of one electron volt in joules.
inline constexpr double kElectronVolt = 1.602176634e-19;
/// Speed of light in vacuum, m/s (exact).
inline constexpr double kSpeedOfLight = 299792458.0;

Dimension dimension_of(Unit unit) noexcept;
/// SI unit of a dimension (m, kg, J, Pa, N_per_m, per_J).
Unit si_unit(Dimension dimension) noexcept;

std::string_view to_string(Unit unit) noexcept;
std::string_view to_string(Dimension dimension) noexcept;

/// Parses the unit tags used on the command line and in file headers.
std::optional<Unit> parse_unit(std::string_view tag) noexcept;
/// Like parse_unit but throws InvalidArgument listing the accepted tags.
Unit require_unit(std::string_view tag);

/// Value of one `unit` expressed in the SI unit of its dimension.
long double si_factor(Unit unit) noexcept;

/// A value carrying its unit. Immutable.
class Quantity {
 public:
  constexpr Quantity(double value, Unit unit) noexcept : value_(value), unit_(unit) {}

  static Quantity si(double value, Dimension dimension) noexcept {
    return {value, si_unit(dimension)};
  }

  constexpr double value() const noexcept { return value_; }
  constexpr Unit unit() const noexcept { return unit_; }
  Dimension dimension() const noexcept { return dimension_of(unit_); }

  /// Numeric value in `target`. Throws DimensionMismatch across dimensions.
  double in(Unit target) const;
  double in_si() const noexcept;

  friend bool operator==(const Quantity&, const Quantity&) = default;

 private:
  double value_;
  Unit unit_;
};

/// Re-express `q` in `target_unit`. The conversion is a single rounding of
/// value * factor(from) / factor(to), so A -> B -> A is exact to 1 ulp.
Quantity convert(const Quantity& q, Unit target_unit);

enum class ProfileName { precise, paper_rounded };

std::string_view to_string(ProfileName name) noexcept;
std::optional<ProfileName> parse_profile(std::string_view tag) noexcept;

/// Fundamental constants entering the zero-point energy.
///
/// `precise`: CODATA 2018 recommended values,
///   hbar = 1.054571817e-34 J s (exact digits as published),
///   m_e  = 9.1093837015e-31 kg.
/// `paper_rounded`: the back-of-envelope values hbar*c = 2e-5 eV cm and
///   m_e c^2 = 5e5 eV, so hbar^2/m_e = 8e-16 eV cm^2.
struct ConstantProfile {
  ProfileName name;
  double hbar;           // J s
  double electron_mass;  // kg
  double hbar_c;         // J m
  double mass_energy;    // J  (m_e c^2)

  /// hbar^2 / m_e in J m^2, formed as (hbar c)^2 / (m_e c^2).
  double hbar_squared_over_mass() const noexcept {
    return hbar_c * hbar_c / mass_energy;
  }
  Quantity electron_mass_quantity() const noexcept { return {electron_mass, Unit::kg}; }

  friend bool operator==(const ConstantProfile&, const ConstantProfile&) = default;
};

const ConstantProfile& constants(ProfileName name) noexcept;
/// Throws InvalidArgument for an unknown profile tag.
const ConstantProfile& constants(std::string_view tag);

}  // namespace ebubble::units
