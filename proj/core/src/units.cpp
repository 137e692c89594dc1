#include "ebubble/units.hpp"

#include <string>

#include "ebubble/error.hpp"

namespace ebubble::units {

namespace {

constexpr long double kEv = 1.602176634e-19L;

struct UnitInfo {
  Unit unit;
  Dimension dimension;
  std::string_view tag;
  long double si;
};

// clang-format off
constexpr std::array<UnitInfo, kAllUnits.size()> kTable{{
    {Unit::m,           Dimension::length,                "m",           1.0L},
    {Unit::cm,          Dimension::length,                "cm",          1.0e-2L},
    {Unit::angstrom,    Dimension::length,                "angstrom",    1.0e-10L},
    {Unit::kg,          Dimension::mass,                  "kg",          1.0L},
    {Unit::g,           Dimension::mass,                  "g",           1.0e-3L},
    {Unit::J,           Dimension::energy,                "J",           1.0L},
    {Unit::erg,         Dimension::energy,                "erg",         1.0e-7L},
    {Unit::eV,          Dimension::energy,                "eV",          kEv},
    {Unit::Pa,          Dimension::pressure,              "Pa",          1.0L},
    {Unit::bar,         Dimension::pressure,              "bar",         1.0e5L},
    {Unit::dyn_per_cm2, Dimension::pressure,              "dyn_per_cm2", 1.0e-1L},
    {Unit::N_per_m,     Dimension::surface_tension,       "N_per_m",     1.0L},
    {Unit::erg_per_cm2, Dimension::surface_tension,       "erg_per_cm2", 1.0e-3L},
    {Unit::eV_per_cm2,  Dimension::surface_tension,       "eV_per_cm2",  kEv * 1.0e4L},
    {Unit::per_J,       Dimension::inverse_pressure_work, "per_J",       1.0L},
    {Unit::per_erg,     Dimension::inverse_pressure_work, "per_erg",     1.0e7L},
    {Unit::per_eV,      Dimension::inverse_pressure_work, "per_eV",      1.0L / kEv},
}};
// clang-format on

constexpr const UnitInfo& info(Unit unit) noexcept {
  return kTable[static_cast<std::size_t>(unit)];
}

static_assert([] {
  for (std::size_t i = 0; i < kTable.size(); ++i)
    if (static_cast<std::size_t>(kTable[i].unit) != i) return false;
  return true;
}());

std::string accepted_tags() {
  std::string out;
  for (const auto& row : kTable) {
    if (!out.empty()) out += ", ";
    out += row.tag;
  }
  return out;
}

ConstantProfile make_precise() {
  constexpr double hbar = 1.054571817e-34;
  constexpr double mass = 9.1093837015e-31;
  return {ProfileName::precise, hbar, mass, hbar * kSpeedOfLight,
          mass * kSpeedOfLight * kSpeedOfLight};
}

ConstantProfile make_paper_rounded() {
  constexpr double hbar_c = 2.0e-5 * kElectronVolt * 1.0e-2;  // 2e-5 eV cm
  constexpr double mass_energy = 5.0e5 * kElectronVolt;       // 5e5 eV
  return {ProfileName::paper_rounded, hbar_c / kSpeedOfLight,
          mass_energy / (kSpeedOfLight * kSpeedOfLight), hbar_c, mass_energy};
}

}  // namespace

Dimension dimension_of(Unit unit) noexcept { return info(unit).dimension; }

Unit si_unit(Dimension dimension) noexcept {
  switch (dimension) {
    case Dimension::length: return Unit::m;
    case Dimension::mass: return Unit::kg;
    case Dimension::energy: return Unit::J;
    case Dimension::pressure: return Unit::Pa;
    case Dimension::surface_tension: return Unit::N_per_m;
    case Dimension::inverse_pressure_work: return Unit::per_J;
  }
  return Unit::m;
}

std::string_view to_string(Unit unit) noexcept { return info(unit).tag; }

std::string_view to_string(Dimension dimension) noexcept {
  switch (dimension) {
    case Dimension::length: return "length";
    case Dimension::mass: return "mass";
    case Dimension::energy: return "energy";
    case Dimension::pressure: return "pressure";
    case Dimension::surface_tension: return "surface_tension";
    case Dimension::inverse_pressure_work: return "inverse_pressure_work";
  }
  return "unknown";
}

std::optional<Unit> parse_unit(std::string_view tag) noexcept {
  for (const auto& row : kTable)
    if (row.tag == tag) return row.unit;
  return std::nullopt;
}

Unit require_unit(std::string_view tag) {
  if (auto unit = parse_unit(tag)) return *unit;
  throw InvalidArgument("unknown unit '" + std::string(tag) + "' (accepted: " +
                        accepted_tags() + ")");
}

long double si_factor(Unit unit) noexcept { return info(unit).si; }

double Quantity::in(Unit target) const {
  if (dimension_of(target) != dimension()) {
    throw DimensionMismatch("cannot convert " + std::string(to_string(dimension())) +
                            " (" + std::string(to_string(unit_)) + ") to " +
                            std::string(to_string(dimension_of(target))) + " (" +
                            std::string(to_string(target)) + ")");
  }
  if (target == unit_) return value_;
  return static_cast<double>(static_cast<long double>(value_) * si_factor(unit_) /
                             si_factor(target));
}

double Quantity::in_si() const noexcept {
  return static_cast<double>(static_cast<long double>(value_) * si_factor(unit_));
}

Quantity convert(const Quantity& q, Unit target_unit) {
  return {q.in(target_unit), target_unit};
}

std::string_view to_string(ProfileName name) noexcept {
  return name == ProfileName::precise ? "precise" : "paper_rounded";
}

std::optional<ProfileName> parse_profile(std::string_view tag) noexcept {
  if (tag == "precise") return ProfileName::precise;
  if (tag == "paper_rounded") return ProfileName::paper_rounded;
  return std::nullopt;
}

const ConstantProfile& constants(ProfileName name) noexcept {
  static const ConstantProfile precise = make_precise();
  static const ConstantProfile rounded = make_paper_rounded();
  return name == ProfileName::precise ? precise : rounded;
}

const ConstantProfile& constants(std::string_view tag) {
  if (auto name = parse_profile(tag)) return constants(*name);
  throw InvalidArgument("unknown constants profile '" + std::string(tag) +
                        "' (accepted: precise, paper_rounded)");
}

}  // namespace ebubble::units
