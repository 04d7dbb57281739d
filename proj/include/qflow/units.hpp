#pragma once

#include <cmath>
#include <stdexcept>

namespace qflow {

enum class UnitSystem { Atomic, SI };

// CODATA 2018 values, stored once. Everything else is derived from these so
// the table stays internally consistent (the published Bohr radius is rounded
// at the 1e-10 level, which would break the alpha*c*m_e*r0 = hbar identity).
namespace codata {
inline constexpr double alpha = 7.2973525693e-3;   // fine-structure constant
inline constexpr double c = 299792458.0;           // m/s (exact)
inline constexpr double hbar = 1.054571817e-34;    // J s
inline constexpr double m_e = 9.1093837015e-31;    // kg
inline constexpr double e_charge = 1.602176634e-19; // C (exact)
} // namespace codata

struct PhysicalConstants {
  double hbar;     // action
  double m_e;      // electron mass
  double e_charge; // elementary charge
  double c;        // speed of light
  double alpha;    // dimensionless
  double r0;       // Bohr radius

  // Derived scales, expressed in the same system.
  double velocity_unit; // atomic unit of velocity (= alpha * c)
  double length_unit;   // = r0
  double energy_unit;   // Hartree
  double time_unit;     // hbar / Hartree
};

inline PhysicalConstants constants(UnitSystem system) {
  if (system == UnitSystem::Atomic) {
    PhysicalConstants k{};
    k.hbar = 1.0;
    k.m_e = 1.0;
    k.e_charge = 1.0; // Gaussian convention
    k.alpha = codata::alpha;
    k.c = 1.0 / codata::alpha;
    k.r0 = 1.0;
    k.velocity_unit = 1.0;
    k.length_unit = 1.0;
    k.energy_unit = 1.0;
    k.time_unit = 1.0;
    return k;
  }
  PhysicalConstants k{};
  k.hbar = codata::hbar;
  k.m_e = codata::m_e;
  k.e_charge = codata::e_charge;
  k.alpha = codata::alpha;
  k.c = codata::c;
  k.r0 = codata::hbar / (codata::alpha * codata::c * codata::m_e); // 0.529 A
  k.velocity_unit = codata::alpha * codata::c;
  k.length_unit = k.r0;
  k.energy_unit = codata::m_e * k.velocity_unit * k.velocity_unit; // Hartree
  k.time_unit = codata::hbar / k.energy_unit;
  return k;
}

inline double convert_velocity(double value, UnitSystem from, UnitSystem to) {
  if (!std::isfinite(value))
    throw std::domain_error("convert_velocity: non-finite value");
  if (from == to)
    return value;
  // velocity_unit is the atomic velocity unit measured in each system, so a
  // value in `from` units is value / unit_from atomic units.
  const double unit_from = constants(from).velocity_unit;
  const double unit_to = constants(to).velocity_unit;
  return value / unit_from * unit_to;
}

inline double convert_length(double value, UnitSystem from, UnitSystem to) {
  if (!std::isfinite(value))
    throw std::domain_error("convert_length: non-finite value");
  if (from == to)
    return value;
  return value / constants(from).length_unit * constants(to).length_unit;
}

inline double convert_time(double value, UnitSystem from, UnitSystem to) {
  if (!std::isfinite(value))
    throw std::domain_error("convert_time: non-finite value");
  if (from == to)
    return value;
  return value / constants(from).time_unit * constants(to).time_unit;
}

} // namespace qflow
