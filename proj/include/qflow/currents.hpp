#pragma once

#include <cmath>
#include <stdexcept>

#include "qflow/eigenstates.hpp"
#include "qflow/errors.hpp"
#include "qflow/geometry.hpp"
#include "qflow/units.hpp"

namespace qflow {

// Constant spin vector in Cartesian coordinates, units of action.
// Physical spin eigenstates have |s| = hbar/2 (= 1/2 in atomic units) or 0,
// but arbitrary constant vectors are accepted.
struct SpinVector {
  Vec3 s;

  static SpinVector up() { return {{0.0, 0.0, 0.5}}; }
  static SpinVector down() { return {{0.0, 0.0, -0.5}}; }
  static SpinVector none() { return {{0.0, 0.0, 0.0}}; }

  // z-spin aligned with sgn(m), m = 0 counted as positive
  static SpinVector for_magnetic_number(int m) {
    return m >= 0 ? up() : down();
  }
};

// Density threshold below which v = J/rho is treated as undefined. The
// threshold, not an exact zero test, is what turns each node into a small
// forbidden neighborhood (e.g. around r = 2 r0 for the 2s state).
inline double default_node_tolerance() { return 1e-12; }

// Classical Schrodinger current J1 = (rho / m_e) grad S.
// For hydrogen-like psi_{nlm} this is (rho/m_e) m hbar/(r sin theta) u_phi;
// on the polar axis the rho prefactor vanishes faster than the divergence,
// so the limit (the zero vector) is returned there.
inline SphericalVector schrodinger_current_j1(const SchrodingerState& state,
                                              const SphericalPoint& p) {
  validate_point(p);
  if (state.qn().m == 0)
    return {0.0, 0.0, 0.0};
  const double st = std::sin(p.theta);
  if (p.r * st == 0.0) {
    // rho ~ sin^{2|m|}(theta) kills the 1/(r sin theta) pole for |m| >= 1
    return {0.0, 0.0, 0.0};
  }
  const double rho = state.rho(p);
  return {0.0, 0.0, rho * static_cast<double>(state.qn().m) / (p.r * st)};
}

// Gordon current J2 = (1/m_e) grad(rho) x s, the cross product taken in the
// local right-handed basis (u_r, u_theta, u_phi).
inline SphericalVector gordon_current_j2(const SchrodingerState& state,
                                         const SpinVector& spin,
                                         const SphericalPoint& p) {
  validate_point(p);
  if (spin.s.norm() == 0.0)
    return {0.0, 0.0, 0.0};
  const SphericalVector grad_rho = state.grad_rho(p);
  const SphericalVector s_local = cartesian_to_local(spin.s, p);
  return grad_rho.cross(s_local); // m_e = 1 in atomic units
}

inline SphericalVector total_current(const SchrodingerState& state,
                                     const SpinVector& spin,
                                     const SphericalPoint& p) {
  return schrodinger_current_j1(state, p) + gordon_current_j2(state, spin, p);
}

// Flow velocity v = (J1 + J2) / rho.
inline SphericalVector velocity(const SchrodingerState& state,
                                const SpinVector& spin,
                                const SphericalPoint& p,
                                double node_tolerance =
                                    default_node_tolerance()) {
  const double rho = state.rho(p);
  if (!(rho > node_tolerance) || !(rho > 1e-300))
    throw node_error("velocity: density below node tolerance at " +
                     state.label());
  return total_current(state, spin, p) / rho;
}

// Dirac flow velocity, v = 2 c f g (ad - bc) / rho u_phi.
inline SphericalVector dirac_velocity(const DiracHydrogenState& state,
                                      const SphericalPoint& p,
                                      double node_tolerance =
                                          default_node_tolerance()) {
  validate_point(p);
  if (p.r <= 0.0)
    throw std::domain_error("dirac_velocity: r must be positive");
  const double rho = state.rho(p);
  if (!(rho > node_tolerance) || !(rho > 1e-300))
    throw node_error("dirac_velocity: density below node tolerance");
  const DiracAngular w = state.angular(p.theta);
  const double c = 1.0 / codata::alpha; // atomic units
  const double fg = state.f(p.r) * state.g(p.r);
  return {0.0, 0.0, 2.0 * c * fg * (w.a * w.d - w.b * w.c) / rho};
}

// Closed-form reference velocities (atomic units, alpha*c = 1).
// The trailing sign encodes the spin orientation.
enum class ReferenceLabel {
  H1sPlus,
  H1sMinus,
  H2sPlus,
  H2sMinus,
  H2p0Plus,
  H2p0Minus,
  H2p1,
  H2pMinus1,
  OscGroundPlus,
  OscGroundMinus,
};

inline SphericalVector reference_velocity(ReferenceLabel label,
                                          const SphericalPoint& p,
                                          double omega = 1.0) {
  validate_point(p);
  const double st = std::sin(p.theta);
  const double alpha_c = 1.0;
  switch (label) {
  case ReferenceLabel::H1sPlus:
    return {0.0, 0.0, alpha_c * st};
  case ReferenceLabel::H1sMinus:
    return {0.0, 0.0, -alpha_c * st};
  case ReferenceLabel::H2sPlus:
  case ReferenceLabel::H2sMinus: {
    const double denom = 1.0 - 0.5 * p.r; // node at r = 2 r0
    if (denom == 0.0)
      throw node_error("reference_velocity: 2s singular at r = 2 r0");
    const double v = 0.5 * alpha_c * (1.0 + 1.0 / denom) * st;
    return {0.0, 0.0, label == ReferenceLabel::H2sPlus ? v : -v};
  }
  case ReferenceLabel::H2p0Plus:
    return {0.0, 0.0, 0.5 * alpha_c * st};
  case ReferenceLabel::H2p0Minus:
    return {0.0, 0.0, -0.5 * alpha_c * st};
  case ReferenceLabel::H2p1:
    return {0.0, 0.0, 0.5 * alpha_c * st};
  case ReferenceLabel::H2pMinus1:
    return {0.0, 0.0, -0.5 * alpha_c * st};
  // Stated closed form for the oscillator ground state with spin up is
  // -omega r sin(theta) u_phi; spin down flips the sign. Note velocity()
  // applied to the same state yields +omega r sin(theta) for spin up --
  // see the comparison tests.
  case ReferenceLabel::OscGroundPlus:
    return {0.0, 0.0, -omega * p.r * st};
  case ReferenceLabel::OscGroundMinus:
    return {0.0, 0.0, omega * p.r * st};
  }
  throw std::domain_error("reference_velocity: unknown label");
}

} // namespace qflow
