#pragma once

#include <cmath>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "qflow/currents.hpp"
#include "qflow/eigenstates.hpp"
#include "qflow/errors.hpp"
#include "qflow/geometry.hpp"
#include "qflow/quadrature.hpp"

namespace qflow {

enum class RadialRule { MappedGaussLegendre, GaussLaguerre };

struct QuadratureSpec {
  RadialRule radial_rule = RadialRule::MappedGaussLegendre;
  int n_radial = 160;
  int n_theta = 64; // Gauss-Legendre in cos(theta)
  int n_phi = 64;   // periodic trapezoid
  double r_min = 0.0;
  double r_max = 60.0;

  void validate() const {
    if (n_radial < 8 || n_theta < 8 || n_phi < 1)
      throw std::domain_error("QuadratureSpec: n_points >= 8 required");
    if (r_min < 0.0 || r_max <= r_min)
      throw std::domain_error("QuadratureSpec: bad radial interval");
  }
};

namespace detail {
inline QuadratureRule radial_rule_for(const QuadratureSpec& spec) {
  if (spec.radial_rule == RadialRule::GaussLaguerre)
    return gauss_laguerre(spec.n_radial);
  // Composite mapped Gauss-Legendre: panels concentrate points where the
  // bound-state densities live, the tail panel covers the exponential decay.
  const double lo = spec.r_min, hi = spec.r_max;
  std::vector<double> edges{lo};
  for (double e : {1.0, 4.0, 12.0, 30.0})
    if (e > lo && e < hi)
      edges.push_back(e);
  edges.push_back(hi);
  const int panels = static_cast<int>(edges.size()) - 1;
  const int per_panel = std::max(8, spec.n_radial / panels);
  QuadratureRule out;
  for (int s = 0; s < panels; ++s) {
    const QuadratureRule q = gauss_legendre(per_panel, edges[s], edges[s + 1]);
    out.nodes.insert(out.nodes.end(), q.nodes.begin(), q.nodes.end());
    out.weights.insert(out.weights.end(), q.weights.begin(), q.weights.end());
  }
  return out;
}
} // namespace detail

// Tensor-product quadrature of int f(p) r^2 sin(theta) dr dtheta dphi.
inline double
integrate_scalar(const std::function<double(const SphericalPoint&)>& f,
                 const QuadratureSpec& spec) {
  spec.validate();
  const QuadratureRule qr = detail::radial_rule_for(spec);
  const QuadratureRule qt = gauss_legendre(spec.n_theta, -1.0, 1.0);
  const QuadratureRule qp = periodic_trapezoid(spec.n_phi);
  double sum = 0.0;
  for (size_t i = 0; i < qr.nodes.size(); ++i) {
    const double r = qr.nodes[i];
    if (r < spec.r_min || r > spec.r_max)
      continue; // Gauss-Laguerre nodes beyond the stated window
    double shell = 0.0;
    for (size_t j = 0; j < qt.nodes.size(); ++j) {
      const double theta = std::acos(qt.nodes[j]);
      double ring = 0.0;
      for (size_t k = 0; k < qp.nodes.size(); ++k) {
        const double v = f({r, theta, qp.nodes[k]});
        if (!std::isfinite(v))
          throw numeric_error("integrate: non-finite integrand at r=" +
                              std::to_string(r) + " theta=" +
                              std::to_string(theta) + " phi=" +
                              std::to_string(qp.nodes[k]));
        ring += qp.weights[k] * v;
      }
      shell += qt.weights[j] * ring; // sin(theta) absorbed by d(cos theta)
    }
    sum += qr.weights[i] * r * r * shell;
  }
  return sum;
}

inline double
integrate_density(const std::function<double(const SphericalPoint&)>& rho,
                  const QuadratureSpec& spec) {
  return integrate_scalar(rho, spec);
}

using FieldFn = std::function<SphericalVector(const SphericalPoint&)>;
using VelocityFn = FieldFn;

// Spherical-coordinate divergence by central differences:
//   div F = 1/r^2 d(r^2 F_r)/dr + 1/(r sin) d(sin F_th)/dth
//         + 1/(r sin) dF_phi/dphi
inline double divergence(const FieldFn& field, const SphericalPoint& p,
                         double h) {
  validate_point(p);
  if (h <= 0.0)
    throw std::domain_error("divergence: h must be positive");
  if (p.r <= h)
    throw std::domain_error("divergence: point too close to the origin");
  const double st = std::sin(p.theta);
  if (st <= h / p.r)
    throw std::domain_error("divergence: point too close to the polar axis");

  const auto fr = [&](double r) {
    return r * r * field({r, p.theta, p.phi}).v_r;
  };
  const auto ft = [&](double th) {
    return std::sin(th) * field({p.r, th, p.phi}).v_theta;
  };
  const auto fp = [&](double ph) {
    double w = ph;
    if (w < 0.0)
      w += 2.0 * M_PI;
    if (w >= 2.0 * M_PI)
      w -= 2.0 * M_PI;
    return field({p.r, p.theta, w}).v_phi;
  };

  const double ht = h / p.r;          // angular steps matched to length h
  const double hp = h / (p.r * st);
  const double d_r = (fr(p.r + h) - fr(p.r - h)) / (2.0 * h);
  const double d_t = (ft(p.theta + ht) - ft(p.theta - ht)) / (2.0 * ht);
  const double d_p = (fp(p.phi + hp) - fp(p.phi - hp)) / (2.0 * hp);
  const double div =
      d_r / (p.r * p.r) + d_t / (p.r * st) + d_p / (p.r * st);
  if (!std::isfinite(div))
    throw numeric_error("divergence: non-finite result");
  return div;
}

// Mean orbital angular momentum carried by the Gordon current:
//   <L2> = int r x (grad rho x s) d^3 r  (equals 2 s for normalized rho).
inline Vec3 mean_gordon_angular_momentum(const SchrodingerState& state,
                                         const SpinVector& spin,
                                         const QuadratureSpec& spec) {
  spec.validate();
  // Guard against quadrature windows that miss density mass.
  const double norm = integrate_density(
      [&](const SphericalPoint& p) { return state.rho(p); }, spec);
  if (std::abs(norm - 1.0) > 1e-6)
    throw numeric_error(
        "mean_gordon_angular_momentum: state norm off by " +
        std::to_string(norm - 1.0));

  QuadratureSpec s2 = spec;
  s2.r_min = std::max(spec.r_min, 1e-9); // grad_rho needs r > 0
  Vec3 total{};
  for (int axis = 0; axis < 3; ++axis) {
    const double v = integrate_scalar(
        [&](const SphericalPoint& p) {
          const Vec3 grad = local_to_cartesian(state.grad_rho(p), p);
          const Vec3 integrand = to_cartesian(p).cross(grad.cross(spin.s));
          return axis == 0 ? integrand.x
                           : (axis == 1 ? integrand.y : integrand.z);
        },
        s2);
    if (axis == 0)
      total.x = v;
    else if (axis == 1)
      total.y = v;
    else
      total.z = v;
  }
  return total;
}

struct TrajectorySample {
  double t;
  SphericalPoint p;
};

struct Trajectory {
  std::vector<TrajectorySample> samples;
  double dt = 0.0;
  std::string state_label;
  // Set when the velocity field failed mid-run; samples hold the prefix.
  std::optional<std::string> error;
};

// Fixed-step RK4 integration of dr/dt = v(r), stepped in Cartesian
// coordinates to dodge the phi wrap-around and axis singularities.
inline Trajectory streamline(const VelocityFn& vel, const SphericalPoint& start,
                             double dt, int n_steps,
                             const std::string& state_label = "") {
  validate_point(start);
  if (dt <= 0.0 || n_steps < 1)
    throw std::domain_error("streamline: need dt > 0 and n_steps >= 1");

  Trajectory traj;
  traj.dt = dt;
  traj.state_label = state_label;
  traj.samples.reserve(static_cast<size_t>(n_steps) + 1);

  const auto cart_vel = [&](const Vec3& x) {
    const SphericalPoint p = to_spherical(x);
    return local_to_cartesian(vel(p), p);
  };

  Vec3 x = to_cartesian(start);
  traj.samples.push_back({0.0, start});
  for (int step = 0; step < n_steps; ++step) {
    try {
      const Vec3 k1 = cart_vel(x);
      const Vec3 k2 = cart_vel(x + k1 * (0.5 * dt));
      const Vec3 k3 = cart_vel(x + k2 * (0.5 * dt));
      const Vec3 k4 = cart_vel(x + k3 * dt);
      x = x + (k1 + 2.0 * k2 + 2.0 * k3 + k4) * (dt / 6.0);
    } catch (const std::exception& e) {
      traj.error = e.what();
      break;
    }
    traj.samples.push_back({(step + 1) * dt, to_spherical(x)});
  }
  return traj;
}

struct ComparisonRow {
  SphericalPoint p;
  double v_dirac = 0.0;            // phi-component of the Dirac velocity
  double v_corrected = 0.0;        // J1 + J2 (Schrodinger + Gordon)
  double v_classical = 0.0;        // J1 alone
  double abs_deviation = 0.0;      // |v_dirac - v_corrected|
  double rel_deviation = 0.0;
  std::optional<std::string> error;
};

struct ComparisonReport {
  std::vector<ComparisonRow> rows;
  double max_abs_deviation = 0.0;
  double max_rel_deviation = 0.0;
};

// Dirac 1s (m = +1/2) against the corrected and classical Schrodinger
// velocities of psi_100 with the matching spin.
inline ComparisonReport
compare_dirac_schrodinger(const std::vector<SphericalPoint>& points) {
  const DiracHydrogenState dirac = DiracHydrogenState::ground_state(1);
  const SchrodingerState schrodinger = hydrogen_state({1, 0, 0});
  const SpinVector spin = SpinVector::up();

  ComparisonReport report;
  report.rows.reserve(points.size());
  for (const SphericalPoint& p : points) {
    ComparisonRow row;
    row.p = p;
    try {
      row.v_dirac = dirac_velocity(dirac, p).v_phi;
      row.v_corrected = velocity(schrodinger, spin, p).v_phi;
      row.v_classical = schrodinger_current_j1(schrodinger, p).v_phi /
                        schrodinger.rho(p);
      row.abs_deviation = std::abs(row.v_dirac - row.v_corrected);
      const double scale =
          std::max(std::abs(row.v_dirac), std::abs(row.v_corrected));
      row.rel_deviation = scale > 0.0 ? row.abs_deviation / scale : 0.0;
      report.max_abs_deviation =
          std::max(report.max_abs_deviation, row.abs_deviation);
      report.max_rel_deviation =
          std::max(report.max_rel_deviation, row.rel_deviation);
    } catch (const std::exception& e) {
      row.error = e.what();
    }
    report.rows.push_back(row);
  }
  return report;
}

} // namespace qflow
