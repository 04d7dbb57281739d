#pragma once

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace qflow {

struct Vec3 {
  double x = 0.0, y = 0.0, z = 0.0;

  Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
  Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
  Vec3 operator*(double a) const { return {a * x, a * y, a * z}; }
  Vec3 operator/(double a) const { return {x / a, y / a, z / a}; }
  double dot(const Vec3& o) const { return x * o.x + y * o.y + z * o.z; }
  Vec3 cross(const Vec3& o) const {
    return {y * o.z - z * o.y, z * o.x - x * o.z, x * o.y - y * o.x};
  }
  double norm() const { return std::sqrt(dot(*this)); }
};

inline Vec3 operator*(double a, const Vec3& v) { return v * a; }

struct SphericalPoint {
  double r;     // radius >= 0
  double theta; // colatitude in [0, pi]
  double phi;   // azimuth in [0, 2*pi)
};

inline void validate_point(const SphericalPoint& p) {
  if (!(p.r >= 0.0) || !(p.theta >= 0.0 && p.theta <= M_PI) ||
      !std::isfinite(p.phi))
    throw std::domain_error("invalid spherical point");
}

inline bool on_polar_axis(const SphericalPoint& p, double tol = 0.0) {
  return std::sin(p.theta) <= tol;
}

// Vector in the local orthonormal basis (u_r, u_theta, u_phi) at a point.
// The basis is right-handed: u_r x u_theta = u_phi.
struct SphericalVector {
  double v_r = 0.0, v_theta = 0.0, v_phi = 0.0;

  SphericalVector operator+(const SphericalVector& o) const {
    return {v_r + o.v_r, v_theta + o.v_theta, v_phi + o.v_phi};
  }
  SphericalVector operator*(double a) const {
    return {a * v_r, a * v_theta, a * v_phi};
  }
  SphericalVector operator/(double a) const {
    return {v_r / a, v_theta / a, v_phi / a};
  }
  SphericalVector cross(const SphericalVector& o) const {
    return {v_theta * o.v_phi - v_phi * o.v_theta,
            v_phi * o.v_r - v_r * o.v_phi,
            v_r * o.v_theta - v_theta * o.v_r};
  }
  double norm() const {
    return std::sqrt(v_r * v_r + v_theta * v_theta + v_phi * v_phi);
  }
};

inline Vec3 unit_r(const SphericalPoint& p) {
  const double st = std::sin(p.theta), ct = std::cos(p.theta);
  return {st * std::cos(p.phi), st * std::sin(p.phi), ct};
}

inline Vec3 unit_theta(const SphericalPoint& p) {
  const double st = std::sin(p.theta), ct = std::cos(p.theta);
  return {ct * std::cos(p.phi), ct * std::sin(p.phi), -st};
}

inline Vec3 unit_phi(const SphericalPoint& p) {
  return {-std::sin(p.phi), std::cos(p.phi), 0.0};
}

inline Vec3 to_cartesian(const SphericalPoint& p) {
  return unit_r(p) * p.r;
}

inline SphericalPoint to_spherical(const Vec3& v) {
  const double r = v.norm();
  if (r == 0.0)
    return {0.0, 0.0, 0.0};
  const double theta = std::acos(std::clamp(v.z / r, -1.0, 1.0));
  double phi = std::atan2(v.y, v.x);
  if (phi < 0.0)
    phi += 2.0 * M_PI;
  return {r, theta, phi};
}

inline Vec3 local_to_cartesian(const SphericalVector& v,
                               const SphericalPoint& p) {
  return unit_r(p) * v.v_r + unit_theta(p) * v.v_theta +
         unit_phi(p) * v.v_phi;
}

inline SphericalVector cartesian_to_local(const Vec3& v,
                                          const SphericalPoint& p) {
  return {v.dot(unit_r(p)), v.dot(unit_theta(p)), v.dot(unit_phi(p))};
}

} // namespace qflow
