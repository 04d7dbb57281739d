#pragma once

#include <cmath>
#include <functional>
#include <stdexcept>
#include <string>

#include "qflow/errors.hpp"
#include "qflow/geometry.hpp"
#include "qflow/quadrature.hpp"
#include "qflow/specialfns.hpp"
#include "qflow/units.hpp"

// All closed-form eigenstates are evaluated in atomic units (hbar = m_e = 1,
// lengths in Bohr radii). Unit conversion happens at the CLI boundary only.

namespace qflow {

struct QuantumNumbers {
  int n; // hydrogen: principal (n >= 1); oscillator: radial n_r (>= 0)
  int l;
  int m;
};

inline void validate_hydrogen(const QuantumNumbers& qn) {
  if (qn.n < 1 || qn.l < 0 || qn.l > qn.n - 1 || std::abs(qn.m) > qn.l)
    throw std::domain_error("invalid hydrogen quantum numbers (n,l,m)");
}

inline void validate_oscillator(const QuantumNumbers& qn) {
  if (qn.n < 0 || qn.l < 0 || std::abs(qn.m) > qn.l)
    throw std::domain_error("invalid oscillator quantum numbers (n_r,l,m)");
}

// Nonrelativistic hydrogen radial function R_nl(r), Z = 1, atomic units.
inline double hydrogen_radial(int n, int l, double r) {
  validate_hydrogen({n, l, 0});
  if (r < 0.0)
    throw std::domain_error("hydrogen_radial: r < 0");
  const double x = 2.0 * r / n;
  double lognorm = 3.0 * std::log(2.0 / n);
  lognorm += std::lgamma(n - l) - std::log(2.0 * n) - std::lgamma(n + l + 1.0);
  const double norm = std::sqrt(std::exp(lognorm));
  return norm * std::pow(x, l) * std::exp(-r / n) *
         generalized_laguerre(n - l - 1, 2.0 * l + 1.0, x);
}

inline double hydrogen_radial_deriv(int n, int l, double r) {
  validate_hydrogen({n, l, 0});
  const double x = 2.0 * r / n;
  double lognorm = 3.0 * std::log(2.0 / n);
  lognorm += std::lgamma(n - l) - std::log(2.0 * n) - std::lgamma(n + l + 1.0);
  const double norm = std::sqrt(std::exp(lognorm));
  const double L = generalized_laguerre(n - l - 1, 2.0 * l + 1.0, x);
  const double Lp = generalized_laguerre_deriv(n - l - 1, 2.0 * l + 1.0, x);
  const double e = std::exp(-r / n);
  // d/dr [x^l e^{-r/n} L(x)], dx/dr = 2/n
  double d = -1.0 / n * std::pow(x, l) * L + std::pow(x, l) * Lp * 2.0 / n;
  if (l > 0)
    d += l * std::pow(x, l - 1) * 2.0 / n * L;
  return norm * e * d;
}

// Spherical-basis oscillator radial function R_{n_r,l}(r) for V = w^2 r^2 / 2,
// R = N r^l exp(-w r^2/2) L_{n_r}^{l+1/2}(w r^2), normalized so that
// int R^2 r^2 dr = 1.
inline double oscillator_radial(int n_r, int l, double omega, double r) {
  if (n_r < 0 || l < 0 || omega <= 0.0 || r < 0.0)
    throw std::domain_error("oscillator_radial: bad arguments");
  const double lognorm =
      std::log(2.0) + (l + 1.5) * std::log(omega) +
      std::lgamma(n_r + 1.0) - std::lgamma(n_r + l + 1.5);
  const double norm = std::sqrt(std::exp(lognorm));
  const double t = omega * r * r;
  return norm * std::pow(r, l) * std::exp(-0.5 * t) *
         generalized_laguerre(n_r, l + 0.5, t);
}

inline double oscillator_radial_deriv(int n_r, int l, double omega, double r) {
  if (n_r < 0 || l < 0 || omega <= 0.0 || r < 0.0)
    throw std::domain_error("oscillator_radial_deriv: bad arguments");
  const double lognorm =
      std::log(2.0) + (l + 1.5) * std::log(omega) +
      std::lgamma(n_r + 1.0) - std::lgamma(n_r + l + 1.5);
  const double norm = std::sqrt(std::exp(lognorm));
  const double t = omega * r * r;
  const double L = generalized_laguerre(n_r, l + 0.5, t);
  const double Lp = generalized_laguerre_deriv(n_r, l + 0.5, t);
  const double e = std::exp(-0.5 * t);
  double d = -omega * r * std::pow(r, l) * L +
             std::pow(r, l) * Lp * 2.0 * omega * r;
  if (l > 0)
    d += l * std::pow(r, l - 1) * L;
  return norm * e * d;
}

// A closed-form bound state exposing the polar decomposition
// psi = sqrt(rho) exp(i S / hbar) on the t = 0 slice: rho, S, and their
// analytic spherical-coordinate gradients.
class SchrodingerState {
public:
  enum class System { Hydrogen, Oscillator };

  static SchrodingerState hydrogen(const QuantumNumbers& qn) {
    validate_hydrogen(qn);
    return SchrodingerState(System::Hydrogen, qn, 0.0);
  }

  static SchrodingerState oscillator(const QuantumNumbers& qn, double omega) {
    validate_oscillator(qn);
    if (omega <= 0.0)
      throw std::domain_error("oscillator: omega must be positive");
    return SchrodingerState(System::Oscillator, qn, omega);
  }

  System system() const { return system_; }
  const QuantumNumbers& qn() const { return qn_; }
  double omega() const { return omega_; }

  double energy() const {
    if (system_ == System::Hydrogen)
      return -0.5 / (static_cast<double>(qn_.n) * qn_.n);
    return omega_ * (2.0 * qn_.n + qn_.l + 1.5);
  }

  double radial(double r) const {
    return system_ == System::Hydrogen
               ? hydrogen_radial(qn_.n, qn_.l, r)
               : oscillator_radial(qn_.n, qn_.l, omega_, r);
  }

  double radial_deriv(double r) const {
    return system_ == System::Hydrogen
               ? hydrogen_radial_deriv(qn_.n, qn_.l, r)
               : oscillator_radial_deriv(qn_.n, qn_.l, omega_, r);
  }

  // |Y_{lm}|^2 carries no phi dependence, so rho = R^2 A^2 with
  // A(theta) = N_{l|m|} P_l^{|m|}(cos(theta)).
  double angular(double theta) const {
    return sph_harm_norm(qn_.l, std::abs(qn_.m)) *
           assoc_legendre(qn_.l, std::abs(qn_.m), std::cos(theta));
  }

  double angular_deriv(double theta) const {
    return sph_harm_norm(qn_.l, std::abs(qn_.m)) *
           assoc_legendre_theta_deriv(qn_.l, std::abs(qn_.m), theta);
  }

  double rho(const SphericalPoint& p) const {
    validate_point(p);
    const double R = radial(p.r);
    const double A = angular(p.theta);
    return R * R * A * A;
  }

  // Phase S at t = 0; the stationary -E t term drops out of every current.
  double phase(const SphericalPoint& p) const {
    validate_point(p);
    return static_cast<double>(qn_.m) * p.phi; // hbar = 1
  }

  SphericalVector grad_rho(const SphericalPoint& p) const {
    validate_point(p);
    const double R = radial(p.r), Rp = radial_deriv(p.r);
    const double A = angular(p.theta), Ap = angular_deriv(p.theta);
    if (p.r == 0.0)
      throw std::domain_error("grad_rho: r = 0");
    return {2.0 * R * Rp * A * A, 2.0 * R * R * A * Ap / p.r, 0.0};
  }

  SphericalVector grad_S(const SphericalPoint& p) const {
    validate_point(p);
    if (qn_.m == 0)
      return {0.0, 0.0, 0.0};
    const double st = std::sin(p.theta);
    if (p.r * st == 0.0)
      throw pole_error("grad_S: undefined on the polar axis for m != 0");
    return {0.0, 0.0, static_cast<double>(qn_.m) / (p.r * st)};
  }

  std::string label() const {
    if (system_ == System::Hydrogen)
      return "hydrogen(" + std::to_string(qn_.n) + "," + std::to_string(qn_.l) +
             "," + std::to_string(qn_.m) + ")";
    return "oscillator(" + std::to_string(qn_.n) + "," + std::to_string(qn_.l) +
           "," + std::to_string(qn_.m) + ";omega=" + std::to_string(omega_) +
           ")";
  }

private:
  SchrodingerState(System sys, const QuantumNumbers& qn, double omega)
      : system_(sys), qn_(qn), omega_(omega) {}

  System system_;
  QuantumNumbers qn_;
  double omega_;
};

inline SchrodingerState hydrogen_state(const QuantumNumbers& qn) {
  return SchrodingerState::hydrogen(qn);
}

inline SchrodingerState oscillator_state(const QuantumNumbers& qn,
                                         double omega) {
  return SchrodingerState::oscillator(qn, omega);
}

// The four real angular amplitudes of the Dirac hydrogen bispinor classes
// (l = 0 / l > 0, m_j = +-1/2), with the azimuthal phases cancelled
// analytically so everything is a real function of theta.
struct DiracAngular {
  double a, b, c, d;
};

inline DiracAngular dirac_angular_components(int l, int two_m, double theta) {
  if (l < 0)
    throw std::domain_error("dirac_angular_components: l < 0");
  if (two_m != 1 && two_m != -1)
    throw std::domain_error("dirac_angular_components: m must be +-1/2");
  const double y00 = 1.0 / std::sqrt(4.0 * M_PI);
  DiracAngular w{};
  if (two_m == 1) {
    if (l == 0) {
      w.a = y00;
      w.b = 0.0;
      w.c = -y00 * std::cos(theta);
      w.d = -y00 * std::sin(theta);
    } else {
      w.a = std::sqrt((l + 1.0) / (2.0 * l + 1.0)) * sph_harm_theta(l, 0, theta);
      w.b = std::sqrt(l / (2.0 * l + 1.0)) * sph_harm_theta(l, 1, theta);
      w.c = std::sqrt((l + 1.0) / (2.0 * l + 3.0)) *
            sph_harm_theta(l + 1, 0, theta);
      w.d = std::sqrt((l + 2.0) / (2.0 * l + 3.0)) *
            sph_harm_theta(l + 1, 1, theta);
    }
  } else {
    if (l == 0) {
      w.a = 0.0;
      w.b = y00;
      w.c = -y00 * std::sin(theta);
      w.d = y00 * std::cos(theta);
    } else {
      w.a = -std::sqrt((l + 1.0) / (2.0 * l + 1.0)) *
            sph_harm_theta(l, -1, theta);
      w.b = std::sqrt(l / (2.0 * l + 1.0)) * sph_harm_theta(l, 0, theta);
      // the coefficient sqrt((l-1)/(2l-1)) vanishes for l = 1, where
      // Y_{0,-1} does not exist
      w.c = (l == 1) ? 0.0
                     : -std::sqrt((l - 1.0) / (2.0 * l - 1.0)) *
                           sph_harm_theta(l - 1, -1, theta);
      w.d = std::sqrt(l / (2.0 * l - 1.0)) * sph_harm_theta(l - 1, 0, theta);
    }
  }
  return w;
}

namespace detail {
// Normalization of the Dirac 1s pair, fixed numerically:
// a0^2 * int (f^2 + g^2) r^2 dr = 1 with a0 = 1 in the raw integrand.
inline double dirac_1s_a0() {
  static const double a0 = [] {
    const double alpha = codata::alpha;
    const double gamma = std::sqrt(1.0 - alpha * alpha);
    // 1 - gamma written as alpha^2/(1+gamma) to avoid cancellation
    const double t = alpha / (1.0 + gamma);
    // integrand r^{2 gamma} e^{-2r} (1 + t^2); mild r^{gamma-1} singularity
    // in f itself is integrable, truncated mass below r_min is < 1e-12.
    const double r_min = 1e-12, r_max = 80.0;
    double sum = 0.0;
    const double edges[] = {r_min, 1.0, 4.0, 12.0, 30.0, r_max};
    for (int s = 0; s + 1 < 6; ++s) {
      const QuadratureRule q = gauss_legendre(80, edges[s], edges[s + 1]);
      for (size_t i = 0; i < q.nodes.size(); ++i) {
        const double r = q.nodes[i];
        sum += q.weights[i] * (1.0 + t * t) *
               std::pow(r, 2.0 * gamma) * std::exp(-2.0 * r);
      }
    }
    return 1.0 / std::sqrt(sum);
  }();
  return a0;
}
} // namespace detail

// Dirac 1s radial pair (atomic units): f = a0 r^{g-1} e^{-r},
// g_fn = -a0 (1-g)/alpha r^{g-1} e^{-r}, g = sqrt(1 - alpha^2).
struct DiracRadialPair {
  double f, g;
};

inline DiracRadialPair dirac_1s_radial(double r) {
  if (r <= 0.0)
    throw std::domain_error("dirac_1s_radial: r must be positive");
  const double alpha = codata::alpha;
  const double gamma = std::sqrt(1.0 - alpha * alpha);
  const double a0 = detail::dirac_1s_a0();
  const double f = a0 * std::pow(r, gamma - 1.0) * std::exp(-r);
  return {f, -alpha / (1.0 + gamma) * f};
}

// Dirac hydrogen eigenstate: quantum numbers, the angular class, and a radial
// pair. Only the 1s pair is built in; other states take caller-supplied
// (f, g) functions.
class DiracHydrogenState {
public:
  using RadialFn = std::function<double(double)>;

  DiracHydrogenState(int n, int l, int two_m, RadialFn f, RadialFn g)
      : n_(n), l_(l), two_m_(two_m), f_(std::move(f)), g_(std::move(g)) {
    if (n_ < 1 || l_ < 0 || l_ > n_ - 1)
      throw std::domain_error("DiracHydrogenState: invalid (n, l)");
    if (two_m_ != 1 && two_m_ != -1)
      throw std::domain_error("DiracHydrogenState: m must be +-1/2");
    // j = 1/2 when l = 0, j = l + m otherwise
    two_j_ = (l_ == 0) ? 1 : 2 * l_ + two_m_;
    if (two_j_ < 1)
      throw std::domain_error("DiracHydrogenState: j < 1/2");
  }

  static DiracHydrogenState ground_state(int two_m) {
    return DiracHydrogenState(
        1, 0, two_m, [](double r) { return dirac_1s_radial(r).f; },
        [](double r) { return dirac_1s_radial(r).g; });
  }

  int n() const { return n_; }
  int l() const { return l_; }
  int two_j() const { return two_j_; }
  int two_m() const { return two_m_; }

  DiracAngular angular(double theta) const {
    return dirac_angular_components(l_, two_m_, theta);
  }

  double f(double r) const { return f_(r); }
  double g(double r) const { return g_(r); }

  // rho = f^2 (a^2 + b^2) + g^2 (c^2 + d^2)
  double rho(const SphericalPoint& p) const {
    validate_point(p);
    if (p.r <= 0.0)
      throw std::domain_error("DiracHydrogenState::rho: r must be positive");
    const DiracAngular w = angular(p.theta);
    const double fv = f_(p.r), gv = g_(p.r);
    return fv * fv * (w.a * w.a + w.b * w.b) +
           gv * gv * (w.c * w.c + w.d * w.d);
  }

private:
  int n_, l_, two_m_, two_j_;
  RadialFn f_, g_;
};

} // namespace qflow
