#pragma once

#include <cmath>
#include <complex>
#include <stdexcept>

namespace qflow {

// Associated Legendre function P_l^m(x) for m >= 0, Condon-Shortley phase
// (-1)^m included. Stable upward recurrence in l.
inline double assoc_legendre(int l, int m, double x) {
  if (l < 0 || m < 0 || m > l)
    throw std::domain_error("assoc_legendre: need 0 <= m <= l");
  if (std::abs(x) > 1.0)
    throw std::domain_error("assoc_legendre: |x| > 1");

  // P_m^m = (-1)^m (2m-1)!! (1-x^2)^{m/2}
  double pmm = 1.0;
  if (m > 0) {
    const double somx2 = std::sqrt((1.0 - x) * (1.0 + x));
    double fact = 1.0;
    for (int i = 0; i < m; ++i) {
      pmm *= -fact * somx2;
      fact += 2.0;
    }
  }
  if (l == m)
    return pmm;
  double pmmp1 = x * (2.0 * m + 1.0) * pmm; // P_{m+1}^m
  if (l == m + 1)
    return pmmp1;
  double pll = 0.0;
  for (int ll = m + 2; ll <= l; ++ll) {
    pll = (x * (2.0 * ll - 1.0) * pmmp1 - (ll + m - 1.0) * pmm) / (ll - m);
    pmm = pmmp1;
    pmmp1 = pll;
  }
  return pll;
}

// P_l^m extended to negative m through
//   P_l^{-m} = (-1)^m (l-m)!/(l+m)! P_l^m.
inline double assoc_legendre_signed(int l, int m, double x) {
  if (m >= 0)
    return assoc_legendre(l, m, x);
  const int mm = -m;
  double ratio = 1.0; // (l-mm)!/(l+mm)!
  for (int k = l - mm + 1; k <= l + mm; ++k)
    ratio /= k;
  const double sign = (mm % 2 == 0) ? 1.0 : -1.0;
  return sign * ratio * assoc_legendre(l, mm, x);
}

// d/dtheta of P_l^m(cos(theta)), m >= 0, via
//   dP_l^m/dtheta = 1/2 [ P_l^{m+1} - (l+m)(l-m+1) P_l^{m-1} ].
inline double assoc_legendre_theta_deriv(int l, int m, double theta) {
  if (l < 0 || m < 0 || m > l)
    throw std::domain_error("assoc_legendre_theta_deriv: need 0 <= m <= l");
  const double x = std::cos(theta);
  const double upper = (m + 1 <= l) ? assoc_legendre(l, m + 1, x) : 0.0;
  // The lower term carries a factor (l+m)(l-m+1), which vanishes in the only
  // case where P_l^{m-1} is out of range (l = m = 0).
  const double lower =
      (l == 0 && m == 0) ? 0.0 : assoc_legendre_signed(l, m - 1, x);
  return 0.5 * (upper - (l + m) * (l - m + 1.0) * lower);
}

// Orthonormalization factor sqrt((2l+1)/(4 pi) (l-m)!/(l+m)!), m >= 0.
inline double sph_harm_norm(int l, int m) {
  if (l < 0 || m < 0 || m > l)
    throw std::domain_error("sph_harm_norm: need 0 <= m <= l");
  double logfact = 0.0; // log((l-m)!/(l+m)!)
  for (int k = l - m + 1; k <= l + m; ++k)
    logfact -= std::log(static_cast<double>(k));
  return std::sqrt((2.0 * l + 1.0) / (4.0 * M_PI) * std::exp(logfact));
}

// Real theta-profile of Y_lm: Y_lm(theta, 0). Valid for any |m| <= l.
inline double sph_harm_theta(int l, int m, double theta) {
  if (l < 0 || std::abs(m) > l)
    throw std::domain_error("sph_harm_theta: need |m| <= l");
  const int mm = std::abs(m);
  double v = sph_harm_norm(l, mm) * assoc_legendre(l, mm, std::cos(theta));
  if (m < 0 && mm % 2 != 0)
    v = -v; // Y_{l,-m}(theta,0) = (-1)^m Y_{l,m}(theta,0)
  return v;
}

// d/dtheta of sph_harm_theta.
inline double sph_harm_theta_deriv(int l, int m, double theta) {
  if (l < 0 || std::abs(m) > l)
    throw std::domain_error("sph_harm_theta_deriv: need |m| <= l");
  const int mm = std::abs(m);
  double v = sph_harm_norm(l, mm) * assoc_legendre_theta_deriv(l, mm, theta);
  if (m < 0 && mm % 2 != 0)
    v = -v;
  return v;
}

// Orthonormal spherical harmonic Y_lm(theta, phi), Condon-Shortley phase.
// Negative m via Y_{l,-m} = (-1)^m conj(Y_{l,m}).
inline std::complex<double> spherical_harmonic(int l, int m, double theta,
                                               double phi) {
  if (l < 0 || std::abs(m) > l)
    throw std::domain_error("spherical_harmonic: need |m| <= l");
  const int mm = std::abs(m);
  const double base = sph_harm_norm(l, mm) *
                      assoc_legendre(l, mm, std::cos(theta));
  std::complex<double> y = base * std::exp(std::complex<double>(0.0, mm * phi));
  if (m < 0) {
    y = std::conj(y);
    if (mm % 2 != 0)
      y = -y;
  }
  return y;
}

// Generalized Laguerre polynomial L_n^a(x) by the three-term recurrence.
inline double generalized_laguerre(int n, double a, double x) {
  if (n < 0 || a <= -1.0 || x < 0.0)
    throw std::domain_error("generalized_laguerre: bad arguments");
  if (n == 0)
    return 1.0;
  double lkm1 = 1.0;         // L_0
  double lk = 1.0 + a - x;   // L_1
  for (int k = 1; k < n; ++k) {
    const double lkp1 =
        ((2.0 * k + 1.0 + a - x) * lk - (k + a) * lkm1) / (k + 1.0);
    lkm1 = lk;
    lk = lkp1;
  }
  return lk;
}

// d/dx L_n^a(x) = -L_{n-1}^{a+1}(x).
inline double generalized_laguerre_deriv(int n, double a, double x) {
  if (n == 0)
    return 0.0;
  return -generalized_laguerre(n - 1, a + 1.0, x);
}

} // namespace qflow
