#pragma once

#include <cmath>
#include <stdexcept>
#include <vector>

namespace qflow {

struct QuadratureRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

// Gauss-Legendre nodes and weights on [-1, 1], Newton iteration on the
// Legendre recurrence.
inline QuadratureRule gauss_legendre(int n) {
  if (n < 1)
    throw std::domain_error("gauss_legendre: n < 1");
  QuadratureRule q;
  q.nodes.resize(n);
  q.weights.resize(n);
  const int m = (n + 1) / 2;
  for (int i = 0; i < m; ++i) {
    double z = std::cos(M_PI * (i + 0.75) / (n + 0.5));
    double pp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p1 = 1.0, p2 = 0.0;
      for (int j = 0; j < n; ++j) {
        const double p3 = p2;
        p2 = p1;
        p1 = ((2.0 * j + 1.0) * z * p2 - j * p3) / (j + 1.0);
      }
      pp = n * (z * p1 - p2) / (z * z - 1.0);
      const double z1 = z;
      z -= p1 / pp;
      if (std::abs(z - z1) < 1e-15)
        break;
    }
    q.nodes[i] = -z;
    q.nodes[n - 1 - i] = z;
    q.weights[i] = 2.0 / ((1.0 - z * z) * pp * pp);
    q.weights[n - 1 - i] = q.weights[i];
  }
  return q;
}

// Gauss-Legendre mapped to [a, b].
inline QuadratureRule gauss_legendre(int n, double a, double b) {
  QuadratureRule q = gauss_legendre(n);
  const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
  for (int i = 0; i < n; ++i) {
    q.nodes[i] = mid + half * q.nodes[i];
    q.weights[i] *= half;
  }
  return q;
}

// Gauss-Laguerre rule for integrals of the form int_0^inf f(x) e^{-x} dx
// with weight alpha = 0; the e^{+x} factor is folded into the weights so the
// rule applies directly to int_0^inf g(x) dx for exponentially decaying g.
// Reliable for n up to ~128 in double precision.
inline QuadratureRule gauss_laguerre(int n, double alf = 0.0) {
  if (n < 1)
    throw std::domain_error("gauss_laguerre: n < 1");
  QuadratureRule q;
  q.nodes.resize(n);
  q.weights.resize(n);
  double z = 0.0;
  for (int i = 0; i < n; ++i) {
    if (i == 0)
      z = (1.0 + alf) * (3.0 + 0.92 * alf) / (1.0 + 2.4 * n + 1.8 * alf);
    else if (i == 1)
      z += (15.0 + 6.25 * alf) / (1.0 + 0.9 * alf + 2.5 * n);
    else {
      const int ai = i - 1;
      z += ((1.0 + 2.55 * ai) / (1.9 * ai) +
            1.26 * ai * alf / (1.0 + 3.5 * ai)) *
           (z - q.nodes[i - 2]) / (1.0 + 0.3 * alf);
    }
    double pp = 0.0, p2 = 0.0;
    for (int iter = 0; iter < 200; ++iter) {
      double p1 = 1.0;
      p2 = 0.0;
      for (int j = 0; j < n; ++j) {
        const double p3 = p2;
        p2 = p1;
        p1 = ((2.0 * j + 1.0 + alf - z) * p2 - (j + alf) * p3) / (j + 1.0);
      }
      pp = (n * p1 - (n + alf) * p2) / z;
      const double z1 = z;
      z = z1 - p1 / pp;
      if (std::abs(z - z1) <= 1e-14 * std::abs(z))
        break;
    }
    q.nodes[i] = z;
    const double lg =
        std::lgamma(alf + n) - std::lgamma(static_cast<double>(n));
    // weight including e^{+x} so plain integrands can be used
    q.weights[i] = -std::exp(lg + z) / (pp * n * p2);
  }
  return q;
}

// Trapezoid rule on the periodic interval [0, 2*pi).
inline QuadratureRule periodic_trapezoid(int n) {
  if (n < 1)
    throw std::domain_error("periodic_trapezoid: n < 1");
  QuadratureRule q;
  q.nodes.resize(n);
  q.weights.assign(n, 2.0 * M_PI / n);
  for (int i = 0; i < n; ++i)
    q.nodes[i] = 2.0 * M_PI * i / n;
  return q;
}

} // namespace qflow
