#include <catch_amalgamated.hpp>

#include <random>

#include "qflow/quadrature.hpp"
#include "qflow/specialfns.hpp"
#include "qflow/verify.hpp"

using namespace qflow;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

TEST_CASE("associated Legendre low-order values") {
  CHECK(assoc_legendre(0, 0, 0.3) == 1.0);
  CHECK_THAT(assoc_legendre(1, 0, 0.5), WithinRel(0.5, 1e-15));
  // P_1^1(x) = -sqrt(1-x^2) with the Condon-Shortley phase
  CHECK_THAT(assoc_legendre(1, 1, 0.0), WithinRel(-1.0, 1e-15));
  CHECK_THROWS_AS(assoc_legendre(1, 2, 0.0), std::domain_error);
  CHECK_THROWS_AS(assoc_legendre(2, 1, 1.5), std::domain_error);
}

TEST_CASE("associated Legendre matches Rodrigues formula") {
  std::mt19937 rng(31);
  std::uniform_real_distribution<double> ux(-0.999, 0.999);
  for (int i = 0; i < 50; ++i) {
    const double x = ux(rng);
    for (int l = 0; l <= 4; ++l)
      for (int m = 0; m <= l; ++m) {
        const double want = verify::detail::legendre_rodrigues(l, m, x);
        INFO("l=" << l << " m=" << m << " x=" << x);
        CHECK_THAT(assoc_legendre(l, m, x),
                   WithinRel(want, 1e-10) || WithinAbs(want, 1e-12));
      }
  }
}

TEST_CASE("theta derivative of P_l^m against finite differences") {
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> uth(0.1, M_PI - 0.1);
  const double h = 1e-6;
  for (int i = 0; i < 30; ++i) {
    const double theta = uth(rng);
    for (int l = 0; l <= 6; ++l)
      for (int m = 0; m <= l; ++m) {
        const double fd = (assoc_legendre(l, m, std::cos(theta + h)) -
                           assoc_legendre(l, m, std::cos(theta - h))) /
                          (2.0 * h);
        CHECK_THAT(assoc_legendre_theta_deriv(l, m, theta),
                   WithinRel(fd, 1e-7) || WithinAbs(fd, 1e-9));
      }
  }
}

TEST_CASE("spherical harmonic reference values") {
  CHECK_THAT(spherical_harmonic(0, 0, 1.234, 4.321).real(),
             WithinRel(0.28209479177387814, 1e-14));
  CHECK_THAT(spherical_harmonic(1, 0, 0.0, 0.0).real(),
             WithinRel(0.4886025119029199, 1e-13));
  CHECK_THAT(spherical_harmonic(1, 1, M_PI / 2, 0.0).real(),
             WithinRel(-0.3454941494713355, 1e-13));
  CHECK_THROWS_AS(spherical_harmonic(1, 2, 0.0, 0.0), std::domain_error);
}

TEST_CASE("spherical harmonics are orthonormal up to l = 5") {
  const auto result = verify::check_sph_orthonormality();
  INFO(result.detail);
  CHECK(result.pass);
}

TEST_CASE("conjugation symmetry for negative m") {
  std::mt19937 rng(3);
  std::uniform_real_distribution<double> uth(0.01, M_PI - 0.01);
  std::uniform_real_distribution<double> uph(0.0, 2 * M_PI);
  for (int i = 0; i < 100; ++i) {
    const double theta = uth(rng), phi = uph(rng);
    for (int l = 1; l <= 6; ++l)
      for (int m = 1; m <= l; ++m) {
        std::complex<double> want =
            std::conj(spherical_harmonic(l, m, theta, phi));
        if (m % 2 != 0)
          want = -want;
        const std::complex<double> got =
            spherical_harmonic(l, -m, theta, phi);
        CHECK_THAT(std::abs(got - want),
                   WithinAbs(0.0, 1e-12 * std::max(1.0, std::abs(want))));
      }
  }
}

TEST_CASE("generalized Laguerre values and series oracle") {
  CHECK(generalized_laguerre(0, 2.5, 1.7) == 1.0);
  CHECK_THAT(generalized_laguerre(1, 1.0, 1.0), WithinRel(1.0, 1e-15));
  CHECK_THAT(generalized_laguerre(2, 0.0, 0.0), WithinRel(1.0, 1e-15));

  // series oracle: L_n^a(x) = sum_k (-1)^k C(n+a, n-k) x^k / k!
  std::mt19937 rng(17);
  std::uniform_real_distribution<double> ux(0.0, 10.0);
  std::uniform_real_distribution<double> ua(-0.5, 3.0);
  for (int i = 0; i < 50; ++i) {
    const double x = ux(rng), a = ua(rng);
    for (int n = 0; n <= 6; ++n) {
      double want = 0.0;
      for (int k = 0; k <= n; ++k) {
        double binom = 1.0; // C(n+a, n-k) = prod_{j=1}^{n-k} (a+k+j)/j
        for (int j = 1; j <= n - k; ++j)
          binom *= (a + k + j) / j;
        double xk = 1.0, kfact = 1.0;
        for (int j = 1; j <= k; ++j) {
          xk *= x;
          kfact *= j;
        }
        want += ((k % 2 == 0) ? 1.0 : -1.0) * binom * xk / kfact;
      }
      CHECK_THAT(generalized_laguerre(n, a, x),
                 WithinRel(want, 1e-10) || WithinAbs(want, 1e-10));
    }
  }
}

TEST_CASE("Laguerre derivative identity") {
  std::mt19937 rng(19);
  std::uniform_real_distribution<double> ux(0.01, 8.0);
  const double h = 1e-6;
  for (int i = 0; i < 30; ++i) {
    const double x = ux(rng);
    for (int n = 1; n <= 5; ++n) {
      const double fd = (generalized_laguerre(n, 1.5, x + h) -
                         generalized_laguerre(n, 1.5, x - h)) /
                        (2.0 * h);
      CHECK_THAT(generalized_laguerre_deriv(n, 1.5, x),
                 WithinRel(fd, 1e-7) || WithinAbs(fd, 1e-9));
    }
  }
}

TEST_CASE("quadrature rules integrate known integrals") {
  // int_0^inf e^{-x} x^3 dx = 6 with Gauss-Laguerre
  const QuadratureRule gl = gauss_laguerre(32);
  double sum = 0.0;
  for (size_t i = 0; i < gl.nodes.size(); ++i)
    sum += gl.weights[i] * std::exp(-gl.nodes[i]) * std::pow(gl.nodes[i], 3);
  CHECK_THAT(sum, WithinRel(6.0, 1e-10));

  // int_0^2 x^7 dx with Gauss-Legendre (exact for n >= 4)
  const QuadratureRule leg = gauss_legendre(8, 0.0, 2.0);
  double p = 0.0;
  for (size_t i = 0; i < leg.nodes.size(); ++i)
    p += leg.weights[i] * std::pow(leg.nodes[i], 7);
  CHECK_THAT(p, WithinRel(32.0, 1e-13));
}
