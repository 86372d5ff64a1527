#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <random>

#include "sphereqed/special_functions.hpp"

using namespace sphereqed;
using namespace sphereqed::bessel;

namespace {

// Ascending-series oracle in long double, 60 terms:
// j_n(z) = z^n/(2n+1)!! sum_k (-z^2/2)^k / (k! (2n+3)(2n+5)...(2n+2k+1))
std::complex<long double> series_j_oracle(int n, std::complex<long double> z) {
  long double dfact = 1.0L;
  for (int m = 1; m <= n; ++m) dfact *= 2 * m + 1;
  std::complex<long double> zn = 1.0L;
  for (int m = 0; m < n; ++m) zn *= z;
  std::complex<long double> term = 1.0L, sum = 1.0L;
  const std::complex<long double> z2 = -0.5L * z * z;
  for (int k = 1; k <= 60; ++k) {
    term *= z2 / std::complex<long double>(k * (2.0L * n + 2.0L * k + 1.0L));
    sum += term;
  }
  return zn / dfact * sum;
}

// Rayleigh closed form, exact finite sum:
// h_n(z) = (-i)^{n+1} e^{iz}/z sum_{m=0}^{n} (i/(2z))^m (n+m)!/(m!(n-m)!)
Complex rayleigh_h1_oracle(int n, Complex z) {
  const Complex i(0, 1);
  Complex sum = 0.0;
  double num = 1.0; // (n+m)!/(m!(n-m)!)
  Complex pw = 1.0;
  for (int m = 0; m <= n; ++m) {
    if (m > 0) {
      num *= double(n + m) * double(n - m + 1) / double(m);
      pw *= i / (2.0 * z);
    }
    sum += num * pw;
  }
  Complex pre = std::exp(i * z) / z;
  for (int k = 0; k <= n; ++k) pre *= -i;
  return pre * sum;
}

double rel_err(Complex got, Complex want) {
  return std::abs(got - want) / std::abs(want);
}

} // namespace

TEST_CASE("spherical_j closed forms at n=0,1") {
  CHECK(rel_err(spherical_j(0, {1.0, 0.0}), {0.8414709848078965, 0.0}) < 1e-14);
  CHECK(rel_err(spherical_j(1, {1.0, 0.0}), {0.3011686789397568, 0.0}) < 1e-13);
}

TEST_CASE("spherical_j n=5 complex argument vs ascending-series oracle") {
  const Complex z(2.0, 0.5);
  const auto oracle = series_j_oracle(5, {2.0L, 0.5L});
  const Complex want(double(oracle.real()), double(oracle.imag()));
  // frozen from the oracle
  CHECK(rel_err(want, {1.2755268915548847e-3, 2.8231928670882461e-3}) < 1e-12);
  CHECK(rel_err(spherical_j(5, z), want) < 1e-12);
}

TEST_CASE("spherical_h1 closed forms and complex oracle") {
  // h_0(1) = -i e^{i}
  CHECK(rel_err(spherical_h1(0, {1.0, 0.0}),
                {0.8414709848078965, -0.5403023058681398}) < 1e-14);
  // h_1(z) = (-e^{iz}/z)(1 + i/z) at z=1
  const Complex want1 = -std::exp(Complex(0, 1)) * (1.0 + Complex(0, 1));
  CHECK(rel_err(spherical_h1(1, {1.0, 0.0}), want1) < 1e-14);
  CHECK(rel_err(want1, {0.3011686789397568, -1.3817732906760362}) < 1e-13);

  const Complex z(3.0, 1.0);
  const Complex want = rayleigh_h1_oracle(4, z);
  CHECK(rel_err(want, {-0.50144724858919217, -0.27432972383552203}) < 1e-12);
  CHECK(rel_err(spherical_h1(4, z), want) < 1e-12);
}

TEST_CASE("riccati identities") {
  // psi_0(z) = sin z
  for (Complex z : {Complex(0.3, 0.0), Complex(2.0, 1.0), Complex(5.0, -0.4)})
    CHECK(std::abs(riccati_psi(0, z) - std::sin(z)) < 1e-14 * std::abs(std::sin(z)) + 1e-300);

  // psi_2' vs central finite difference, step 1e-5
  const Complex z(1.3, 0.2), h(1e-5, 0.0);
  const Complex fd = (riccati_psi(2, z + h) - riccati_psi(2, z - h)) / (2.0 * h);
  const Complex got = riccati_psi_prime(2, z);
  CHECK(std::abs(got - fd) < 1e-8);
  // frozen from the high-precision oracle
  CHECK(rel_err(got, {0.27448152353664393, 0.066796606684951473}) < 1e-12);
}

TEST_CASE("Wronskian psi_n zeta_n' - psi_n' zeta_n = i") {
  std::mt19937 rng(12345);
  std::uniform_real_distribution<double> xs(0.1, 100.0);
  for (int trial = 0; trial < 200; ++trial) {
    const Complex x(xs(rng), 0.0);
    const int n = int(rng() % 41);
    const Complex w = riccati_psi(n, x) * riccati_zeta_prime(n, x) -
                      riccati_psi_prime(n, x) * riccati_zeta(n, x);
    CHECK(std::abs(w - Complex(0, 1)) < 1e-10);
  }
}

TEST_CASE("three-term recurrence property") {
  std::mt19937 rng(777);
  std::uniform_real_distribution<double> mag(0.1, 50.0), ph(0.0, 2.0 * kPi);
  for (int trial = 0; trial < 300; ++trial) {
    const double r = mag(rng), t = ph(rng);
    const Complex z(r * std::cos(t), r * std::sin(t));
    const int n = 1 + int(rng() % 39);
    const auto j = spherical_j_array(n + 1, z);
    const Complex lhs = j[n - 1] + j[n + 1];
    const Complex rhs = Complex(2 * n + 1, 0) / z * j[n];
    const double scale = std::abs(j[n - 1]) + std::abs(j[n + 1]) + std::abs(rhs);
    if (scale < 1e-280) continue;
    CHECK(std::abs(lhs - rhs) <= 1e-10 * scale);
  }
}

TEST_CASE("small-argument law |j_n(z) - z^n/(2n+1)!!| <= |z|^{n+2}") {
  std::mt19937 rng(99);
  std::uniform_real_distribution<double> mag(1e-6, 1e-3), ph(0.0, 2.0 * kPi);
  for (int trial = 0; trial < 100; ++trial) {
    const double r = mag(rng), t = ph(rng);
    const Complex z(r * std::cos(t), r * std::sin(t));
    const int n = int(rng() % 13);
    double dfact = 1.0;
    for (int m = 1; m <= n; ++m) dfact *= 2 * m + 1;
    Complex zn = 1.0;
    for (int m = 0; m < n; ++m) zn *= z;
    CHECK(std::abs(spherical_j(n, z) - zn / dfact) <= std::pow(std::abs(z), n + 2));
  }
}

TEST_CASE("exact limits at z = 0") {
  CHECK(spherical_j(0, {0.0, 0.0}) == Complex(1.0, 0.0));
  CHECK(spherical_j(3, {0.0, 0.0}) == Complex(0.0, 0.0));
  CHECK_THROWS_AS((void)spherical_h1(0, {0.0, 0.0}), std::domain_error);
}

TEST_CASE("error paths: order cap and non-finite input") {
  CHECK_THROWS_AS((void)spherical_j(kMaxOrder + 1, {1.0, 0.0}), std::domain_error);
  CHECK_THROWS_AS((void)spherical_j(-1, {1.0, 0.0}), std::domain_error);
  const double nan = std::numeric_limits<double>::quiet_NaN();
  CHECK_THROWS_AS((void)spherical_j(2, {nan, 0.0}), std::domain_error);
  CHECK_THROWS_AS((void)spherical_h1(2, {1.0, nan}), std::domain_error);
}

TEST_CASE("bessel_zero basics") {
  CHECK(std::abs(bessel_zero(0, 1) - kPi) < 1e-10);
  CHECK(std::abs(bessel_zero(0, 2) - 2.0 * kPi) < 1e-10);

  // independent bisection oracle for z_{1,1} on the bracket (4, 5)
  auto j1 = [](double x) { return std::sin(x) / (x * x) - std::cos(x) / x; };
  double lo = 4.0, hi = 5.0;
  for (int it = 0; it < 100; ++it) {
    const double mid = 0.5 * (lo + hi);
    (j1(lo) * j1(mid) < 0.0 ? hi : lo) = mid;
  }
  const double oracle = 0.5 * (lo + hi);
  CHECK(std::abs(oracle - 4.4934094579) < 1e-9);
  CHECK(std::abs(bessel_zero(1, 1) - oracle) < 1e-10);
}

TEST_CASE("bessel_zero interlacing z_{n,l} < z_{n+1,l} < z_{n,l+1}") {
  for (int n = 0; n <= 19; ++n)
    for (int ell = 1; ell <= 9; ++ell) {
      const double a = bessel_zero(n, ell);
      const double b = bessel_zero(n + 1, ell);
      const double c = bessel_zero(n, ell + 1);
      CHECK(a < b);
      CHECK(b < c);
    }
}

TEST_CASE("bessel_zero range validation") {
  CHECK_THROWS_AS((void)bessel_zero(21, 1), std::domain_error);
  CHECK_THROWS_AS((void)bessel_zero(0, 0), std::domain_error);
  CHECK_THROWS_AS((void)bessel_zero(0, 11), std::domain_error);
}

TEST_CASE("roots actually vanish") {
  for (int n : {1, 5, 12, 20})
    for (int ell : {1, 4, 10}) {
      const double z = bessel_zero(n, ell);
      CHECK(std::abs(spherical_j(n, {z, 0.0})) < 1e-10);
    }
}
