#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "sphereqed/markov.hpp"
#include "sphereqed/thermal.hpp"

using namespace sphereqed;

namespace {

const SphereEmitterGeometry kGeom{1.75, Orientation::tangential};
const MaterialModel kDrude = MaterialModel::drude(1.0, 0.01);

DensityFn ohmic() {
  return [](double w) { return w * std::exp(-w); };
}

} // namespace

TEST_CASE("extended density oddness") {
  auto f = ohmic();
  CHECK(extended_density(f, 0.0) == 0.0);
  std::mt19937 rng(5);
  std::uniform_real_distribution<double> ws(0.01, 3.0);
  for (int i = 0; i < 50; ++i) {
    const double w = ws(rng);
    CHECK(extended_density(f, -w) == -extended_density(f, w));
    CHECK(extended_density(f, -w) == -f(w));
  }
}

TEST_CASE("zero-temperature sentinel limits") {
  auto f = ohmic();
  CHECK(dressed_density(f, 1.3, kZeroTemperatureBeta) ==
        doctest::Approx(f(1.3)).epsilon(1e-12));
  CHECK(dressed_density(f, -1.3, kZeroTemperatureBeta) == 0.0);
}

TEST_CASE("detailed balance J_td(-w) = e^{-beta w} J_td(w)") {
  auto f = ohmic();
  std::mt19937 rng(42);
  std::uniform_real_distribution<double> ws(0.01, 3.0), bs(0.3, 20.0);
  for (int i = 0; i < 200; ++i) {
    const double w = ws(rng), b = bs(rng);
    const double lhs = dressed_density(f, -w, b);
    const double rhs = std::exp(-b * w) * dressed_density(f, w, b);
    CHECK(std::abs(lhs - rhs) <= 1e-10 * std::abs(rhs));
  }
}

TEST_CASE("dressing near omega = 0") {
  auto f = ohmic(); // J'(0) = 1
  const double b = 2.0;
  // exactly at zero: analytic limit J'(0)/beta
  CHECK(dressed_density(f, 0.0, b) == doctest::Approx(1.0 / b).epsilon(1e-5));
  // continuity across the Laurent switch at |beta w| = 1e-4
  const double w1 = 0.99e-4 / b, w2 = 1.01e-4 / b;
  CHECK(dressed_density(f, w1, b) == doctest::Approx(dressed_density(f, w2, b)).epsilon(1e-6));
}

TEST_CASE("theta factor limits") {
  // t = 0, beta -> infinity: 1
  CHECK(theta_factor(0.0, kZeroTemperatureBeta * 1.0) == Complex(1.0, 0.0));
  // beta -> infinity: e^{-i w t}
  const double wt = 1.234;
  const Complex th = theta_factor(wt, kZeroTemperatureBeta * 2.0);
  CHECK(std::abs(th - std::exp(Complex(0.0, -wt))) < 1e-12);
  // Laurent regime
  const double x = 1e-6;
  const Complex small = theta_factor(0.5, x);
  CHECK(small.real() == doctest::Approx((2.0 / x) * std::cos(0.5)).epsilon(1e-9));
  CHECK(small.imag() == doctest::Approx(-std::sin(0.5)).epsilon(1e-12));
}

TEST_CASE("effective density: equal temperatures match the closed form") {
  const SphereBath bath(kGeom, kDrude);
  const ThermalConfig cfg{7.5, 7.5, 3.0};
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> ws(-3.0, 3.0);
  for (int i = 0; i < 40; ++i) {
    const double w = ws(rng);
    if (std::abs(w) < 1e-3) continue;
    const double lhs = bath.effective(w, cfg);
    const double g = gamma_total(kGeom, kDrude, std::abs(w)); // Gamma/(2 pi J0)
    const double sign = w > 0 ? 1.0 : -1.0;
    // sign [1 + coth(beta w/2)] Gamma / (4 pi); the coth sum is evaluated
    // through 1 + coth(y) = 2/(1 - e^{-2y}), which is exact arithmetic for
    // y > 0 and avoids the catastrophic cancellation of the naive form at
    // strongly negative frequencies.
    const double rhs = sign * g / (1.0 - std::exp(-cfg.beta_medium * w));
    CHECK(std::abs(lhs - rhs) <= 1e-10 * std::abs(rhs));
    if (cfg.beta_medium * w > -25.0 && cfg.beta_medium * w < 25.0) {
      const double naive =
          0.5 * sign * (1.0 + 1.0 / std::tanh(0.5 * cfg.beta_medium * w)) * g;
      CHECK(std::abs(lhs - naive) <=
            1e-10 * std::abs(naive) + 1e-14 * std::abs(g));
    }
  }
}

TEST_CASE("effective density: zero-temperature limit is the Heaviside form") {
  const SphereBath bath(kGeom, kDrude);
  const ThermalConfig cfg{kZeroTemperatureBeta, kZeroTemperatureBeta, 3.0};
  CHECK(bath.effective(0.6144, cfg) ==
        doctest::Approx(gamma_total(kGeom, kDrude, 0.6144)).epsilon(1e-10));
  CHECK(bath.effective(-0.6144, cfg) == 0.0);
}

TEST_CASE("effective density is non-negative for random temperature pairs") {
  const SphereBath bath(kGeom, kDrude);
  std::mt19937 rng(11);
  std::uniform_real_distribution<double> bs(0.2, 30.0), ws(-3.0, 3.0);
  for (int pair = 0; pair < 20; ++pair) {
    const ThermalConfig cfg{bs(rng), bs(rng), 3.0};
    for (int i = 0; i < 25; ++i) CHECK(bath.effective(ws(rng), cfg) >= 0.0);
  }
}

TEST_CASE("J^M_td continuous and nonzero at 0; J^S_td(0) = 0") {
  const SphereBath bath(kGeom, kDrude);
  const double b = 10.0;
  const double left = dressed_density(bath.medium(), -1e-6, b);
  const double right = dressed_density(bath.medium(), 1e-6, b);
  const double at0 = dressed_density(bath.medium(), 0.0, b);
  CHECK(at0 > 0.0);
  CHECK(left == doctest::Approx(at0).epsilon(1e-3));
  CHECK(right == doctest::Approx(at0).epsilon(1e-3));
  CHECK(std::abs(dressed_density(bath.scattering(), 1e-6, b)) < 1e-9);
}

TEST_CASE("correlation basics") {
  // base = 0 -> 0
  DensityFn zero = [](double) { return 0.0; };
  CHECK(std::abs(correlation_direct(zero, 5.0, 3.0, 1.0)) == 0.0);

  // C(0) real and positive
  auto f = ohmic();
  const Complex c0 = correlation_direct(f, 5.0, 6.0, 0.0);
  CHECK(c0.imag() == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(c0.real() > 0.0);
}

TEST_CASE("correlation two-route equivalence on a smooth synthetic bath") {
  auto fm = ohmic();
  DensityFn fs = [](double w) { return 0.2 * w * w * std::exp(-0.7 * w); };
  const ThermalConfig cfg{4.0, 1.5, 8.0};
  for (double t : {0.0, 0.3, 1.0, 4.0}) {
    const Complex direct = correlation_direct(fm, cfg.beta_medium, cfg.omega_cut, t) +
                           correlation_direct(fs, cfg.beta_scattering, cfg.omega_cut, t);
    const Complex fourier = correlation_fourier(fm, fs, cfg, t);
    CHECK(std::abs(direct - fourier) < 1e-7 * (1.0 + std::abs(direct)));
  }
}

TEST_CASE("correlation linearity in the density") {
  auto fm = ohmic();
  DensityFn fs = [](double w) { return 0.3 * std::sin(w) * std::sin(w); };
  DensityFn both = [&](double w) { return fm(w) + fs(w); };
  const double beta = 3.0, cut = 5.0, t = 0.8;
  const Complex sum = correlation_direct(fm, beta, cut, t) +
                      correlation_direct(fs, beta, cut, t);
  const Complex combined = correlation_direct(both, beta, cut, t);
  CHECK(std::abs(sum - combined) < 1e-9);
}

TEST_CASE("equal-temperature correlation has real C(0)") {
  auto fm = ohmic();
  DensityFn fs = [](double w) { return 0.1 * w * w * w * std::exp(-w); };
  const ThermalConfig cfg{2.0, 2.0, 10.0};
  const Complex c0 = correlation_fourier(fm, fs, cfg, 0.0);
  CHECK(std::abs(c0.imag()) < 1e-9 * std::abs(c0.real()));
}

TEST_CASE("sphere-bath two-route agreement at one time") {
  const SphereBath bath(kGeom, kDrude);
  const ThermalConfig cfg{10.0, 1.0, 3.0};
  const Complex d = bath.correlation_direct_total(cfg, 1.0);
  const Complex f = bath.correlation_fourier_total(cfg, 1.0);
  const Complex c0 = bath.correlation_direct_total(cfg, 0.0);
  CHECK(std::abs(d - f) <= 1e-6 * std::abs(c0));
}

TEST_CASE("effective sweep table") {
  const SphereBath bath(kGeom, kDrude);
  const ThermalConfig cfg{10.0, 10.0, 3.0};
  std::vector<double> grid;
  for (double w = -3.0; w <= 3.0 + 1e-12; w += 0.25) grid.push_back(w);
  const auto table = effective_sweep(bath, cfg, grid, 2);
  CHECK(table.j_eff.size() == grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) {
    CHECK(table.j_eff[i] >= 0.0);
    CHECK(table.j_eff[i] ==
          doctest::Approx(table.j_td_medium[i] + table.j_td_scattering[i]));
  }
}
