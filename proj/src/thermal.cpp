#include "sphereqed/thermal.hpp"

#include <cmath>

#include "sphereqed/parallel.hpp"
#include "sphereqed/quadrature.hpp"
#include "sphereqed/resonances.hpp"

namespace sphereqed {

namespace {

double sign_of(double x) { return x > 0.0 ? 1.0 : (x < 0.0 ? -1.0 : 0.0); }

// J(|w|) [1 + coth(beta w / 2)]/2 with the small-argument Laurent form; the
// caller supplies J(|w|) so the sphere evaluation is shared.
double dress_value(double j_abs, double omega, double beta) {
  const double x = beta * omega;
  if (std::abs(x) < 1e-4)
    return j_abs * sign_of(omega) * (0.5 + 1.0 / x + x / 12.0);
  // 1 + coth(x/2) = 2/(1 - e^{-x}), stable on both signs
  return j_abs * sign_of(omega) / (1.0 - std::exp(-x));
}

} // namespace

double extended_density(const DensityFn& base, double omega) {
  if (omega == 0.0) return 0.0;
  return sign_of(omega) * base(std::abs(omega));
}

double dressed_density(const DensityFn& base, double omega, double beta) {
  require(beta > 0.0, "dressed_density: beta must be > 0");
  if (omega == 0.0) {
    // limit for linearly-vanishing densities: J'(0)/beta
    const double h = 1e-7;
    return base(h) / (beta * h);
  }
  return dress_value(base(std::abs(omega)), omega, beta);
}

double effective_density(const DensityFn& medium, const DensityFn& scattering,
                         double omega, const ThermalConfig& cfg) {
  require(std::abs(omega) <= cfg.omega_cut * (1.0 + 1e-12),
          "effective_density: |omega| exceeds the cutoff");
  return dressed_density(medium, omega, cfg.beta_medium) +
         dressed_density(scattering, omega, cfg.beta_scattering);
}

Complex theta_factor(double omega_t, double beta_h_omega) {
  const double x = beta_h_omega;
  double coth;
  if (std::abs(x) < 1e-4)
    coth = 2.0 / x + x / 6.0;
  else
    coth = 1.0 / std::tanh(0.5 * x);
  return {coth * std::cos(omega_t), -std::sin(omega_t)};
}

Complex correlation_direct(const DensityFn& base, double beta, double omega_cut,
                           double t, std::span<const double> breakpoints,
                           double abs_tol) {
  require(t >= 0.0, "correlation_direct: t must be >= 0");
  require(omega_cut > 0.0, "correlation_direct: omega_cut must be > 0");
  auto integrand = [&](double w) -> Complex {
    if (w == 0.0) return 0.0;
    const double j = base(w);
    return j * theta_factor(w * t, beta * w);
  };
  const auto res = integrate(integrand, 0.0, omega_cut, breakpoints, abs_tol);
  require(res.converged, "correlation_direct: quadrature did not converge");
  return res.value;
}

Complex correlation_fourier(const DensityFn& medium, const DensityFn& scattering,
                            const ThermalConfig& cfg, double t,
                            std::span<const double> breakpoints, double abs_tol) {
  require(t >= 0.0, "correlation_fourier: t must be >= 0");
  std::vector<double> pts{0.0};
  for (double p : breakpoints) {
    pts.push_back(p);
    pts.push_back(-p);
  }
  auto integrand = [&](double w) -> Complex {
    const double j = effective_density(medium, scattering, w, cfg);
    return j * std::exp(Complex(0.0, -w * t));
  };
  const auto res = integrate(integrand, -cfg.omega_cut, cfg.omega_cut, pts, abs_tol);
  require(res.converged, "correlation_fourier: quadrature did not converge");
  return res.value;
}

SphereBath::SphereBath(SphereEmitterGeometry geometry, MaterialModel material)
    : geometry_(geometry), material_(material) {
  medium_ = [geometry, material](double w) {
    return w == 0.0 ? 0.0 : j_medium(geometry, material, w);
  };
  scattering_ = [geometry, material](double w) {
    return w == 0.0 ? 0.0 : j_scattering(geometry, material, w);
  };
  breakpoints_ = resonance_breakpoints(material, 1e9);
}

double SphereBath::effective(double omega, const ThermalConfig& cfg) const {
  // one Mie pass for both channels
  if (omega == 0.0) {
    const double h = 1e-7;
    const auto ev = evaluate_densities(geometry_, material_, h);
    return ev.j_medium / (cfg.beta_medium * h) +
           ev.j_scattering / (cfg.beta_scattering * h);
  }
  const auto ev = evaluate_densities(geometry_, material_, std::abs(omega));
  return dress_value(ev.j_medium, omega, cfg.beta_medium) +
         dress_value(ev.j_scattering, omega, cfg.beta_scattering);
}

Complex SphereBath::correlation_direct_total(const ThermalConfig& cfg, double t,
                                             double abs_tol) const {
  return correlation_direct(medium_, cfg.beta_medium, cfg.omega_cut, t,
                            breakpoints_, abs_tol) +
         correlation_direct(scattering_, cfg.beta_scattering, cfg.omega_cut, t,
                            breakpoints_, abs_tol);
}

Complex SphereBath::correlation_fourier_total(const ThermalConfig& cfg, double t,
                                              double abs_tol) const {
  require(t >= 0.0, "correlation_fourier: t must be >= 0");
  std::vector<double> pts{0.0};
  for (double p : breakpoints_) {
    if (p >= cfg.omega_cut) continue;
    pts.push_back(p);
    pts.push_back(-p);
  }
  const ThermalConfig cfg_copy = cfg;
  auto integrand = [this, &cfg_copy, t](double w) -> Complex {
    return effective(w, cfg_copy) * std::exp(Complex(0.0, -w * t));
  };
  const auto res = integrate(integrand, -cfg.omega_cut, cfg.omega_cut, pts, abs_tol);
  require(res.converged, "correlation_fourier: quadrature did not converge");
  return res.value;
}

EffectiveDensityTable effective_sweep(const SphereBath& bath, const ThermalConfig& cfg,
                                      std::span<const double> grid, int threads) {
  EffectiveDensityTable table;
  table.config = cfg;
  table.grid.assign(grid.begin(), grid.end());
  table.j_eff.resize(grid.size());
  table.j_td_medium.resize(grid.size());
  table.j_td_scattering.resize(grid.size());
  parallel_for(grid.size(), threads, [&](std::size_t i) {
    const double w = grid[i];
    table.j_td_medium[i] = dressed_density(bath.medium(), w, cfg.beta_medium);
    table.j_td_scattering[i] = dressed_density(bath.scattering(), w, cfg.beta_scattering);
    table.j_eff[i] = table.j_td_medium[i] + table.j_td_scattering[i];
  });
  return table;
}

} // namespace sphereqed
