#ifndef SPHEREQED_THERMAL_HPP
#define SPHEREQED_THERMAL_HPP

#include <functional>
#include <span>
#include <vector>

#include "sphereqed/materials.hpp"
#include "sphereqed/spectral.hpp"
#include "sphereqed/types.hpp"

namespace sphereqed {

// Physical (positive-frequency) density in J0 units.
using DensityFn = std::function<double(double)>;

// Inverse temperatures as beta hbar omega_ref; zero temperature is the finite
// sentinel below instead of a special code path (residual error < 1e-40).
inline constexpr double kZeroTemperatureBeta = 1e6;

struct ThermalConfig {
  double beta_medium = kZeroTemperatureBeta;
  double beta_scattering = kZeroTemperatureBeta;
  double omega_cut = 3.0;
};

// Odd extension: sign(omega) J(|omega|).
double extended_density(const DensityFn& base, double omega);

// J_td(omega) = J_ext(omega)/2 [1 + coth(beta omega/2)]. Near beta*omega = 0
// the Laurent form J_ext (1/(beta omega) + 1/2 + beta omega/12) is used; at
// omega = 0 the limit J'(0)/beta is taken with a small probe step.
double dressed_density(const DensityFn& base, double omega, double beta);

// J_eff = J^M_td + J^S_td.
double effective_density(const DensityFn& medium, const DensityFn& scattering,
                         double omega, const ThermalConfig& cfg);

// Theta(omega t; beta hbar omega) = coth(beta hbar omega / 2) cos(omega t) - i sin(omega t)
Complex theta_factor(double omega_t, double beta_h_omega);

// One-sided route: int_0^cut J(w) Theta(w t; beta w) dw. Breakpoints mark the
// resonance peaks of the integrand.
Complex correlation_direct(const DensityFn& base, double beta, double omega_cut,
                           double t, std::span<const double> breakpoints = {},
                           double abs_tol = 1e-9);

// Two-sided route: int_{-cut}^{+cut} J_eff(w) e^{-i w t} dw.
Complex correlation_fourier(const DensityFn& medium, const DensityFn& scattering,
                            const ThermalConfig& cfg, double t,
                            std::span<const double> breakpoints = {},
                            double abs_tol = 1e-9);

// Sphere-backed bath: binds geometry/material to the two density functions
// and carries the resonance breakpoints for quadrature panels. Evaluations
// share the Mie tables between the medium and scattering channels.
class SphereBath {
 public:
  SphereBath(SphereEmitterGeometry geometry, MaterialModel material);

  const DensityFn& medium() const { return medium_; }
  const DensityFn& scattering() const { return scattering_; }
  std::span<const double> breakpoints() const { return breakpoints_; }

  double effective(double omega, const ThermalConfig& cfg) const;
  Complex correlation_direct_total(const ThermalConfig& cfg, double t,
                                   double abs_tol = 1e-9) const;
  Complex correlation_fourier_total(const ThermalConfig& cfg, double t,
                                    double abs_tol = 1e-9) const;

 private:
  SphereEmitterGeometry geometry_;
  MaterialModel material_;
  DensityFn medium_, scattering_;
  std::vector<double> breakpoints_;
};

struct EffectiveDensityTable {
  ThermalConfig config;
  std::vector<double> grid;       // [-omega_cut, +omega_cut]
  std::vector<double> j_eff;      // >= 0 everywhere
  std::vector<double> j_td_medium;
  std::vector<double> j_td_scattering;
};

EffectiveDensityTable effective_sweep(const SphereBath& bath, const ThermalConfig& cfg,
                                      std::span<const double> grid, int threads = 1);

} // namespace sphereqed

#endif
