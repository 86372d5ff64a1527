#include "sphereqed/markov.hpp"

#include <cmath>

#include "sphereqed/parallel.hpp"
#include "sphereqed/quadrature.hpp"

namespace sphereqed {

DampingSplit damping_rate(const DensityFn& medium, const DensityFn& scattering,
                          double omega, const ThermalConfig& cfg) {
  DampingSplit out;
  out.medium = 2.0 * kPi * dressed_density(medium, omega, cfg.beta_medium);
  out.scattering = 2.0 * kPi * dressed_density(scattering, omega, cfg.beta_scattering);
  out.total = out.medium + out.scattering;
  return out;
}

double lamb_shift_of(const DensityFn& j_eff, double omega, double omega_cut,
                     std::span<const double> breakpoints, double abs_tol) {
  const double cut = omega_cut;
  require(std::abs(omega) < cut, "lamb_shift: omega must lie inside (-cut, cut)");

  const double j_at = j_eff(omega);
  auto subtracted = [&](double w) {
    if (w == omega) return 0.0; // removable point; integrand -> -J_eff'(omega)
    return (j_eff(w) - j_at) / (omega - w);
  };

  std::vector<double> pts{0.0, omega};
  for (double p : breakpoints) {
    if (p <= 0.0 || p >= cut) continue;
    pts.push_back(p);
    pts.push_back(-p);
  }
  const auto res = integrate_real(subtracted, -cut, cut, pts, abs_tol);
  require(res.converged, "lamb_shift: quadrature did not converge");
  return res.value.real() + j_at * std::log(std::abs((omega + cut) / (omega - cut)));
}

double lamb_shift(const DensityFn& medium, const DensityFn& scattering,
                  double omega, const ThermalConfig& cfg,
                  std::span<const double> breakpoints, double abs_tol) {
  auto j_eff = [&](double w) {
    return effective_density(medium, scattering, w, cfg);
  };
  return lamb_shift_of(j_eff, omega, cfg.omega_cut, breakpoints, abs_tol);
}

MarkovReport markov_sweep(const SphereBath& bath, const ThermalConfig& cfg,
                          std::span<const double> grid, int threads) {
  MarkovReport rep;
  rep.config = cfg;
  rep.grid.assign(grid.begin(), grid.end());
  const std::size_t n = grid.size();
  rep.gamma_total.resize(n);
  rep.gamma_medium.resize(n);
  rep.gamma_scattering.resize(n);
  rep.lamb.resize(n);
  parallel_for(n, threads, [&](std::size_t i) {
    const auto d = damping_rate(bath.medium(), bath.scattering(), grid[i], cfg);
    rep.gamma_total[i] = d.total;
    rep.gamma_medium[i] = d.medium;
    rep.gamma_scattering[i] = d.scattering;
    rep.lamb[i] = lamb_shift(bath.medium(), bath.scattering(), grid[i], cfg,
                             bath.breakpoints());
  });
  return rep;
}

} // namespace sphereqed
