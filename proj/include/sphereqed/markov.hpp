#ifndef SPHEREQED_MARKOV_HPP
#define SPHEREQED_MARKOV_HPP

#include <span>
#include <vector>

#include "sphereqed/thermal.hpp"

namespace sphereqed {

// Born-Markov quantities, in units of J0 (gamma = 2 pi J_eff, so gamma/J0 is
// 2 pi times the dimensionless effective density). The Lamb shift carries an
// explicit dependence on the cutoff; report it alongside.
struct DampingSplit {
  double total = 0.0;
  double medium = 0.0;
  double scattering = 0.0;
};

DampingSplit damping_rate(const DensityFn& medium, const DensityFn& scattering,
                          double omega, const ThermalConfig& cfg);

// S(omega) = PV int_{-cut}^{+cut} J_eff(w')/(omega - w') dw', evaluated by
// singularity subtraction:
//   int [J(w') - J(omega)]/(omega - w') dw' + J(omega) log|(omega+cut)/(omega-cut)|
// The _of form takes the effective density directly (synthetic densities in
// tests); lamb_shift assembles it from the two dressed channels.
double lamb_shift_of(const DensityFn& j_eff, double omega, double omega_cut,
                     std::span<const double> breakpoints = {}, double abs_tol = 1e-9);

double lamb_shift(const DensityFn& medium, const DensityFn& scattering,
                  double omega, const ThermalConfig& cfg,
                  std::span<const double> breakpoints = {}, double abs_tol = 1e-9);

struct MarkovReport {
  ThermalConfig config;
  std::vector<double> grid;
  std::vector<double> gamma_total;
  std::vector<double> gamma_medium;
  std::vector<double> gamma_scattering;
  std::vector<double> lamb;
};

MarkovReport markov_sweep(const SphereBath& bath, const ThermalConfig& cfg,
                          std::span<const double> grid, int threads = 1);

} // namespace sphereqed

#endif
