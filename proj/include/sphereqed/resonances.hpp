#ifndef SPHEREQED_RESONANCES_HPP
#define SPHEREQED_RESONANCES_HPP

#include <span>
#include <string>
#include <vector>

#include "sphereqed/materials.hpp"
#include "sphereqed/types.hpp"

namespace sphereqed {

enum class ResonanceFamily { plasmonic, dielectric_h, dielectric_e };

struct BandwidthSplit {
  double total = 0.0;
  double material = 0.0;
  double radiative = 0.0;
};

// Small-sphere closed forms. Valid asymptotically for k_r a <~ 1; positions
// and 3 dB fractional bandwidths, with the material/radiative loss split.
struct ResonanceDescriptor {
  ResonanceFamily family;
  int multipole = 1;    // n >= 1
  int radial_index = 0; // ell >= 1 for dielectric families, 0 for plasmonic
  double frequency = 0.0;            // omega/omega_ref
  double fractional_bandwidth = 0.0; // 3 dB width / frequency
  double material_loss = 0.0;        // contributions summing to the bandwidth
  double radiative_loss = 0.0;
  std::string label;
};

// omega_n/omega_p = sqrt(n/(2n+1)) [1 - (n+1)(k_p a)^2/((3+2n)(4n^2-1))]
double plasmonic_resonance(int n, double kp_a);
BandwidthSplit plasmonic_fbw(int n, double kp_a, double nu_over_omega_p);

// H-type uses z_{n-1,l}, E-type z_{n,l}. The (k_c a)^2 correction enters with
// a minus sign: the Mie peaks of the paper's own Debye sphere fix the sign
// numerically (coefficients match to three digits).
double dielectric_resonance(ResonanceFamily family, int n, int ell, double kc_a);
BandwidthSplit dielectric_fbw(ResonanceFamily family, int n, int ell, double kc_a,
                              double tau_omega_c);

ResonanceDescriptor plasmonic_mode(int n, double kp_a, double nu_over_omega_p);
ResonanceDescriptor dielectric_mode(ResonanceFamily family, int n, int ell,
                                    double kc_a, double tau_omega_c);

// Modes of the given material with frequency <= omega_max, sorted by
// frequency. Empty for vacuum.
std::vector<ResonanceDescriptor> sphere_resonances(const MaterialModel& m,
                                                   double omega_max, int n_max = 5,
                                                   int ell_max = 2);

// Resonance frequencies in (0, omega_cut), for quadrature panel boundaries.
std::vector<double> resonance_breakpoints(const MaterialModel& m, double omega_cut);

struct PeakAlignment {
  ResonanceDescriptor mode;
  bool found = false;          // false: no local maximum in the search window
  double peak_frequency = 0.0; // parabolic-refined
  double peak_value = 0.0;
  double offset_bandwidths = 0.0; // |peak - prediction| / (fbw * prediction)
};

// Nearest local maximum of (grid, values) within +-3 predicted bandwidths of
// each prediction.
std::vector<PeakAlignment> peak_alignment(std::span<const double> grid,
                                          std::span<const double> values,
                                          std::span<const ResonanceDescriptor> predictions);

} // namespace sphereqed

#endif
