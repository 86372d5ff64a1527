#ifndef SPHEREQED_MATERIALS_HPP
#define SPHEREQED_MATERIALS_HPP

#include <string>

#include "sphereqed/types.hpp"

namespace sphereqed {

// Dispersive sphere material in the dimensionless units used throughout:
// frequencies in omega/omega_ref with omega_ref = c k_r. Drude carries
// (k_p a, nu/omega_p); Debye carries (chi_0, tau omega_c) with
// k_c a = 1/sqrt(chi_0). The vacuum variant (epsilon = 1) exists for the
// degenerate-sphere checks and carries an explicit k_r a, since vacuum has
// no scale of its own.
enum class MaterialKind { drude, debye, vacuum };

struct MaterialModel {
  MaterialKind kind = MaterialKind::vacuum;
  double kr_a = 1.0;  // k_r * a
  double loss = 0.0;  // nu/omega_p (Drude) or tau*omega_c (Debye)
  double chi0 = 0.0;  // Debye static susceptibility

  static MaterialModel drude(double kp_a, double nu_over_omega_p);
  static MaterialModel debye(double chi0, double tau_omega_c);
  static MaterialModel vacuum_reference(double kr_a);
};

// Relative permittivity at omega (in omega_ref units, > 0).
Complex relative_permittivity(const MaterialModel& m, double omega);

std::string material_label(const MaterialModel& m);

// ---- SI boundary -----------------------------------------------------------

// SI-facing parameter sets; converted to the dimensionless MaterialModel and
// to the normalization context at the CLI edge only.
struct DrudeParameters {
  double plasma_frequency;     // omega_p [rad/s]
  double relaxation_frequency; // nu [rad/s]
};

struct DebyeParameters {
  double static_susceptibility; // chi_0
  double relaxation_time;       // tau [s]
};

// k_p = omega_p / c, and k_c = omega_c / c = 1/(a sqrt(chi_0)). The paper
// writes k_c = omega_c/a once; dimensional analysis forces omega_c/c.
double reference_wavenumber(const DrudeParameters& p);
double reference_wavenumber(const DebyeParameters& p, double radius);

struct NormalizationContext {
  double reference_wavenumber;   // k_r [1/m]
  double characteristic_density; // J0 [rad/s]
  double dipole_moment;          // mu [C m]
  double sphere_radius;          // a [m]
};

// J0 = (1/6pi^2) (k_r/(hbar eps0)) (mu k_r)^2
NormalizationContext make_normalization(double k_r, double mu, double a);

MaterialModel make_material(const DrudeParameters& p, double radius);
MaterialModel make_material(const DebyeParameters& p, double radius);

} // namespace sphereqed

#endif
