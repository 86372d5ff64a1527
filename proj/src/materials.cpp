#include "sphereqed/materials.hpp"

#include <cmath>

namespace sphereqed {

MaterialModel MaterialModel::drude(double kp_a, double nu_over_omega_p) {
  require(kp_a > 0.0, "Drude: k_p a must be > 0");
  require(nu_over_omega_p >= 0.0, "Drude: nu/omega_p must be >= 0");
  return {MaterialKind::drude, kp_a, nu_over_omega_p, 0.0};
}

MaterialModel MaterialModel::debye(double chi0, double tau_omega_c) {
  require(chi0 > 0.0, "Debye: chi_0 must be > 0");
  require(tau_omega_c >= 0.0, "Debye: tau omega_c must be >= 0");
  return {MaterialKind::debye, 1.0 / std::sqrt(chi0), tau_omega_c, chi0};
}

MaterialModel MaterialModel::vacuum_reference(double kr_a) {
  require(kr_a > 0.0, "vacuum reference: k_r a must be > 0");
  return {MaterialKind::vacuum, kr_a, 0.0, 0.0};
}

Complex relative_permittivity(const MaterialModel& m, double omega) {
  require(omega > 0.0, "permittivity requires omega > 0");
  switch (m.kind) {
    case MaterialKind::drude:
      // eps = 1 - omega_p^2/(omega^2 + i nu omega), in omega_p units
      return 1.0 - 1.0 / (omega * Complex(omega, m.loss));
    case MaterialKind::debye:
      // eps = 1 + chi_0/(1 - i tau omega), in omega_c units
      return 1.0 + m.chi0 / Complex(1.0, -m.loss * omega);
    case MaterialKind::vacuum:
      return 1.0;
  }
  return 1.0;
}

std::string material_label(const MaterialModel& m) {
  switch (m.kind) {
    case MaterialKind::drude: return "drude";
    case MaterialKind::debye: return "debye";
    case MaterialKind::vacuum: return "vacuum";
  }
  return "unknown";
}

double reference_wavenumber(const DrudeParameters& p) {
  require(p.plasma_frequency > 0.0, "Drude: omega_p must be > 0");
  return p.plasma_frequency / kSpeedOfLight;
}

double reference_wavenumber(const DebyeParameters& p, double radius) {
  require(p.static_susceptibility > 0.0, "Debye: chi_0 must be > 0");
  require(radius > 0.0, "sphere radius must be > 0");
  // omega_c = c/(a sqrt(chi_0)) so k_c = omega_c/c = 1/(a sqrt(chi_0))
  return 1.0 / (radius * std::sqrt(p.static_susceptibility));
}

NormalizationContext make_normalization(double k_r, double mu, double a) {
  require(k_r > 0.0, "reference wavenumber must be > 0");
  require(mu > 0.0, "dipole moment must be > 0");
  require(a > 0.0, "sphere radius must be > 0");
  const double j0 = (1.0 / (6.0 * kPi * kPi)) * (k_r / (kHbar * kVacuumPermittivity)) *
                    (mu * k_r) * (mu * k_r);
  return {k_r, j0, mu, a};
}

MaterialModel make_material(const DrudeParameters& p, double radius) {
  require(p.relaxation_frequency >= 0.0, "Drude: nu must be >= 0");
  const double kp = reference_wavenumber(p);
  return MaterialModel::drude(kp * radius, p.relaxation_frequency / p.plasma_frequency);
}

MaterialModel make_material(const DebyeParameters& p, double radius) {
  require(p.relaxation_time >= 0.0, "Debye: tau must be >= 0");
  const double omega_c = kSpeedOfLight * reference_wavenumber(p, radius);
  return MaterialModel::debye(p.static_susceptibility, p.relaxation_time * omega_c);
}

} // namespace sphereqed
