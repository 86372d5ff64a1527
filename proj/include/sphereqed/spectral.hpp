#ifndef SPHEREQED_SPECTRAL_HPP
#define SPHEREQED_SPECTRAL_HPP

#include <span>
#include <vector>

#include "sphereqed/materials.hpp"
#include "sphereqed/types.hpp"

namespace sphereqed {

// Emitter outside the sphere, in units of the radius: d/a > 1.
struct SphereEmitterGeometry {
  double d_over_a = 1.5;
  Orientation orientation = Orientation::tangential;
};

enum class DensityKind { medium, scattering, vacuum, total };

// All densities are returned in units of J0; gamma_over_2pi is
// Gamma/(2 pi J0), evaluated from its own series, never as the sum.
struct DensityEvaluation {
  double j_medium = 0.0;
  double j_scattering = 0.0;
  double gamma_over_2pi = 0.0;
  int truncation_order = 0;
};

DensityEvaluation evaluate_densities(const SphereEmitterGeometry& g,
                                     const MaterialModel& m, double omega);

double j_medium(const SphereEmitterGeometry& g, const MaterialModel& m, double omega);
double j_scattering(const SphereEmitterGeometry& g, const MaterialModel& m, double omega);
double gamma_total(const SphereEmitterGeometry& g, const MaterialModel& m, double omega);

// J_vac/J0 = (omega/omega_ref)^3
double j_vacuum(double omega);

struct SpectralDensityTable {
  DensityKind kind;
  SphereEmitterGeometry geometry;
  MaterialModel material;
  std::vector<double> grid;   // omega/omega_ref, strictly increasing
  std::vector<double> values; // J/J0
  std::vector<int> truncation_order;
};

SpectralDensityTable sweep(DensityKind kind, const SphereEmitterGeometry& g,
                           const MaterialModel& m, std::span<const double> grid,
                           int threads = 1);

// All three series plus the vacuum law per grid point (shared Mie tables).
std::vector<DensityEvaluation> sweep_all(const SphereEmitterGeometry& g,
                                         const MaterialModel& m,
                                         std::span<const double> grid,
                                         int threads = 1);

} // namespace sphereqed

#endif
