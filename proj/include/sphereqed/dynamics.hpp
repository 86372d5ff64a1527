#ifndef SPHEREQED_DYNAMICS_HPP
#define SPHEREQED_DYNAMICS_HPP

#include <functional>
#include <vector>

#include "sphereqed/thermal.hpp"
#include "sphereqed/types.hpp"

namespace sphereqed {

// ---- bath discretization ---------------------------------------------------

enum class DiscretizationRule { midpoint, gauss };

struct BathMode {
  double omega;    // omega_ref units, may be negative
  double coupling; // g_k / omega_ref, >= 0
};

struct DiscretizedBath {
  std::vector<BathMode> modes; // strictly increasing frequency
  int n_plus = 0;
  int n_minus = 0;
  double omega_cut = 0.0;
  DiscretizationRule rule = DiscretizationRule::midpoint;
};

// g_k = sqrt(eta J_eff(omega_k) dw_k): the coupling strength eta = J0/omega_ref
// scales the whole effective density (all densities are linear in J0).
// j_eff is in J0 units over [-omega_cut, omega_cut].
DiscretizedBath discretize(const DensityFn& j_eff, double eta, double omega_cut,
                           int n_plus, int n_minus,
                           DiscretizationRule rule = DiscretizationRule::midpoint);

// ---- emitter / simulation configuration ------------------------------------

enum class InitialState { x_minus, x_plus, ground, excited };

struct EmitterConfig {
  double omega_a = 0.6144; // bare transition frequency, omega_ref units
  double eta = 5e-3;       // J0 / omega_ref
  InitialState initial_state = InitialState::x_minus;
};

enum class Engine { krylov, mps };

struct SimulationParams {
  double dt = 5e-4;
  double t_final = 50.0;
  Engine engine = Engine::mps;
  int n_ph = 2;            // local boson dimension
  int max_bond = 200;      // D (mps)
  double trunc_err = 1e-12; // per-SVD discarded weight budget delta (mps)
  int krylov_dim = 16;
  int sample_every = 1;    // record observables every k-th step
};

// ---- Hamiltonian ------------------------------------------------------------

// H = omega_a sigma_z/2 + sum_k omega_k n_k - sigma_x sum_k g_k (a_k + a_k^+)
// (star geometry: the emitter couples to every mode).
struct StarHamiltonian {
  double omega_a = 0.0;
  std::vector<BathMode> modes;
};

StarHamiltonian build_hamiltonian(const DiscretizedBath& bath,
                                  const EmitterConfig& emitter);

// ---- trajectories -----------------------------------------------------------

struct Trajectory {
  std::vector<double> times;
  std::vector<double> sx;
  std::vector<double> sz;
  std::vector<double> norm_dev; // |<psi|psi> - 1|
  std::vector<int> max_bond;    // mps only; 0 for krylov
  double accumulated_truncation = 0.0; // sum of discarded SVD weight (mps)
  double energy_drift = 0.0;           // max |<H>(t) - <H>(0)| over the run
  int bond_saturation_events = 0;      // SVDs where the D cap forced extra discard
};

// Exact propagation in the full product space (dim = 2 n_ph^N <= 2^22),
// short-iterate Lanczos exponential per step. Serves as the oracle engine.
Trajectory evolve_krylov(const StarHamiltonian& h, InitialState initial,
                         const SimulationParams& params);

// Two-site TDVP on the star MPO with the emitter site first and the modes
// arranged in consecutive (negative, positive) frequency pairs.
Trajectory evolve_mps(const StarHamiltonian& h, InitialState initial,
                      const SimulationParams& params);

Trajectory evolve(const StarHamiltonian& h, InitialState initial,
                  const SimulationParams& params);

// ---- small helpers used by tests -------------------------------------------

// <sigma_x>, <sigma_z>, <psi|psi> of a full state vector in the Krylov
// engine's basis layout (emitter index fastest).
struct PauliExpectations {
  double sx = 0.0;
  double sy = 0.0;
  double sz = 0.0;
  double norm = 0.0;
};

PauliExpectations observables(const std::vector<Complex>& state, int n_ph, int n_modes);

// Dense matrix of the Hamiltonian for small systems (tests only).
std::vector<Complex> dense_hamiltonian(const StarHamiltonian& h, int n_ph);

} // namespace sphereqed

#endif
