#ifndef SPHEREQED_MIE_HPP
#define SPHEREQED_MIE_HPP

#include <vector>

#include "sphereqed/materials.hpp"
#include "sphereqed/types.hpp"

namespace sphereqed {

// Per-multipole sphere coefficients. Sign convention: the scattered exterior
// field carries +A_n h_n / +B_n h_n, so a passive sphere has
// Re(A_n) + |A_n|^2 <= 0 (likewise B_n) and a lossless one |2A_n + 1| = 1.
struct MieCoefficient {
  int order;             // n >= 1
  Complex a;             // magnetic-type (no permittivity weights)
  Complex b;             // electric-type
  double size_parameter; // x = k_omega a
};

// Wiscombe-style single-sphere order heuristic with a wide safety margin.
int default_order_limit(double size_parameter);

// A_n, B_n for n = 1..n_max at omega (omega_ref units). Uses the principal
// branch of sqrt(eps) flipped to Im >= 0 so the interior wave decays.
std::vector<MieCoefficient> mie_coefficients(const MaterialModel& material,
                                             double omega, int n_max);

namespace detail {

// Shared per-frequency workspace: Bessel/Hankel tables at the surface (x) and
// interior (y = sqrt(eps) x) arguments plus per-order coefficient assembly.
// Orders above `max_order()` have negligible coefficients (the Hankel guard
// tripped); treated as zero.
class MieWorkspace {
 public:
  MieWorkspace(const MaterialModel& material, double omega, int order_cap);

  int max_order() const { return max_order_; }
  double size_parameter() const { return x_; }

  // 1-based order; n <= max_order()
  Complex a(int n) const;
  Complex b(int n) const;

 private:
  double x_;
  Complex y_; // sqrt(eps) x, Im >= 0
  Complex eps_;
  int max_order_;
  std::vector<Complex> jx_, jy_, hx_;
};

} // namespace detail

} // namespace sphereqed

#endif
