#ifndef SPHEREQED_QUADRATURE_HPP
#define SPHEREQED_QUADRATURE_HPP

#include <functional>
#include <span>

#include "sphereqed/types.hpp"

namespace sphereqed {

struct QuadratureResult {
  Complex value{0.0};
  double error_estimate = 0.0;
  int evaluations = 0;
  bool converged = false;
};

// Adaptive Gauss-Kronrod 7/15 over [a, b] with breakpoints forced as panel
// boundaries (resonance peaks, the origin). Panels split until the summed
// error estimate falls below abs_tol or max_panels is reached.
QuadratureResult integrate(const std::function<Complex(double)>& f, double a,
                           double b, std::span<const double> breakpoints,
                           double abs_tol, int max_panels = 4000);

QuadratureResult integrate_real(const std::function<double(double)>& f, double a,
                                double b, std::span<const double> breakpoints,
                                double abs_tol, int max_panels = 4000);

} // namespace sphereqed

#endif
