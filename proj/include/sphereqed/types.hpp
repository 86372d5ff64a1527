#ifndef SPHEREQED_TYPES_HPP
#define SPHEREQED_TYPES_HPP

#include <cmath>
#include <complex>
#include <stdexcept>

namespace sphereqed {

using Complex = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846;

// SI constants, used only at the unit boundary (everything internal is
// expressed in omega/omega_ref and J/J0).
inline constexpr double kHbar = 1.054571817e-34;      // J s
inline constexpr double kSpeedOfLight = 2.99792458e8; // m/s
inline constexpr double kVacuumPermittivity = 8.8541878128e-12; // F/m

enum class Orientation { tangential, radial };

inline bool is_finite(Complex z) {
  return std::isfinite(z.real()) && std::isfinite(z.imag());
}

inline void require(bool cond, const char* msg) {
  if (!cond) throw std::domain_error(msg);
}

} // namespace sphereqed

#endif
