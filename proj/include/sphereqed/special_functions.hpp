#ifndef SPHEREQED_SPECIAL_FUNCTIONS_HPP
#define SPHEREQED_SPECIAL_FUNCTIONS_HPP

#include <vector>

#include "sphereqed/types.hpp"

namespace sphereqed::bessel {

// Hard cap on the order of any spherical Bessel/Hankel evaluation. Callers
// needing more get an explicit error instead of silent inaccuracy.
inline constexpr int kMaxOrder = 128;

// j_0..j_nmax at complex z. Upward recurrence for nmax <= |z|, Miller-style
// backward recurrence normalized against j_0/j_1 otherwise; ascending series
// for tiny |z|; exact limit at z = 0.
std::vector<Complex> spherical_j_array(int nmax, Complex z);

// h^(1)_0..h^(1)_nmax at complex z != 0, by upward recurrence from the closed
// forms h_0 = -i e^{iz}/z and h_1 = -e^{iz}(1 + i/z)/z.
std::vector<Complex> spherical_h1_array(int nmax, Complex z);

// Same, but stops extending once the magnitude passes `guard` (the remaining
// orders would overflow; their series contributions are negligible by then).
// Returns the largest valid order; entries above it are unspecified.
int spherical_h1_array_guarded(int nmax, Complex z, std::vector<Complex>& out,
                               double guard = 1e140);

Complex spherical_j(int n, Complex z);
Complex spherical_h1(int n, Complex z);

// Riccati-Bessel functions psi_n(z) = z j_n(z), zeta_n(z) = z h^(1)_n(z) and
// their derivatives psi'_n = z j_{n-1} - n j_n (same pattern for zeta).
Complex riccati_psi(int n, Complex z);
Complex riccati_psi_prime(int n, Complex z);
Complex riccati_zeta(int n, Complex z);
Complex riccati_zeta_prime(int n, Complex z);

// ell-th positive zero of j_n (n <= 20, ell <= 10), absolute accuracy 1e-10.
// Brackets through the interlacing property against row n-1, then bisection
// plus a Newton polish.
double bessel_zero(int n, int ell);

} // namespace sphereqed::bessel

#endif
