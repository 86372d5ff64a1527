#include "sphereqed/special_functions.hpp"

#include <algorithm>
#include <cmath>

namespace sphereqed::bessel {

namespace {

void check_order(int n) {
  require(n >= 0, "spherical Bessel order must be >= 0");
  require(n <= kMaxOrder, "spherical Bessel order exceeds N_MAX_ORDER");
}

void check_argument(Complex z) {
  require(is_finite(z), "non-finite argument to spherical Bessel function");
}

// Two-term ascending series, adequate to ~|z|^4 relative for |z| <= 1e-3:
// j_n(z) = z^n/(2n+1)!! [1 - z^2/(2(2n+3)) + ...]
std::vector<Complex> series_small(int nmax, Complex z) {
  std::vector<Complex> out(nmax + 1);
  Complex zn = 1.0;
  double dfact = 1.0;
  for (int n = 0; n <= nmax; ++n) {
    if (n > 0) {
      zn *= z;
      dfact *= 2 * n + 1;
    }
    out[n] = zn / dfact * (1.0 - z * z / (2.0 * (2 * n + 3)));
  }
  return out;
}

} // namespace

std::vector<Complex> spherical_j_array(int nmax, Complex z) {
  check_order(nmax);
  check_argument(z);
  const double az = std::abs(z);
  if (az == 0.0) {
    std::vector<Complex> out(nmax + 1, Complex(0.0));
    out[0] = 1.0;
    return out;
  }
  if (az < 1e-3) return series_small(nmax, z);

  const Complex j0 = std::sin(z) / z;
  const Complex j1 = std::sin(z) / (z * z) - std::cos(z) / z;

  std::vector<Complex> out(nmax + 1);
  if (static_cast<double>(nmax) <= az) {
    // upward recurrence, stable while n < |z|
    out[0] = j0;
    if (nmax >= 1) out[1] = j1;
    for (int n = 1; n < nmax; ++n)
      out[n + 1] = Complex(2 * n + 1, 0) / z * out[n] - out[n - 1];
    return out;
  }

  // Miller backward recurrence with normalization against j_0 (or j_1 when
  // j_0 sits near one of its zeros).
  const int start = nmax + 16 + static_cast<int>(std::ceil(1.5 * std::sqrt(double(nmax)))) +
                    static_cast<int>(az);
  Complex fp = 0.0;
  Complex f = 1e-300;
  for (int n = start; n >= 0; --n) {
    const Complex fm = Complex(2 * n + 3, 0) / z * f - fp;
    fp = f;
    f = fm;
    if (n <= nmax) out[n] = f;
    if (std::abs(f.real()) > 1e250 || std::abs(f.imag()) > 1e250) {
      f *= 1e-250;
      fp *= 1e-250;
      for (int k = std::min(n, nmax); k <= nmax; ++k) out[k] *= 1e-250;
    }
  }
  const Complex scale =
      (std::abs(j0) >= std::abs(j1) || nmax < 1) ? j0 / out[0] : j1 / out[1];
  for (auto& v : out) v *= scale;
  return out;
}

std::vector<Complex> spherical_h1_array(int nmax, Complex z) {
  std::vector<Complex> out;
  const int valid = spherical_h1_array_guarded(nmax, z, out, 1e280);
  require(valid == nmax, "spherical Hankel overflow before requested order");
  return out;
}

int spherical_h1_array_guarded(int nmax, Complex z, std::vector<Complex>& out,
                               double guard) {
  check_order(nmax);
  check_argument(z);
  require(z != Complex(0.0), "spherical Hankel function has a pole at z = 0");
  out.assign(nmax + 1, Complex(0.0));
  const Complex eiz = std::exp(Complex(0, 1) * z);
  out[0] = Complex(0, -1) * eiz / z;
  if (nmax == 0) return 0;
  out[1] = -eiz / z * (1.0 + Complex(0, 1) / z);
  int valid = 1;
  for (int n = 1; n < nmax; ++n) {
    out[n + 1] = Complex(2 * n + 1, 0) / z * out[n] - out[n - 1];
    valid = n + 1;
    if (std::abs(out[n + 1].real()) > guard || std::abs(out[n + 1].imag()) > guard)
      break;
  }
  return valid;
}

Complex spherical_j(int n, Complex z) {
  check_order(n);
  return spherical_j_array(n, z)[n];
}

Complex spherical_h1(int n, Complex z) {
  check_order(n);
  return spherical_h1_array(n, z)[n];
}

Complex riccati_psi(int n, Complex z) { return z * spherical_j(n, z); }

Complex riccati_psi_prime(int n, Complex z) {
  check_order(n);
  if (n == 0) return std::cos(z);
  auto j = spherical_j_array(n, z);
  return z * j[n - 1] - Complex(n, 0) * j[n];
}

Complex riccati_zeta(int n, Complex z) { return z * spherical_h1(n, z); }

Complex riccati_zeta_prime(int n, Complex z) {
  check_order(n);
  if (n == 0) return std::exp(Complex(0, 1) * z);
  auto h = spherical_h1_array(n, z);
  return z * h[n - 1] - Complex(n, 0) * h[n];
}

namespace {

double j_real(int n, double x) {
  return spherical_j_array(n, Complex(x, 0.0))[n].real();
}

// j_n'(x) = j_{n-1}(x) - (n+1)/x j_n(x); j_0' = -j_1
double j_prime_real(int n, double x) {
  auto j = spherical_j_array(n + 1, Complex(x, 0.0));
  if (n == 0) return -j[1].real();
  return j[n - 1].real() - double(n + 1) / x * j[n].real();
}

} // namespace

double bessel_zero(int n, int ell) {
  require(n >= 0 && n <= 20, "bessel_zero: order out of range (n <= 20)");
  require(ell >= 1 && ell <= 10, "bessel_zero: index out of range (ell <= 10)");

  // Row m zeros interlace with row m-1: z_{m-1,l} < z_{m,l} < z_{m-1,l+1}.
  // Build rows upward; row m needs ell + (n - m) entries.
  std::vector<double> row(ell + n + 1);
  for (int k = 1; k <= ell + n; ++k) row[k - 1] = k * kPi;
  for (int m = 1; m <= n; ++m) {
    const int count = ell + n - m;
    std::vector<double> next(count);
    for (int l = 0; l < count; ++l) {
      double lo = row[l], hi = row[l + 1];
      double flo = j_real(m, lo);
      if (flo == 0.0) {
        next[l] = lo;
        continue;
      }
      require(flo * j_real(m, hi) < 0.0, "bessel_zero: bracket failure");
      for (int it = 0; it < 80; ++it) {
        const double mid = 0.5 * (lo + hi);
        const double fm = j_real(m, mid);
        if (fm == 0.0) {
          lo = hi = mid;
          break;
        }
        (flo * fm < 0.0 ? hi : lo) = mid;
        if (flo * fm >= 0.0) flo = fm;
        if (hi - lo < 1e-13) break;
      }
      double x = 0.5 * (lo + hi);
      const double d = j_prime_real(m, x);
      if (d != 0.0) {
        const double step = j_real(m, x) / d;
        if (std::abs(step) < 1e-6) x -= step;
      }
      next[l] = x;
    }
    row = std::move(next);
  }
  return row[ell - 1];
}

} // namespace sphereqed::bessel
