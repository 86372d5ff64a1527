#include "sphereqed/mie.hpp"

#include <cmath>

#include "sphereqed/special_functions.hpp"

namespace sphereqed {

int default_order_limit(double size_parameter) {
  const double x = std::abs(size_parameter);
  return static_cast<int>(std::ceil(x + 4.0 * std::cbrt(x) + 10.0));
}

namespace detail {

MieWorkspace::MieWorkspace(const MaterialModel& material, double omega, int order_cap) {
  require(omega > 0.0, "Mie coefficients require omega > 0");
  require(order_cap >= 1 && order_cap <= bessel::kMaxOrder,
          "Mie order cap out of range");
  x_ = omega * material.kr_a;
  eps_ = relative_permittivity(material, omega);
  Complex sq = std::sqrt(eps_);
  if (sq.imag() < 0.0) sq = -sq; // decaying interior wave
  y_ = sq * x_;

  max_order_ = bessel::spherical_h1_array_guarded(order_cap, Complex(x_, 0.0), hx_);
  jx_ = bessel::spherical_j_array(max_order_, Complex(x_, 0.0));
  jy_ = bessel::spherical_j_array(max_order_, y_);
}

Complex MieWorkspace::a(int n) const {
  const Complex ppx = x_ * jx_[n - 1] - Complex(n, 0) * jx_[n];
  const Complex ppy = y_ * jy_[n - 1] - Complex(n, 0) * jy_[n];
  const Complex zpx = x_ * hx_[n - 1] - Complex(n, 0) * hx_[n];
  const Complex den = jy_[n] * zpx - hx_[n] * ppy;
  require(den != Complex(0.0), "vanishing Mie denominator (A_n)");
  return (jx_[n] * ppy - jy_[n] * ppx) / den;
}

Complex MieWorkspace::b(int n) const {
  const Complex ppx = x_ * jx_[n - 1] - Complex(n, 0) * jx_[n];
  const Complex ppy = y_ * jy_[n - 1] - Complex(n, 0) * jy_[n];
  const Complex zpx = x_ * hx_[n - 1] - Complex(n, 0) * hx_[n];
  const Complex den = eps_ * jy_[n] * zpx - hx_[n] * ppy;
  require(den != Complex(0.0), "vanishing Mie denominator (B_n)");
  return (jx_[n] * ppy - eps_ * jy_[n] * ppx) / den;
}

} // namespace detail

std::vector<MieCoefficient> mie_coefficients(const MaterialModel& material,
                                             double omega, int n_max) {
  require(n_max >= 1 && n_max <= bessel::kMaxOrder,
          "mie_coefficients: n_max out of [1, N_MAX_ORDER]");
  detail::MieWorkspace ws(material, omega, n_max);
  std::vector<MieCoefficient> out;
  out.reserve(n_max);
  for (int n = 1; n <= n_max; ++n) {
    const Complex a = n <= ws.max_order() ? ws.a(n) : Complex(0.0);
    const Complex b = n <= ws.max_order() ? ws.b(n) : Complex(0.0);
    out.push_back({n, a, b, ws.size_parameter()});
  }
  return out;
}

} // namespace sphereqed
