#include "sphereqed/spectral.hpp"

#include <algorithm>
#include <cmath>

#include "sphereqed/mie.hpp"
#include "sphereqed/parallel.hpp"
#include "sphereqed/special_functions.hpp"

namespace sphereqed {

namespace {

void check_geometry(const SphereEmitterGeometry& g) {
  require(g.d_over_a > 1.0, "emitter must sit strictly outside the sphere (d/a > 1)");
}

// Free-dipole parts of the scattering series sum exactly to 4/3 (tangential)
// and 2/3 (radial), which turns J_S into J_vac plus a Mie correction series.
// The correction terms die at order ~ k_omega*a, not ~ k_omega*d, so the
// far-field limit stays inside the order cap. Gamma keeps its own verbatim
// series so the sum rule crosses independent code paths.
struct SeriesSums {
  double s_corr = 0.0; // scattering correction
  double m = 0.0;      // medium
  double g_corr = 0.0; // gamma resonant part
};

DensityEvaluation evaluate_impl(const SphereEmitterGeometry& g,
                                const MaterialModel& mat, double omega) {
  check_geometry(g);
  require(omega >= 0.0 && std::isfinite(omega), "omega must be finite and >= 0");
  if (omega == 0.0) return {0.0, 0.0, 0.0, 0};

  const double u3 = omega * omega * omega;
  if (mat.kind == MaterialKind::vacuum)
    return {0.0, u3, u3, 0};

  const double xd = omega * mat.kr_a * g.d_over_a;
  const bool tangential = g.orientation == Orientation::tangential;

  // First pass with a modest cap; rare slow convergence retries at the hard cap.
  int cap = std::min(bessel::kMaxOrder, default_order_limit(omega * mat.kr_a) + 8);
  for (;;) {
    detail::MieWorkspace ws(mat, omega, cap);
    std::vector<Complex> hd;
    const int hd_valid = bessel::spherical_h1_array_guarded(ws.max_order(), Complex(xd, 0.0), hd);
    const int max_n = std::min(ws.max_order(), hd_valid);
    const auto jd = bessel::spherical_j_array(max_n, Complex(xd, 0.0));

    SeriesSums sums;
    int small_run = 0;
    int used = 0;
    bool converged = false;
    for (int n = 1; n <= max_n; ++n) {
      const Complex A = ws.a(n);
      const Complex B = ws.b(n);
      const double jdn = jd[n].real();
      const Complex hdn = hd[n];
      double tS, tM, tG;
      if (tangential) {
        const double pd = (xd * jd[n - 1].real() - n * jd[n].real()) / xd;
        const Complex zd = (xd * hd[n - 1] - Complex(n, 0) * hd[n]) / xd;
        const Complex wA = A * hdn;
        const Complex wB = B * zd;
        const double c = 2 * n + 1;
        tS = c * (2.0 * jdn * wA.real() + std::norm(wA) +
                  2.0 * pd * wB.real() + std::norm(wB));
        tM = -c * ((wB * std::conj(zd)).real() + std::norm(wB) +
                   (wA * std::conj(hdn)).real() + std::norm(wA));
        tG = c * ((wB * zd).real() + (wA * hdn).real());
      } else {
        const Complex wB = B * hdn;
        const double c = double(n) * (n + 1) * (2 * n + 1) / (xd * xd);
        tS = c * (2.0 * jdn * wB.real() + std::norm(wB));
        tM = -c * ((wB * std::conj(hdn)).real() + std::norm(wB));
        tG = c * (wB * hdn).real();
      }
      sums.s_corr += tS;
      sums.m += tM;
      sums.g_corr += tG;
      used = n;

      const double ref = 1.0 + std::abs(sums.s_corr) + std::abs(sums.m) + std::abs(sums.g_corr);
      if (std::abs(tS) + std::abs(tM) + std::abs(tG) < 1e-12 * ref) {
        if (++small_run >= 3) {
          converged = true;
          break;
        }
      } else {
        small_run = 0;
      }
    }

    // A Hankel guard stop means the remaining coefficients are far below any
    // representable contribution.
    if (converged || max_n < cap) {
      const double pref = tangential ? 0.75 : 1.5;
      DensityEvaluation out;
      out.j_scattering = u3 * (1.0 + pref * sums.s_corr);
      out.j_medium = u3 * pref * sums.m;
      out.gamma_over_2pi = u3 * (1.0 + pref * sums.g_corr);
      out.truncation_order = used;
      return out;
    }
    if (cap >= bessel::kMaxOrder)
      throw std::runtime_error("spectral series did not converge at N_MAX_ORDER");
    cap = bessel::kMaxOrder;
  }
}

} // namespace

DensityEvaluation evaluate_densities(const SphereEmitterGeometry& g,
                                     const MaterialModel& m, double omega) {
  return evaluate_impl(g, m, omega);
}

double j_medium(const SphereEmitterGeometry& g, const MaterialModel& m, double omega) {
  return evaluate_impl(g, m, omega).j_medium;
}

double j_scattering(const SphereEmitterGeometry& g, const MaterialModel& m, double omega) {
  return evaluate_impl(g, m, omega).j_scattering;
}

double gamma_total(const SphereEmitterGeometry& g, const MaterialModel& m, double omega) {
  return evaluate_impl(g, m, omega).gamma_over_2pi;
}

double j_vacuum(double omega) {
  require(omega >= 0.0, "j_vacuum requires omega >= 0");
  return omega * omega * omega;
}

SpectralDensityTable sweep(DensityKind kind, const SphereEmitterGeometry& g,
                           const MaterialModel& m, std::span<const double> grid,
                           int threads) {
  for (std::size_t i = 1; i < grid.size(); ++i)
    require(grid[i] > grid[i - 1], "sweep grid must be strictly increasing");
  SpectralDensityTable table{kind, g, m, {grid.begin(), grid.end()}, {}, {}};
  table.values.resize(grid.size());
  table.truncation_order.resize(grid.size());
  parallel_for(grid.size(), threads, [&](std::size_t i) {
    const auto ev = evaluate_impl(g, m, grid[i]);
    switch (kind) {
      case DensityKind::medium: table.values[i] = ev.j_medium; break;
      case DensityKind::scattering: table.values[i] = ev.j_scattering; break;
      case DensityKind::vacuum: table.values[i] = j_vacuum(grid[i]); break;
      case DensityKind::total: table.values[i] = ev.gamma_over_2pi; break;
    }
    table.truncation_order[i] = ev.truncation_order;
  });
  return table;
}

std::vector<DensityEvaluation> sweep_all(const SphereEmitterGeometry& g,
                                         const MaterialModel& m,
                                         std::span<const double> grid, int threads) {
  std::vector<DensityEvaluation> out(grid.size());
  parallel_for(grid.size(), threads, [&](std::size_t i) {
    out[i] = evaluate_impl(g, m, grid[i]);
  });
  return out;
}

} // namespace sphereqed
