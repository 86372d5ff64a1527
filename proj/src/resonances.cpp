#include "sphereqed/resonances.hpp"

#include <algorithm>
#include <cmath>

#include "sphereqed/special_functions.hpp"

namespace sphereqed {

namespace {

// log((2k+1)!!) = lgamma(2k+2) - k log 2 - lgamma(k+1)
double log_odd_double_factorial(int m) {
  require(m >= 1 && m % 2 == 1, "odd double factorial expects odd m >= 1");
  const int k = (m - 1) / 2;
  return std::lgamma(2.0 * k + 2.0) - k * std::log(2.0) - std::lgamma(k + 1.0);
}

std::string ordinal_label(ResonanceFamily family, int n, int ell) {
  static const char* names[] = {"dipole", "quadrupole", "octupole",
                                "hexadecapole", "dotriacontapole"};
  std::string base = n >= 1 && n <= 5 ? names[n - 1] : ("n=" + std::to_string(n));
  switch (family) {
    case ResonanceFamily::plasmonic: return "electric " + base + " (plasmonic)";
    case ResonanceFamily::dielectric_h:
      return (ell > 1 ? "order-" + std::to_string(ell) + " " : "") + ("magnetic " + base);
    case ResonanceFamily::dielectric_e:
      return (ell > 1 ? "order-" + std::to_string(ell) + " " : "") + ("toroidal " + base);
  }
  return base;
}

} // namespace

double plasmonic_resonance(int n, double kp_a) {
  require(n >= 1, "plasmonic multipole must be >= 1");
  require(kp_a > 0.0, "k_p a must be > 0");
  const double lead = std::sqrt(double(n) / (2.0 * n + 1.0));
  const double corr = double(n + 1) / ((3.0 + 2.0 * n) * (4.0 * n * n - 1.0));
  return lead * (1.0 - corr * kp_a * kp_a);
}

BandwidthSplit plasmonic_fbw(int n, double kp_a, double nu_over_omega_p) {
  require(nu_over_omega_p >= 0.0, "nu/omega_p must be >= 0");
  const double w = plasmonic_resonance(n, kp_a);
  BandwidthSplit out;
  out.material = nu_over_omega_p / w;
  // (n+1)(2n+1)/(n ((2n+1)!!)^2) (a omega_n / c)^{2n+1}, with a omega/c = w k_p a
  const double lg = std::log(double(n + 1)) + std::log(2.0 * n + 1.0) - std::log(double(n)) -
                    2.0 * log_odd_double_factorial(2 * n + 1) +
                    (2.0 * n + 1.0) * std::log(w * kp_a);
  out.radiative = std::exp(lg);
  out.total = out.material + out.radiative;
  return out;
}

double dielectric_resonance(ResonanceFamily family, int n, int ell, double kc_a) {
  require(family != ResonanceFamily::plasmonic, "use plasmonic_resonance");
  require(n >= 1 && ell >= 1, "dielectric mode indices must be >= 1");
  require(kc_a > 0.0, "k_c a must be > 0");
  if (family == ResonanceFamily::dielectric_h) {
    const double z = bessel::bessel_zero(n - 1, ell);
    return z * (1.0 - 0.5 * (2.0 * n + 1.0) / (2.0 * n - 1.0) * kc_a * kc_a);
  }
  const double z = bessel::bessel_zero(n, ell);
  return z * (1.0 - 0.5 * (n + 2.0) / double(n) * kc_a * kc_a);
}

BandwidthSplit dielectric_fbw(ResonanceFamily family, int n, int ell, double kc_a,
                              double tau_omega_c) {
  require(tau_omega_c >= 0.0, "tau omega_c must be >= 0");
  const double w = dielectric_resonance(family, n, ell, kc_a);
  BandwidthSplit out;
  out.material = tau_omega_c * w;
  const double ldf = log_odd_double_factorial(std::max(1, 2 * n - 1));
  if (family == ResonanceFamily::dielectric_h) {
    const double z = bessel::bessel_zero(n - 1, ell);
    const double lg = std::log(2.0) - 2.0 * (std::log(z) + ldf) +
                      (2.0 * n + 1.0) * std::log(w * kc_a);
    out.radiative = std::exp(lg);
  } else {
    const double z = bessel::bessel_zero(n, ell);
    const double lg = std::log(2.0) - 2.0 * (std::log(double(n)) + std::log(z) + ldf) +
                      (2.0 * n + 3.0) * std::log(w * kc_a);
    out.radiative = std::exp(lg);
  }
  out.total = out.material + out.radiative;
  return out;
}

ResonanceDescriptor plasmonic_mode(int n, double kp_a, double nu_over_omega_p) {
  const auto bw = plasmonic_fbw(n, kp_a, nu_over_omega_p);
  return {ResonanceFamily::plasmonic, n,       0,
          plasmonic_resonance(n, kp_a), bw.total, bw.material,
          bw.radiative, ordinal_label(ResonanceFamily::plasmonic, n, 0)};
}

ResonanceDescriptor dielectric_mode(ResonanceFamily family, int n, int ell,
                                    double kc_a, double tau_omega_c) {
  const auto bw = dielectric_fbw(family, n, ell, kc_a, tau_omega_c);
  return {family, n, ell, dielectric_resonance(family, n, ell, kc_a),
          bw.total, bw.material, bw.radiative, ordinal_label(family, n, ell)};
}

std::vector<ResonanceDescriptor> sphere_resonances(const MaterialModel& m,
                                                   double omega_max, int n_max,
                                                   int ell_max) {
  std::vector<ResonanceDescriptor> out;
  if (m.kind == MaterialKind::drude) {
    for (int n = 1; n <= n_max; ++n) {
      auto mode = plasmonic_mode(n, m.kr_a, m.loss);
      if (mode.frequency <= omega_max) out.push_back(std::move(mode));
    }
  } else if (m.kind == MaterialKind::debye) {
    for (auto family : {ResonanceFamily::dielectric_h, ResonanceFamily::dielectric_e})
      for (int n = 1; n <= n_max; ++n)
        for (int ell = 1; ell <= ell_max; ++ell) {
          auto mode = dielectric_mode(family, n, ell, m.kr_a, m.loss);
          if (mode.frequency <= omega_max) out.push_back(std::move(mode));
        }
  }
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return a.frequency < b.frequency; });
  return out;
}

std::vector<double> resonance_breakpoints(const MaterialModel& m, double omega_cut) {
  std::vector<double> pts;
  for (const auto& mode : sphere_resonances(m, omega_cut, 8, 3))
    if (mode.frequency > 0.0 && mode.frequency < omega_cut)
      pts.push_back(mode.frequency);
  std::sort(pts.begin(), pts.end());
  return pts;
}

std::vector<PeakAlignment> peak_alignment(std::span<const double> grid,
                                          std::span<const double> values,
                                          std::span<const ResonanceDescriptor> predictions) {
  require(grid.size() == values.size(), "peak_alignment: grid/values size mismatch");
  std::vector<PeakAlignment> report;
  report.reserve(predictions.size());
  for (const auto& mode : predictions) {
    PeakAlignment pa;
    pa.mode = mode;
    const double abs_bw = mode.fractional_bandwidth * mode.frequency;
    const double lo = mode.frequency - 3.0 * abs_bw;
    const double hi = mode.frequency + 3.0 * abs_bw;
    double best_dist = 0.0;
    for (std::size_t i = 1; i + 1 < grid.size(); ++i) {
      if (grid[i] < lo || grid[i] > hi) continue;
      if (!(values[i] > values[i - 1] && values[i] > values[i + 1])) continue;
      // parabolic refinement over the three points
      const double y0 = values[i - 1], y1 = values[i], y2 = values[i + 1];
      const double denom = y0 - 2.0 * y1 + y2;
      double x = grid[i];
      if (denom < 0.0) {
        const double h = 0.5 * (grid[i + 1] - grid[i - 1]);
        x += 0.5 * h * (y0 - y2) / denom;
      }
      const double dist = std::abs(x - mode.frequency);
      if (!pa.found || dist < best_dist) {
        pa.found = true;
        best_dist = dist;
        pa.peak_frequency = x;
        pa.peak_value = y1;
      }
    }
    if (pa.found && abs_bw > 0.0) pa.offset_bandwidths = best_dist / abs_bw;
    report.push_back(std::move(pa));
  }
  return report;
}

} // namespace sphereqed
