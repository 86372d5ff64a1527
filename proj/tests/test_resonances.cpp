#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "sphereqed/resonances.hpp"
#include "sphereqed/spectral.hpp"

using namespace sphereqed;

TEST_CASE("plasmonic resonance closed values") {
  // leading term sqrt(1/3) as k_p a -> 0
  CHECK(plasmonic_resonance(1, 1e-6) == doctest::Approx(0.5773502691896258).epsilon(1e-9));
  // quadrupole at k_p a = 1
  CHECK(plasmonic_resonance(2, 1.0) == doctest::Approx(0.6144).epsilon(8e-4));
  // n = 3: sqrt(3/7) (1 - 4/315)
  CHECK(plasmonic_resonance(3, 1.0) ==
        doctest::Approx(std::sqrt(3.0 / 7.0) * (1.0 - 4.0 / 315.0)).epsilon(1e-13));
}

TEST_CASE("plasmonic bandwidth split") {
  // nu = 0: purely radiative
  const auto b0 = plasmonic_fbw(1, 1.0, 0.0);
  CHECK(b0.material == 0.0);
  CHECK(b0.radiative > 0.0);
  CHECK(b0.total == b0.radiative);

  // dipole at k_p a = 1: radiative losses dominate
  const auto b1 = plasmonic_fbw(1, 1.0, 0.01);
  CHECK(b1.radiative > 3.0 * b1.material);

  // n = 5: material dissipation dominates
  const auto b5 = plasmonic_fbw(5, 1.0, 0.01);
  CHECK(b5.material > 100.0 * b5.radiative);

  CHECK(b1.total == doctest::Approx(b1.material + b1.radiative));
}

TEST_CASE("dielectric resonance positions") {
  // k_c a -> 0 limits: H(1,1) -> z_{0,1} = pi, E(1,1) -> z_{1,1}
  CHECK(dielectric_resonance(ResonanceFamily::dielectric_h, 1, 1, 1e-8) ==
        doctest::Approx(kPi).epsilon(1e-9));
  CHECK(dielectric_resonance(ResonanceFamily::dielectric_e, 1, 1, 1e-8) ==
        doctest::Approx(4.493409457909064).epsilon(1e-9));
  // finite size pulls the mode down: pi (1 - 1.5 * 0.0625) at k_c a = 0.25
  CHECK(dielectric_resonance(ResonanceFamily::dielectric_h, 1, 1, 0.25) ==
        doctest::Approx(kPi * (1.0 - 1.5 * 0.0625)).epsilon(1e-12));
}

TEST_CASE("dielectric bandwidth split") {
  const double kca = 0.25, tau = 0.01 / std::sqrt(15.0);
  // tau = 0: purely radiative
  const auto b0 = dielectric_fbw(ResonanceFamily::dielectric_h, 1, 1, kca, 0.0);
  CHECK(b0.material == 0.0);
  CHECK(b0.total == b0.radiative);

  // magnetic dipole: both loss channels present (radiative leads at this size)
  const auto b1 = dielectric_fbw(ResonanceFamily::dielectric_h, 1, 1, kca, tau);
  CHECK(b1.material > 0.0);
  CHECK(b1.radiative > 0.0);

  // H(4,1): material losses dominate
  const auto b4 = dielectric_fbw(ResonanceFamily::dielectric_h, 4, 1, kca, tau);
  CHECK(b4.material > 5.0 * b4.radiative);
}

TEST_CASE("plasmonic frequencies increase with n toward 1/sqrt(2)") {
  for (double kpa : {0.2, 1.0}) {
    double prev = 0.0;
    for (int n = 1; n <= 12; ++n) {
      const double w = plasmonic_resonance(n, kpa);
      CHECK(w > prev);
      CHECK(w < 1.0 / std::sqrt(2.0));
      prev = w;
    }
  }
}

TEST_CASE("radiative parts decrease with multipole order") {
  double prev = 1e300;
  for (int n = 1; n <= 8; ++n) {
    const auto b = plasmonic_fbw(n, 1.0, 0.01);
    CHECK(b.radiative < prev);
    prev = b.radiative;
  }
}

TEST_CASE("sphere_resonances sorting and vacuum") {
  const auto drude = MaterialModel::drude(1.0, 0.01);
  const auto list = sphere_resonances(drude, 1.0, 5, 1);
  CHECK(list.size() == 5);
  for (std::size_t i = 1; i < list.size(); ++i)
    CHECK(list[i].frequency > list[i - 1].frequency);
  CHECK(sphere_resonances(MaterialModel::vacuum_reference(1.0), 10.0).empty());
}

TEST_CASE("peak_alignment on a synthetic table") {
  // single Lorentzian at 0.6 with HWHM 0.01
  std::vector<double> grid, vals;
  for (double u = 0.4; u <= 0.8; u += 5e-4) {
    grid.push_back(u);
    vals.push_back(1.0 / (1.0 + std::pow((u - 0.6) / 0.01, 2)));
  }
  ResonanceDescriptor mode;
  mode.frequency = 0.603;
  mode.fractional_bandwidth = 0.02 / 0.603;
  const auto rep = peak_alignment(grid, vals, std::vector<ResonanceDescriptor>{mode});
  REQUIRE(rep.size() == 1);
  CHECK(rep[0].found);
  CHECK(rep[0].peak_frequency == doctest::Approx(0.6).epsilon(1e-3));
  CHECK(rep[0].offset_bandwidths == doctest::Approx(0.003 / 0.02).epsilon(0.05));
}

TEST_CASE("peak_alignment edge cases") {
  // empty predictions -> empty report
  std::vector<double> grid{0.1, 0.2, 0.3}, vals{1.0, 1.0, 1.0};
  CHECK(peak_alignment(grid, vals, std::vector<ResonanceDescriptor>{}).empty());

  // flat table -> no local maximum found
  ResonanceDescriptor mode;
  mode.frequency = 0.2;
  mode.fractional_bandwidth = 0.5;
  const auto rep = peak_alignment(grid, vals, std::vector<ResonanceDescriptor>{mode});
  REQUIRE(rep.size() == 1);
  CHECK(!rep[0].found);
}

TEST_CASE("figure sweep alignment: Drude plasmonic n=1..5") {
  const auto drude = MaterialModel::drude(1.0, 0.01);
  const SphereEmitterGeometry g{1.75, Orientation::tangential};
  std::vector<double> grid;
  for (double u = 0.4; u <= 0.75; u += 2.5e-4) grid.push_back(u);
  const auto table = sweep(DensityKind::medium, g, drude, grid, 4);
  const auto modes = sphere_resonances(drude, 0.75, 5, 1);
  REQUIRE(modes.size() == 5);
  const auto rep = peak_alignment(table.grid, table.values, modes);
  for (const auto& pa : rep) {
    CHECK(pa.found);
    CHECK(pa.offset_bandwidths <= 1.0);
  }
}
