#include "sphereqed/dynamics.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>

namespace sphereqed {

namespace {

// Gauss-Legendre nodes/weights on [0, 1] by Newton iteration on P_n.
void gauss_legendre_unit(int n, std::vector<double>& nodes, std::vector<double>& weights) {
  nodes.resize(n);
  weights.resize(n);
  for (int i = 0; i < n; ++i) {
    double x = std::cos(kPi * (i + 0.75) / (n + 0.5));
    double pp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      pp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / pp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    nodes[n - 1 - i] = 0.5 * (1.0 + x);
    weights[n - 1 - i] = 1.0 / ((1.0 - x * x) * pp * pp);
  }
}

double coupling_from(double j_val, double weight, double eta) {
  double v = eta * j_val * weight;
  require(v > -1e-12, "discretize: negative effective density");
  if (v < 0.0) v = 0.0;
  return std::sqrt(v);
}

} // namespace

DiscretizedBath discretize(const DensityFn& j_eff, double eta, double omega_cut,
                           int n_plus, int n_minus, DiscretizationRule rule) {
  require(eta > 0.0, "discretize: eta must be > 0");
  require(omega_cut > 0.0, "discretize: omega_cut must be > 0");
  require(n_plus >= 1 && n_minus >= 0, "discretize: need at least one positive mode");

  DiscretizedBath bath;
  bath.n_plus = n_plus;
  bath.n_minus = n_minus;
  bath.omega_cut = omega_cut;
  bath.rule = rule;

  auto add_side = [&](int count, double sign) {
    if (rule == DiscretizationRule::midpoint) {
      const double dw = omega_cut / count;
      for (int k = 1; k <= count; ++k) {
        const double w = sign * (k - 0.5) * dw;
        bath.modes.push_back({w, coupling_from(j_eff(w), dw, eta)});
      }
    } else {
      std::vector<double> x, wt;
      gauss_legendre_unit(count, x, wt);
      for (int k = 0; k < count; ++k) {
        const double w = sign * x[k] * omega_cut;
        bath.modes.push_back({w, coupling_from(j_eff(w), wt[k] * omega_cut, eta)});
      }
    }
  };
  add_side(n_plus, +1.0);
  if (n_minus > 0) add_side(n_minus, -1.0);

  std::sort(bath.modes.begin(), bath.modes.end(),
            [](const BathMode& a, const BathMode& b) { return a.omega < b.omega; });
  for (std::size_t i = 1; i < bath.modes.size(); ++i)
    require(bath.modes[i].omega > bath.modes[i - 1].omega,
            "discretize: mode frequencies must be strictly increasing");
  return bath;
}

StarHamiltonian build_hamiltonian(const DiscretizedBath& bath,
                                  const EmitterConfig& emitter) {
  require(emitter.omega_a > 0.0, "emitter frequency must be > 0");
  require(emitter.eta > 0.0, "coupling strength eta must be > 0");
  require(!bath.modes.empty(), "bath must contain at least one mode");
  return {emitter.omega_a, bath.modes};
}

// ---- full-space engine ------------------------------------------------------

namespace {

using Vec = Eigen::VectorXcd;

// Basis layout: idx = s + 2 (n_1 + n_ph n_2 + ...), emitter bit fastest.
struct FullSpace {
  const StarHamiltonian& h;
  int n_ph;
  std::size_t dim;
  std::vector<double> diag;

  FullSpace(const StarHamiltonian& ham, int nph) : h(ham), n_ph(nph) {
    require(n_ph >= 2, "local boson dimension must be >= 2");
    const std::size_t n = h.modes.size();
    double logdim = std::log2(2.0) + n * std::log2(double(n_ph));
    require(logdim <= 22.0 + 1e-9,
            "full-space dimension exceeds the 2^22 cap; use the MPS engine");
    dim = 2;
    for (std::size_t k = 0; k < n; ++k) dim *= n_ph;

    diag.assign(dim, 0.0);
    for (std::size_t i = 0; i < dim; ++i)
      diag[i] = 0.5 * h.omega_a * ((i & 1) ? 1.0 : -1.0);
    std::size_t stride = 2;
    for (std::size_t k = 0; k < n; ++k) {
      const double wk = h.modes[k].omega;
      const std::size_t block = stride * n_ph;
      for (std::size_t base = 0; base < dim; base += block)
        for (int occ = 1; occ < n_ph; ++occ) {
          const std::size_t lo = base + occ * stride;
          for (std::size_t off = 0; off < stride; ++off) diag[lo + off] += wk * occ;
        }
      stride = block;
    }
  }

  void matvec(const Vec& x, Vec& y) const {
    for (std::size_t i = 0; i < dim; ++i) y[i] = diag[i] * x[i];
    std::size_t stride = 2;
    for (std::size_t k = 0; k < h.modes.size(); ++k) {
      const double g = h.modes[k].coupling;
      const std::size_t block = stride * n_ph;
      if (g != 0.0) {
        for (std::size_t base = 0; base < dim; base += block)
          for (int occ = 0; occ < n_ph; ++occ) {
            const std::size_t row = base + occ * stride;
            for (std::size_t off = 0; off < stride; ++off) {
              const std::size_t idx = row + off;
              const Complex amp = x[idx];
              if (amp == Complex(0.0)) continue;
              const std::size_t flipped = idx ^ 1;
              if (occ + 1 < n_ph)
                y[flipped + stride] -= g * std::sqrt(double(occ + 1)) * amp;
              if (occ >= 1)
                y[flipped - stride] -= g * std::sqrt(double(occ)) * amp;
            }
          }
      }
      stride = block;
    }
  }
};

// exp(-i tau H) v by Lanczos with full reorthogonalization. Returns the
// a-posteriori error estimate.
double lanczos_exp(const FullSpace& fs, Vec& v, double tau, int m_max) {
  const double nrm = v.norm();
  if (nrm == 0.0) return 0.0;
  const int m_cap = std::min<std::size_t>(m_max, fs.dim);
  std::vector<Vec> basis;
  basis.reserve(m_cap);
  basis.push_back(v / nrm);
  std::vector<double> alpha, beta;
  Vec w(fs.dim);
  double err = 0.0;
  int m = 0;
  for (int j = 0; j < m_cap; ++j) {
    fs.matvec(basis[j], w);
    if (j > 0) w -= beta[j - 1] * basis[j - 1];
    const double a = (basis[j].adjoint() * w).value().real();
    w -= a * basis[j];
    for (const auto& b : basis) w -= (b.adjoint() * w).value() * b;
    alpha.push_back(a);
    const double bnorm = w.norm();
    m = j + 1;

    Eigen::MatrixXd T = Eigen::MatrixXd::Zero(m, m);
    for (int i = 0; i < m; ++i) {
      T(i, i) = alpha[i];
      if (i + 1 < m) T(i, i + 1) = T(i + 1, i) = beta[i];
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(T);
    Eigen::VectorXcd coeff =
        es.eigenvectors().cast<Complex>() *
        ((es.eigenvalues().array().cast<Complex>() * Complex(0.0, -tau)).exp() *
         es.eigenvectors().row(0).transpose().array().cast<Complex>())
            .matrix();
    err = bnorm * std::abs(coeff[m - 1]);
    if (bnorm < 1e-13 || err < 1e-13 || j + 1 == m_cap) {
      Vec out = Vec::Zero(fs.dim);
      for (int i = 0; i < m; ++i) out += coeff[i] * basis[i];
      v = nrm * out;
      return err;
    }
    beta.push_back(bnorm);
    basis.push_back(w / bnorm);
  }
  return err;
}

Vec initial_full_state(const FullSpace& fs, InitialState init) {
  Vec psi = Vec::Zero(fs.dim);
  Complex c_minus, c_plus;
  const double r = 1.0 / std::sqrt(2.0);
  switch (init) {
    case InitialState::x_minus: c_minus = -r; c_plus = r; break;
    case InitialState::x_plus: c_minus = r; c_plus = r; break;
    case InitialState::ground: c_minus = 1.0; c_plus = 0.0; break;
    case InitialState::excited: c_minus = 0.0; c_plus = 1.0; break;
  }
  psi[0] = c_minus;
  psi[1] = c_plus;
  return psi;
}

} // namespace

PauliExpectations observables(const std::vector<Complex>& state, int n_ph, int n_modes) {
  require(n_ph >= 2 && n_modes >= 0, "observables: invalid dimensions");
  std::size_t dim = 2;
  for (int k = 0; k < n_modes; ++k) dim *= n_ph;
  require(state.size() == dim, "observables: state size mismatch");
  PauliExpectations out;
  Complex cross = 0.0;
  for (std::size_t j = 0; j < dim; j += 2) {
    const Complex lo = state[j], hi = state[j + 1];
    cross += std::conj(lo) * hi;
    out.sz += std::norm(hi) - std::norm(lo);
    out.norm += std::norm(lo) + std::norm(hi);
  }
  out.sx = 2.0 * cross.real();
  out.sy = -2.0 * cross.imag();
  return out;
}

std::vector<Complex> dense_hamiltonian(const StarHamiltonian& h, int n_ph) {
  FullSpace fs(h, n_ph);
  require(fs.dim <= 4096, "dense_hamiltonian is for small test systems");
  std::vector<Complex> out(fs.dim * fs.dim);
  Vec e = Vec::Zero(fs.dim), col(fs.dim);
  for (std::size_t j = 0; j < fs.dim; ++j) {
    e.setZero();
    e[j] = 1.0;
    fs.matvec(e, col);
    for (std::size_t i = 0; i < fs.dim; ++i) out[i * fs.dim + j] = col[i];
  }
  return out;
}

Trajectory evolve_krylov(const StarHamiltonian& h, InitialState initial,
                         const SimulationParams& params) {
  require(params.dt > 0.0 && params.t_final > 0.0, "invalid time parameters");
  require(params.sample_every >= 1, "sample_every must be >= 1");
  FullSpace fs(h, params.n_ph);
  Vec psi = initial_full_state(fs, initial);

  Trajectory traj;
  const auto nsteps = static_cast<long>(std::round(params.t_final / params.dt));
  const int m_max = std::max(4, params.krylov_dim);

  Vec hpsi(fs.dim);
  auto energy = [&](const Vec& v) {
    fs.matvec(v, hpsi);
    return (v.adjoint() * hpsi).value().real();
  };
  const double e0 = energy(psi);

  auto record = [&](double t) {
    PauliExpectations px;
    Complex cross = 0.0;
    for (std::size_t j = 0; j < fs.dim; j += 2) {
      cross += std::conj(psi[j]) * psi[j + 1];
      px.sz += std::norm(psi[j + 1]) - std::norm(psi[j]);
      px.norm += std::norm(psi[j]) + std::norm(psi[j + 1]);
    }
    px.sx = 2.0 * cross.real();
    traj.times.push_back(t);
    traj.sx.push_back(px.sx / px.norm);
    traj.sz.push_back(px.sz / px.norm);
    traj.norm_dev.push_back(std::abs(px.norm - 1.0));
    traj.max_bond.push_back(0);
    traj.energy_drift = std::max(traj.energy_drift, std::abs(energy(psi) - e0));
  };

  record(0.0);
  for (long step = 1; step <= nsteps; ++step) {
    // substep halving when the subspace estimate is not converged
    double remaining = params.dt;
    int halvings = 0;
    while (remaining > 0.0) {
      double tau = remaining;
      Vec trial = psi;
      double err = lanczos_exp(fs, trial, tau, m_max);
      while (err > 1e-11 && halvings < 20) {
        tau *= 0.5;
        ++halvings;
        trial = psi;
        err = lanczos_exp(fs, trial, tau, m_max);
      }
      require(err <= 1e-9, "Krylov propagation failed to converge");
      psi = trial;
      remaining -= tau;
    }
    if (step % params.sample_every == 0 || step == nsteps)
      record(step * params.dt);
  }
  return traj;
}

Trajectory evolve(const StarHamiltonian& h, InitialState initial,
                  const SimulationParams& params) {
  return params.engine == Engine::krylov ? evolve_krylov(h, initial, params)
                                         : evolve_mps(h, initial, params);
}

} // namespace sphereqed
