#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <vector>

#include "sphereqed/dynamics.hpp"

namespace sphereqed {

namespace {

using Mat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXcd;

// ---- MPO --------------------------------------------------------------------

struct MpoEntry {
  int bin, bout;
  Mat op; // d x d
};

struct MpoSite {
  int win = 1, wout = 1, d = 2;
  std::vector<MpoEntry> ops;
};

Mat boson_number(int d) {
  Mat n = Mat::Zero(d, d);
  for (int k = 0; k < d; ++k) n(k, k) = k;
  return n;
}

Mat boson_x(int d) { // a + a^+
  Mat x = Mat::Zero(d, d);
  for (int k = 0; k + 1 < d; ++k) {
    x(k, k + 1) = std::sqrt(double(k + 1));
    x(k + 1, k) = std::sqrt(double(k + 1));
  }
  return x;
}

// Bond states: 0 = nothing placed, 1 = sigma_x placed, 2 = term complete.
std::vector<MpoSite> build_mpo(const StarHamiltonian& h,
                               const std::vector<int>& order, int n_ph) {
  const int n = int(order.size());
  std::vector<MpoSite> mpo(n + 1);

  Mat sz = Mat::Zero(2, 2);
  sz(0, 0) = -1.0;
  sz(1, 1) = 1.0;
  Mat sx = Mat::Zero(2, 2);
  sx(0, 1) = 1.0;
  sx(1, 0) = 1.0;
  Mat id2 = Mat::Identity(2, 2);

  mpo[0].win = 1;
  mpo[0].wout = 3;
  mpo[0].d = 2;
  mpo[0].ops = {{0, 0, id2}, {0, 1, -sx}, {0, 2, 0.5 * h.omega_a * sz}};

  const Mat idb = Mat::Identity(n_ph, n_ph);
  const Mat num = boson_number(n_ph);
  const Mat bx = boson_x(n_ph);
  for (int i = 0; i < n; ++i) {
    const auto& mode = h.modes[order[i]];
    MpoSite& w = mpo[i + 1];
    w.d = n_ph;
    if (i + 1 < n) {
      w.win = 3;
      w.wout = 3;
      w.ops = {{0, 0, idb},
               {0, 2, mode.omega * num},
               {1, 1, idb},
               {1, 2, mode.coupling * bx},
               {2, 2, idb}};
    } else {
      w.win = 3;
      w.wout = 1;
      w.ops = {{0, 0, mode.omega * num}, {1, 0, mode.coupling * bx}, {2, 0, idb}};
    }
  }
  return mpo;
}

// Appendix-style arrangement: emitter first, then consecutive
// (negative, positive) pairs of increasing |omega|.
std::vector<int> paired_order(const std::vector<BathMode>& modes) {
  std::vector<int> neg, pos;
  for (int i = 0; i < int(modes.size()); ++i)
    (modes[i].omega < 0.0 ? neg : pos).push_back(i);
  std::sort(neg.begin(), neg.end(), [&](int a, int b) {
    return std::abs(modes[a].omega) < std::abs(modes[b].omega);
  });
  std::sort(pos.begin(), pos.end(), [&](int a, int b) {
    return std::abs(modes[a].omega) < std::abs(modes[b].omega);
  });
  std::vector<int> order;
  const std::size_t np = std::max(neg.size(), pos.size());
  for (std::size_t k = 0; k < np; ++k) {
    if (k < neg.size()) order.push_back(neg[k]);
    if (k < pos.size()) order.push_back(pos[k]);
  }
  return order;
}

// ---- MPS --------------------------------------------------------------------

struct Site {
  std::vector<Mat> a; // a[s]: (chi_l x chi_r)
  int d() const { return int(a.size()); }
  int left() const { return int(a[0].rows()); }
  int right() const { return int(a[0].cols()); }
};

using Env = std::vector<Mat>; // one matrix per MPO bond index (bra row, ket col)

Env update_left(const Env& le, const Site& s, const MpoSite& w) {
  const int cr = s.right();
  std::vector<std::vector<Mat>> x(w.win, std::vector<Mat>(w.d));
  for (int b = 0; b < w.win; ++b)
    for (int p = 0; p < w.d; ++p) x[b][p].noalias() = le[b] * s.a[p];
  std::vector<std::vector<Mat>> y(w.wout, std::vector<Mat>(w.d));
  for (int bo = 0; bo < w.wout; ++bo)
    for (int t = 0; t < w.d; ++t) y[bo][t] = Mat::Zero(s.left(), cr);
  for (const auto& e : w.ops)
    for (int t = 0; t < w.d; ++t)
      for (int p = 0; p < w.d; ++p)
        if (e.op(t, p) != Complex(0.0)) y[e.bout][t] += e.op(t, p) * x[e.bin][p];
  Env out(w.wout);
  for (int bo = 0; bo < w.wout; ++bo) {
    out[bo] = Mat::Zero(cr, cr);
    for (int t = 0; t < w.d; ++t) out[bo].noalias() += s.a[t].adjoint() * y[bo][t];
  }
  return out;
}

Env update_right(const Env& re, const Site& s, const MpoSite& w) {
  const int cl = s.left();
  std::vector<std::vector<Mat>> x(w.wout, std::vector<Mat>(w.d));
  for (int b = 0; b < w.wout; ++b)
    for (int p = 0; p < w.d; ++p) x[b][p].noalias() = re[b] * s.a[p].transpose();
  std::vector<std::vector<Mat>> y(w.win, std::vector<Mat>(w.d));
  for (int bi = 0; bi < w.win; ++bi)
    for (int t = 0; t < w.d; ++t) y[bi][t] = Mat::Zero(s.right(), cl);
  for (const auto& e : w.ops)
    for (int t = 0; t < w.d; ++t)
      for (int p = 0; p < w.d; ++p)
        if (e.op(t, p) != Complex(0.0)) y[e.bin][t] += e.op(t, p) * x[e.bout][p];
  Env out(w.win);
  for (int bi = 0; bi < w.win; ++bi) {
    out[bi] = Mat::Zero(cl, cl);
    for (int t = 0; t < w.d; ++t) out[bi].noalias() += s.a[t].conjugate() * y[bi][t];
  }
  return out;
}

// ---- effective Hamiltonians (flattened) --------------------------------------

struct TwoSiteShape {
  int d1, d2, cl, cr;
  int size() const { return d1 * d2 * cl * cr; }
};

void apply_h2(const Env& le, const MpoSite& w1, const MpoSite& w2, const Env& re,
              const TwoSiteShape& sh, const Vec& in, Vec& out) {
  const auto block = [&](const Vec& v, int s1, int s2) {
    return Eigen::Map<const Mat>(v.data() + (s1 * sh.d2 + s2) * sh.cl * sh.cr, sh.cl,
                                 sh.cr);
  };
  // X[b0][s1][s2] = L[b0] * theta[s1][s2]
  std::vector<Mat> x(w1.win * sh.d1 * sh.d2);
  for (int b = 0; b < w1.win; ++b)
    for (int s1 = 0; s1 < sh.d1; ++s1)
      for (int s2 = 0; s2 < sh.d2; ++s2)
        x[(b * sh.d1 + s1) * sh.d2 + s2].noalias() = le[b] * block(in, s1, s2);
  // Y[b1][t1][s2] += W1(t1,s1) X[b0][s1][s2]
  std::vector<Mat> y(w1.wout * sh.d1 * sh.d2);
  for (auto& m : y) m = Mat::Zero(sh.cl, sh.cr);
  for (const auto& e : w1.ops)
    for (int t1 = 0; t1 < sh.d1; ++t1)
      for (int s1 = 0; s1 < sh.d1; ++s1) {
        const Complex c = e.op(t1, s1);
        if (c == Complex(0.0)) continue;
        for (int s2 = 0; s2 < sh.d2; ++s2)
          y[(e.bout * sh.d1 + t1) * sh.d2 + s2] +=
              c * x[(e.bin * sh.d1 + s1) * sh.d2 + s2];
      }
  // Z[b2][t1][t2] += W2(t2,s2) Y[b1][t1][s2]
  std::vector<Mat> z(w2.wout * sh.d1 * sh.d2);
  for (auto& m : z) m = Mat::Zero(sh.cl, sh.cr);
  for (const auto& e : w2.ops)
    for (int t2 = 0; t2 < sh.d2; ++t2)
      for (int s2 = 0; s2 < sh.d2; ++s2) {
        const Complex c = e.op(t2, s2);
        if (c == Complex(0.0)) continue;
        for (int t1 = 0; t1 < sh.d1; ++t1)
          z[(e.bout * sh.d1 + t1) * sh.d2 + t2] +=
              c * y[(e.bin * sh.d1 + t1) * sh.d2 + s2];
      }
  // out[t1][t2] = sum_b2 Z[b2][t1][t2] R[b2]^T
  out.setZero();
  for (int b = 0; b < w2.wout; ++b)
    for (int t1 = 0; t1 < sh.d1; ++t1)
      for (int t2 = 0; t2 < sh.d2; ++t2) {
        Eigen::Map<Mat> dst(out.data() + (t1 * sh.d2 + t2) * sh.cl * sh.cr, sh.cl,
                            sh.cr);
        dst.noalias() += z[(b * sh.d1 + t1) * sh.d2 + t2] * re[b].transpose();
      }
}

struct OneSiteShape {
  int d, cl, cr;
  int size() const { return d * cl * cr; }
};

void apply_h1(const Env& le, const MpoSite& w, const Env& re, const OneSiteShape& sh,
              const Vec& in, Vec& out) {
  const auto block = [&](const Vec& v, int s) {
    return Eigen::Map<const Mat>(v.data() + s * sh.cl * sh.cr, sh.cl, sh.cr);
  };
  std::vector<Mat> x(w.win * sh.d);
  for (int b = 0; b < w.win; ++b)
    for (int s = 0; s < sh.d; ++s) x[b * sh.d + s].noalias() = le[b] * block(in, s);
  std::vector<Mat> y(w.wout * sh.d);
  for (auto& m : y) m = Mat::Zero(sh.cl, sh.cr);
  for (const auto& e : w.ops)
    for (int t = 0; t < sh.d; ++t)
      for (int s = 0; s < sh.d; ++s) {
        const Complex c = e.op(t, s);
        if (c == Complex(0.0)) continue;
        y[e.bout * sh.d + t] += c * x[e.bin * sh.d + s];
      }
  out.setZero();
  for (int b = 0; b < w.wout; ++b)
    for (int t = 0; t < sh.d; ++t) {
      Eigen::Map<Mat> dst(out.data() + t * sh.cl * sh.cr, sh.cl, sh.cr);
      dst.noalias() += y[b * sh.d + t] * re[b].transpose();
    }
}

// ---- local Lanczos exponential ------------------------------------------------

using MatVec = std::function<void(const Vec&, Vec&)>;

void lanczos_exp_local(const MatVec& hv, Vec& v, double tau, int m_max = 25,
                       double tol = 5e-14) {
  const double nrm = v.norm();
  if (nrm == 0.0) return;
  const int dim = int(v.size());
  const int cap = std::min(m_max, dim);
  std::vector<Vec> basis{v / nrm};
  std::vector<double> alpha, beta;
  Vec w(dim);
  for (int j = 0; j < cap; ++j) {
    hv(basis[j], w);
    if (j > 0) w -= beta[j - 1] * basis[j - 1];
    const double a = (basis[j].adjoint() * w).value().real();
    w -= a * basis[j];
    for (const auto& b : basis) w -= (b.adjoint() * w).value() * b;
    alpha.push_back(a);
    const double bn = w.norm();
    const int m = j + 1;
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
    const double err = bn * std::abs(coeff[m - 1]);
    if (bn < 1e-14 || err < tol || m == cap) {
      Vec out = Vec::Zero(dim);
      for (int i = 0; i < m; ++i) out += coeff[i] * basis[i];
      v = nrm * out;
      return;
    }
    beta.push_back(bn);
    basis.push_back(w / bn);
  }
}

// ---- TDVP engine ---------------------------------------------------------------

class TdvpEngine {
 public:
  TdvpEngine(const StarHamiltonian& h, InitialState init, const SimulationParams& p)
      : params_(p) {
    require(p.n_ph >= 2, "local boson dimension must be >= 2");
    require(p.max_bond >= 2, "max bond dimension must be >= 2");
    require(p.trunc_err > 0.0, "truncation error must be > 0");
    order_ = paired_order(h.modes);
    mpo_ = build_mpo(h, order_, p.n_ph);
    const int nsites = int(mpo_.size());
    sites_.resize(nsites);

    // product state: emitter amplitudes at site 0, vacua elsewhere
    Complex c_minus, c_plus;
    const double r = 1.0 / std::sqrt(2.0);
    switch (init) {
      case InitialState::x_minus: c_minus = -r; c_plus = r; break;
      case InitialState::x_plus: c_minus = r; c_plus = r; break;
      case InitialState::ground: c_minus = 1.0; c_plus = 0.0; break;
      case InitialState::excited: c_minus = 0.0; c_plus = 1.0; break;
    }
    sites_[0].a = {Mat::Constant(1, 1, c_minus), Mat::Constant(1, 1, c_plus)};
    for (int i = 1; i < nsites; ++i) {
      sites_[i].a.assign(p.n_ph, Mat::Zero(1, 1));
      sites_[i].a[0](0, 0) = 1.0;
    }

    lenv_.assign(nsites, Env{});
    renv_.assign(nsites, Env{});
    lenv_[0] = Env{Mat::Identity(1, 1)};
    renv_[nsites - 1] = Env{Mat::Identity(1, 1)};
    for (int i = nsites - 2; i >= 0; --i)
      renv_[i] = update_right(renv_[i + 1], sites_[i + 1], mpo_[i + 1]);
  }

  Trajectory run() {
    Trajectory traj;
    const auto nsteps = static_cast<long>(std::round(params_.t_final / params_.dt));
    e0_ = energy();
    record(traj, 0.0);
    for (long step = 1; step <= nsteps; ++step) {
      sweep_left_to_right(0.5 * params_.dt);
      sweep_right_to_left(0.5 * params_.dt);
      if (step % params_.sample_every == 0 || step == nsteps)
        record(traj, step * params_.dt);
    }
    traj.accumulated_truncation = truncation_;
    traj.bond_saturation_events = saturation_;
    return traj;
  }

 private:
  SimulationParams params_;
  std::vector<int> order_;
  std::vector<MpoSite> mpo_;
  std::vector<Site> sites_;
  std::vector<Env> lenv_, renv_;
  double truncation_ = 0.0;
  int saturation_ = 0;
  double e0_ = 0.0;
  double max_energy_drift_ = 0.0;

  int max_bond() const {
    int m = 1;
    for (const auto& s : sites_) m = std::max(m, s.right());
    return m;
  }

  double norm_sq() const {
    double n = 0.0;
    for (const auto& m : sites_[0].a) n += m.squaredNorm();
    return n;
  }

  double energy() {
    const OneSiteShape sh{2, sites_[0].left(), sites_[0].right()};
    Vec c(sh.size()), hc(sh.size());
    pack_one(sites_[0], c);
    apply_h1(lenv_[0], mpo_[0], renv_[0], sh, c, hc);
    return (c.adjoint() * hc).value().real() / norm_sq();
  }

  void record(Trajectory& traj, double t) {
    const auto& a0 = sites_[0].a;
    const double n2 = norm_sq();
    Complex cross = 0.0;
    for (int r = 0; r < sites_[0].right(); ++r)
      cross += std::conj(a0[0](0, r)) * a0[1](0, r);
    traj.times.push_back(t);
    traj.sx.push_back(2.0 * cross.real() / n2);
    traj.sz.push_back((a0[1].squaredNorm() - a0[0].squaredNorm()) / n2);
    traj.norm_dev.push_back(std::abs(n2 - 1.0));
    traj.max_bond.push_back(max_bond());
    max_energy_drift_ = std::max(max_energy_drift_, std::abs(energy() - e0_));
    traj.energy_drift = max_energy_drift_;
  }

  static void pack_one(const Site& s, Vec& v) {
    const int cl = s.left(), cr = s.right();
    for (int p = 0; p < s.d(); ++p)
      Eigen::Map<Mat>(v.data() + p * cl * cr, cl, cr) = s.a[p];
  }

  static void unpack_one(Site& s, const Vec& v) {
    const int cl = s.left(), cr = s.right();
    for (int p = 0; p < s.d(); ++p)
      s.a[p] = Eigen::Map<const Mat>(v.data() + p * cl * cr, cl, cr);
  }

  // split theta (flattened, shape sh) at the bond; returns new bond dim
  int split(const TwoSiteShape& sh, const Vec& theta, Site& left, Site& right,
            bool keep_left_canonical) {
    Mat m(sh.d1 * sh.cl, sh.d2 * sh.cr);
    for (int s1 = 0; s1 < sh.d1; ++s1)
      for (int s2 = 0; s2 < sh.d2; ++s2)
        m.block(s1 * sh.cl, s2 * sh.cr, sh.cl, sh.cr) =
            Eigen::Map<const Mat>(theta.data() + (s1 * sh.d2 + s2) * sh.cl * sh.cr,
                                  sh.cl, sh.cr);
    Eigen::BDCSVD<Mat> svd(m, Eigen::ComputeThinU | Eigen::ComputeThinV);
    const auto& sv = svd.singularValues();
    const int full = int(sv.size());
    double total = 0.0;
    for (int i = 0; i < full; ++i) total += sv[i] * sv[i];
    int keep = full;
    double dropped = 0.0;
    while (keep > 1) {
      const double s2 = sv[keep - 1] * sv[keep - 1];
      if (dropped + s2 > params_.trunc_err * total) break;
      dropped += s2;
      --keep;
    }
    if (keep > params_.max_bond) {
      ++saturation_;
      for (int i = params_.max_bond; i < keep; ++i) dropped += sv[i] * sv[i];
      keep = params_.max_bond;
    }
    if (total > 0.0) truncation_ += dropped / total;

    const Mat u = svd.matrixU().leftCols(keep);
    const Mat v = svd.matrixV().leftCols(keep);
    const auto s = sv.head(keep);

    left.a.assign(sh.d1, Mat());
    right.a.assign(sh.d2, Mat());
    if (keep_left_canonical) {
      for (int s1 = 0; s1 < sh.d1; ++s1) left.a[s1] = u.block(s1 * sh.cl, 0, sh.cl, keep);
      const Mat sv_vd = s.asDiagonal() * v.adjoint();
      for (int s2 = 0; s2 < sh.d2; ++s2)
        right.a[s2] = sv_vd.block(0, s2 * sh.cr, keep, sh.cr);
    } else {
      const Mat us = u * s.asDiagonal();
      for (int s1 = 0; s1 < sh.d1; ++s1) left.a[s1] = us.block(s1 * sh.cl, 0, sh.cl, keep);
      const Mat vd = v.adjoint();
      for (int s2 = 0; s2 < sh.d2; ++s2) right.a[s2] = vd.block(0, s2 * sh.cr, keep, sh.cr);
    }
    return keep;
  }

  void evolve_bond(int i, double tau, bool forward_sweep) {
    Site& s1 = sites_[i];
    Site& s2 = sites_[i + 1];
    const TwoSiteShape sh{s1.d(), s2.d(), s1.left(), s2.right()};
    Vec theta(sh.size());
    for (int p1 = 0; p1 < sh.d1; ++p1)
      for (int p2 = 0; p2 < sh.d2; ++p2)
        Eigen::Map<Mat>(theta.data() + (p1 * sh.d2 + p2) * sh.cl * sh.cr, sh.cl,
                        sh.cr)
            .noalias() = s1.a[p1] * s2.a[p2];

    const Env& le = lenv_[i];
    const Env& re = renv_[i + 1];
    const MpoSite& w1 = mpo_[i];
    const MpoSite& w2 = mpo_[i + 1];
    MatVec hv = [&](const Vec& x, Vec& y) { apply_h2(le, w1, w2, re, sh, x, y); };
    lanczos_exp_local(hv, theta, tau);
    split(sh, theta, s1, s2, forward_sweep);
  }

  void backward_site(int i, double tau) {
    Site& s = sites_[i];
    const OneSiteShape sh{s.d(), s.left(), s.right()};
    Vec c(sh.size());
    pack_one(s, c);
    const Env& le = lenv_[i];
    const Env& re = renv_[i];
    const MpoSite& w = mpo_[i];
    MatVec hv = [&](const Vec& x, Vec& y) { apply_h1(le, w, re, sh, x, y); };
    lanczos_exp_local(hv, c, -tau);
    unpack_one(s, c);
  }

  void sweep_left_to_right(double tau) {
    const int n = int(sites_.size());
    for (int i = 0; i + 1 < n; ++i) {
      evolve_bond(i, tau, true);
      lenv_[i + 1] = update_left(lenv_[i], sites_[i], mpo_[i]);
      if (i + 2 < n) backward_site(i + 1, tau);
    }
  }

  void sweep_right_to_left(double tau) {
    const int n = int(sites_.size());
    for (int i = n - 2; i >= 0; --i) {
      evolve_bond(i, tau, false);
      renv_[i] = update_right(renv_[i + 1], sites_[i + 1], mpo_[i + 1]);
      if (i > 0) backward_site(i, tau);
    }
  }
};

} // namespace

Trajectory evolve_mps(const StarHamiltonian& h, InitialState initial,
                      const SimulationParams& params) {
  require(params.dt > 0.0 && params.t_final > 0.0, "invalid time parameters");
  require(params.sample_every >= 1, "sample_every must be >= 1");
  TdvpEngine engine(h, initial, params);
  return engine.run();
}

} // namespace sphereqed
