#include "sphereqed/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <vector>

namespace sphereqed {

namespace {

// Kronrod 15 nodes/weights on [-1, 1] (QUADPACK dqk15) and the embedded
// Gauss 7 weights.
constexpr double kXgk[8] = {
    0.991455371120813, 0.949107912342759, 0.864864423359769, 0.741531185599394,
    0.586087235467691, 0.405845151377397, 0.207784955007898, 0.0};
constexpr double kWgk[8] = {
    0.022935322010529, 0.063092092629979, 0.104790010322250, 0.140653259715525,
    0.169004726639267, 0.190350578064785, 0.204432940075298, 0.209482141084728};
constexpr double kWg[4] = {
    0.129484966168870, 0.279705391489277, 0.381830050505119, 0.417959183673469};

struct Panel {
  double a, b;
  Complex value;
  double error;
};

Panel evaluate_panel(const std::function<Complex(double)>& f, double a, double b) {
  const double c = 0.5 * (a + b);
  const double h = 0.5 * (b - a);
  Complex kron = kWgk[7] * f(c);
  Complex gauss = kWg[3] * f(c);
  for (int i = 0; i < 7; ++i) {
    const Complex f1 = f(c - h * kXgk[i]);
    const Complex f2 = f(c + h * kXgk[i]);
    kron += kWgk[i] * (f1 + f2);
    if (i % 2 == 1) gauss += kWg[i / 2] * (f1 + f2);
  }
  kron *= h;
  gauss *= h;
  return {a, b, kron, std::abs(kron - gauss)};
}

} // namespace

QuadratureResult integrate(const std::function<Complex(double)>& f, double a,
                           double b, std::span<const double> breakpoints,
                           double abs_tol, int max_panels) {
  QuadratureResult out;
  if (a == b) {
    out.converged = true;
    return out;
  }
  require(a < b, "integrate: a < b required");
  require(abs_tol > 0.0, "integrate: abs_tol must be > 0");

  std::vector<double> edges{a, b};
  for (double x : breakpoints)
    if (x > a && x < b) edges.push_back(x);
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

  auto cmp = [](const Panel& p, const Panel& q) { return p.error < q.error; };
  std::priority_queue<Panel, std::vector<Panel>, decltype(cmp)> heap(cmp);
  int panels = 0;
  for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
    heap.push(evaluate_panel(f, edges[i], edges[i + 1]));
    ++panels;
    out.evaluations += 15;
  }

  double err_sum = 0.0;
  Complex val_sum = 0.0;
  {
    // initial sums
    std::vector<Panel> tmp;
    while (!heap.empty()) {
      tmp.push_back(heap.top());
      heap.pop();
    }
    for (const auto& p : tmp) {
      err_sum += p.error;
      val_sum += p.value;
      heap.push(p);
    }
  }

  while (err_sum > abs_tol && panels < max_panels) {
    const Panel worst = heap.top();
    heap.pop();
    err_sum -= worst.error;
    val_sum -= worst.value;
    const double mid = 0.5 * (worst.a + worst.b);
    if (mid <= worst.a || mid >= worst.b) { // interval at machine resolution
      err_sum += worst.error;
      val_sum += worst.value;
      heap.push(worst);
      break;
    }
    const Panel left = evaluate_panel(f, worst.a, mid);
    const Panel right = evaluate_panel(f, mid, worst.b);
    out.evaluations += 30;
    ++panels;
    err_sum += left.error + right.error;
    val_sum += left.value + right.value;
    heap.push(left);
    heap.push(right);
  }

  out.value = val_sum;
  out.error_estimate = err_sum;
  out.converged = err_sum <= abs_tol;
  return out;
}

QuadratureResult integrate_real(const std::function<double(double)>& f, double a,
                                double b, std::span<const double> breakpoints,
                                double abs_tol, int max_panels) {
  return integrate([&f](double x) { return Complex(f(x), 0.0); }, a, b, breakpoints,
                   abs_tol, max_panels);
}

} // namespace sphereqed
