#include "ptsb/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <queue>
#include <stdexcept>
#include <string>
#include <vector>

#include "ptsb/errors.hpp"

namespace ptsb::quadrature {

namespace {

// 15-point Kronrod extension of 7-point Gauss on [-1, 1].  Abscissae >= 0;
// the rule is symmetric.  Even-indexed entries are the Kronrod-only nodes,
// odd-indexed entries (and the centre) carry the embedded Gauss rule.
constexpr double kXgk[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000,
};
constexpr double kWgk[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
};
constexpr double kWg[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
};

struct Panel {
  double a = 0.0;
  double b = 0.0;
  double value = 0.0;
  double error = 0.0;
  std::uint64_t serial = 0;
};

struct WorstFirst {
  bool operator()(const Panel& x, const Panel& y) const {
    if (x.error != y.error) return x.error < y.error;
    return x.serial > y.serial;  // ties: older panel first, keeps refinement deterministic
  }
};

class Evaluator {
 public:
  Evaluator(const std::function<double(double)>& f, long& count) : f_(f), count_(count) {}

  double operator()(double x) const {
    ++count_;
    const double y = f_(x);
    if (!std::isfinite(y)) {
      throw ptsb::NonFiniteError("integrand returned a non-finite value at w = " +
                                 std::to_string(x));
    }
    return y;
  }

 private:
  const std::function<double(double)>& f_;
  long& count_;
};

Panel evaluate_panel(const Evaluator& f, double a, double b, std::uint64_t serial) {
  const double c = 0.5 * (a + b);
  const double h = 0.5 * (b - a);
  const double fc = f(c);
  double k15 = kWgk[7] * fc;
  double g7 = kWg[3] * fc;
  for (int j = 0; j < 7; ++j) {
    const double fp = f(c + h * kXgk[j]);
    const double fm = f(c - h * kXgk[j]);
    k15 += kWgk[j] * (fp + fm);
    if (j % 2 == 1) g7 += kWg[j / 2] * (fp + fm);
  }
  Panel p;
  p.a = a;
  p.b = b;
  p.value = h * k15;
  p.error = std::abs(h * (k15 - g7));
  p.serial = serial;
  return p;
}

// Bound on int_{w_max}^inf |f| assuming |f(w)| <= M (1 + (w/cutoff)^3) e^{-w/cutoff}
// with M fitted from samples just beyond w_max.  Works in logs so that huge
// exp(w/cutoff) factors never overflow.  Returns 0 when f vanishes there.
double tail_bound(const Evaluator& f, double w_max, double cutoff) {
  constexpr double kOffsets[] = {1.0, 1.03, 1.08, 1.15, 1.25, 1.4, 1.6, 1.85};
  double log_m = -std::numeric_limits<double>::infinity();
  for (double s : kOffsets) {
    const double w = w_max * s;
    const double fw = std::abs(f(w));
    if (fw == 0.0) continue;
    const double x = w / cutoff;
    log_m = std::max(log_m, std::log(fw) + x - std::log1p(x * x * x));
  }
  if (log_m == -std::numeric_limits<double>::infinity()) return 0.0;
  const double x = w_max / cutoff;
  // int_x^inf (1 + t^3) e^{-t} dt = e^{-x} (x^3 + 3x^2 + 6x + 7)
  const double log_tail =
      log_m + std::log(cutoff) - x + std::log(((x + 3.0) * x + 6.0) * x + 7.0);
  return std::exp(log_tail);
}

}  // namespace

QuadratureResult integrate_cutoff(const std::function<double(double)>& f, double cutoff,
                                  const QuadratureConfig& config) {
  if (!f) throw std::domain_error("integrate_cutoff: integrand is empty");
  if (!std::isfinite(cutoff) || cutoff <= 0.0) {
    throw std::domain_error("integrate_cutoff: cutoff must be positive, got " +
                            std::to_string(cutoff));
  }
  if (!std::isfinite(config.rel_tol) || config.rel_tol <= 0.0) {
    throw std::domain_error("integrate_cutoff: rel_tol must be positive");
  }
  if (!std::isfinite(config.abs_tol) || config.abs_tol <= 0.0) {
    throw std::domain_error("integrate_cutoff: abs_tol must be positive");
  }
  if (config.max_subdivisions < 0) {
    throw std::domain_error("integrate_cutoff: max_subdivisions must be >= 0");
  }
  if (!std::isfinite(config.truncation_factor) || config.truncation_factor <= 0.0) {
    throw std::domain_error("integrate_cutoff: truncation_factor must be positive");
  }
  if (!std::isfinite(config.max_panel_width) || config.max_panel_width < 0.0) {
    throw std::domain_error("integrate_cutoff: max_panel_width must be >= 0");
  }

  long evaluations = 0;
  const Evaluator eval(f, evaluations);

  double w_max = config.truncation_factor * cutoff;
  double tail = tail_bound(eval, w_max, cutoff);
  for (int doublings = 0; tail > config.abs_tol; ++doublings) {
    if (doublings >= 64) {
      throw ptsb::NonConvergenceError(
          "integrate_cutoff: tail bound still " + std::to_string(tail) +
          " above abs_tol after 64 doublings of the truncation point");
    }
    w_max *= 2.0;
    tail = tail_bound(eval, w_max, cutoff);
  }

  std::size_t n0 = 8;
  if (config.max_panel_width > 0.0) {
    const double panels = std::ceil(w_max / config.max_panel_width);
    if (panels > double(1 << 20)) {
      throw std::domain_error("integrate_cutoff: max_panel_width " +
                              std::to_string(config.max_panel_width) +
                              " requires more than 2^20 initial panels");
    }
    n0 = std::max<std::size_t>(n0, static_cast<std::size_t>(panels));
  }

  std::uint64_t serial = 0;
  std::priority_queue<Panel, std::vector<Panel>, WorstFirst> queue;
  double total_value = 0.0;
  double total_error = 0.0;
  const double dw = w_max / static_cast<double>(n0);
  for (std::size_t i = 0; i < n0; ++i) {
    const double a = static_cast<double>(i) * dw;
    const double b = (i + 1 == n0) ? w_max : static_cast<double>(i + 1) * dw;
    Panel p = evaluate_panel(eval, a, b, serial++);
    total_value += p.value;
    total_error += p.error;
    queue.push(p);
  }

  const double width_floor = 4.0 * std::numeric_limits<double>::epsilon() * w_max;
  int splits = 0;
  std::vector<Panel> frozen;  // panels too narrow to bisect further
  while (total_error > std::max(config.rel_tol * std::abs(total_value), config.abs_tol)) {
    while (!queue.empty() && queue.top().b - queue.top().a <= width_floor) {
      frozen.push_back(queue.top());
      queue.pop();
    }
    if (queue.empty() || splits >= config.max_subdivisions) {
      throw ptsb::NonConvergenceError(
          "integrate_cutoff: error estimate " + std::to_string(total_error) +
          " above tolerance after " + std::to_string(splits) + " subdivisions");
    }
    const Panel worst = queue.top();
    queue.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    Panel left = evaluate_panel(eval, worst.a, mid, serial++);
    Panel right = evaluate_panel(eval, mid, worst.b, serial++);
    total_value += left.value + right.value - worst.value;
    total_error += left.error + right.error - worst.error;
    queue.push(left);
    queue.push(right);
    ++splits;
  }

  // Re-sum in position order: deterministic and independent of refinement history.
  std::vector<Panel> panels = std::move(frozen);
  panels.reserve(panels.size() + queue.size());
  while (!queue.empty()) {
    panels.push_back(queue.top());
    queue.pop();
  }
  std::sort(panels.begin(), panels.end(),
            [](const Panel& x, const Panel& y) { return x.a < y.a; });
  double value = 0.0;
  double error = tail;
  for (const Panel& p : panels) {
    value += p.value;
    error += p.error;
  }

  QuadratureResult result;
  result.value = value;
  result.abs_error_estimate = error;
  result.evaluations = evaluations;
  return result;
}

}  // namespace ptsb::quadrature
