#pragma once

// Adaptive Gauss-Kronrod 15(7) quadrature for semi-infinite integrals
// int_0^inf f(w) dw whose integrands decay like exp(-w/cutoff) times a
// polynomial envelope.  The infinite range is truncated at
// w_max = truncation_factor * cutoff; w_max is doubled until an empirical
// tail bound (fit of |f| beyond w_max against (1 + (w/cutoff)^3) e^{-w/cutoff})
// drops below abs_tol, then [0, w_max] is subdivided adaptively, always
// splitting the panel with the largest local error estimate |K15 - G7|.
//
// Oscillatory integrands are handled by capping the initial panel width:
// a 15-point rule cannot see a period shorter than the panel, so callers
// that know their oscillation scale should set max_panel_width to a quarter
// period or less.  The cap only shapes the initial partition; adaptive
// refinement proceeds as usual afterwards.

#include <functional>

namespace ptsb::quadrature {

struct QuadratureConfig {
  double rel_tol = 1e-9;
  double abs_tol = 1e-12;
  int max_subdivisions = 200;      // adaptive bisections on top of the initial partition
  double truncation_factor = 60.0; // initial w_max = truncation_factor * cutoff
  double max_panel_width = 0.0;    // 0 disables the cap
};

struct QuadratureResult {
  double value = 0.0;
  double abs_error_estimate = 0.0;  // sum of per-panel |K15 - G7|, plus the tail bound
  long evaluations = 0;
};

// Integrate f over [0, inf) truncated at a multiple of cutoff.  Throws
// std::domain_error on invalid parameters, NonFiniteError if f produces a
// non-finite value at a node, and NonConvergenceError when the subdivision
// budget is exhausted before the tolerance max(rel_tol*|I|, abs_tol) is met.
QuadratureResult integrate_cutoff(const std::function<double(double)>& f, double cutoff,
                                  const QuadratureConfig& config = {});

}  // namespace ptsb::quadrature
