#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "core/interval.hpp"

namespace metamcmc {

struct QuadratureResult {
  double value = 0.0;
  double error = 0.0;  // conservative absolute error estimate
  int panels = 0;
  bool converged = true;
};

struct QuadratureOptions {
  double abs_tol = 1e-10;
  int max_panels = 20000;
  /// Initial panel width; every starting segment is pre-split so no panel is
  /// wider than this. 0 means "one panel per segment". Needed so a narrow
  /// feature inside a long segment cannot hide from the first error estimate.
  double initial_width = 0.0;
};

using Integrand = std::function<double(double)>;

/// Globally adaptive Gauss-Kronrod (7,15) over a list of finite segments.
/// Refines the worst panel until the summed error estimate drops below
/// opts.abs_tol or the panel budget runs out (converged = false, best value
/// retained). Deterministic: ties in the refinement order are broken by the
/// panel's left endpoint.
QuadratureResult integrate_segments(const Integrand& f,
                                    const std::vector<Interval>& segments,
                                    const QuadratureOptions& opts);

/// Same, but drives the refinement to a relative tolerance: runs a coarse
/// pass to learn the scale of the integral, then re-integrates with the
/// implied absolute tolerance, iterating if the scale estimate shifts.
/// abs_floor stops the chase when the integral is indistinguishable from 0.
QuadratureResult integrate_relative(const Integrand& f,
                                    const std::vector<Interval>& segments,
                                    double rel_tol, double abs_floor,
                                    const QuadratureOptions& base = {});

/// Integrate f over an interval union whose infinite endpoints are truncated
/// to [clip_lo, clip_hi]. Throws QuadratureError when not converged.
QuadratureResult integrate_on(const Integrand& f, const IntervalUnion& domain,
                              double clip_lo, double clip_hi,
                              const QuadratureOptions& opts);

}  // namespace metamcmc
