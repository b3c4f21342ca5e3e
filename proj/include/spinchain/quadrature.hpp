#pragma once

#include <functional>

#include "spinchain/model.hpp"

namespace spinchain {

struct QuadratureResult {
    double value = 0.0;
    double error_estimate = 0.0;
    int panels = 0;
};

// Adaptive panel-subdivision quadrature on [a, b] with a Gauss-Kronrod 7/15
// rule per panel. The interval is pre-split at every breakpoint of `spec`
// that falls inside (a, b); panels are then bisected largest-error-first
// until the summed estimate meets max(abs_tol, rel_tol * |value|).
// Throws NonConvergence when max_subdivisions panels are exhausted.
QuadratureResult integrate_adaptive_full(const std::function<double(double)>& f,
                                         double a, double b, const QuadratureSpec& spec);

double integrate_adaptive(const std::function<double(double)>& f,
                          double a, double b, const QuadratureSpec& spec);

}  // namespace spinchain
