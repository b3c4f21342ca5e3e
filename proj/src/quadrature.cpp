#include "spinchain/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <vector>

namespace spinchain {

namespace {

// Gauss-Kronrod 7-15 nodes and weights on [-1, 1] (QUADPACK values).
constexpr double kKronrodNodes[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000};

constexpr double kKronrodWeights[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714};

// Embedded 7-point Gauss weights (nodes are the odd-index Kronrod nodes).
constexpr double kGaussWeights[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327};

struct Panel {
    double a, b;
    double value;
    double error;
};

Panel evaluate_panel(const std::function<double(double)>& f, double a, double b) {
    const double center = 0.5 * (a + b);
    const double half = 0.5 * (b - a);

    double fv[15];
    for (int i = 0; i < 7; ++i) {
        fv[i] = f(center - half * kKronrodNodes[i]);
        fv[14 - i] = f(center + half * kKronrodNodes[i]);
    }
    fv[7] = f(center);

    double kronrod = kKronrodWeights[7] * fv[7];
    double gauss = kGaussWeights[3] * fv[7];
    double abs_integral = kKronrodWeights[7] * std::abs(fv[7]);
    for (int i = 0; i < 7; ++i) {
        kronrod += kKronrodWeights[i] * (fv[i] + fv[14 - i]);
        abs_integral += kKronrodWeights[i] * (std::abs(fv[i]) + std::abs(fv[14 - i]));
        if (i % 2 == 1)
            gauss += kGaussWeights[i / 2] * (fv[i] + fv[14 - i]);
    }
    kronrod *= half;
    gauss *= half;
    abs_integral *= std::abs(half);

    // QUADPACK-style rescaled error estimate.
    double err = std::abs(kronrod - gauss);
    if (abs_integral > 0.0 && err > 0.0)
        err = abs_integral * std::min(1.0, std::pow(200.0 * err / abs_integral, 1.5));
    return {a, b, kronrod, err};
}

}  // namespace

QuadratureResult integrate_adaptive_full(const std::function<double(double)>& f,
                                         double a, double b, const QuadratureSpec& spec) {
    spec.validate();

    std::vector<double> edges;
    edges.push_back(a);
    for (double bp : spec.breakpoints)
        if (bp > a && bp < b)
            edges.push_back(bp);
    edges.push_back(b);

    auto order = [](const Panel& lhs, const Panel& rhs) { return lhs.error < rhs.error; };
    std::priority_queue<Panel, std::vector<Panel>, decltype(order)> queue(order);

    double total = 0.0;
    double total_error = 0.0;
    int panels = 0;
    for (std::size_t i = 1; i < edges.size(); ++i) {
        Panel p = evaluate_panel(f, edges[i - 1], edges[i]);
        total += p.value;
        total_error += p.error;
        ++panels;
        queue.push(p);
    }

    auto tolerance = [&] { return std::max(spec.abs_tol, spec.rel_tol * std::abs(total)); };

    while (total_error > tolerance()) {
        if (panels >= spec.max_subdivisions)
            throw NonConvergence(total_error, tolerance(), panels);
        Panel worst = queue.top();
        queue.pop();
        const double mid = 0.5 * (worst.a + worst.b);
        Panel left = evaluate_panel(f, worst.a, mid);
        Panel right = evaluate_panel(f, mid, worst.b);
        total += left.value + right.value - worst.value;
        total_error += left.error + right.error - worst.error;
        ++panels;
        queue.push(left);
        queue.push(right);
    }
    return {total, total_error, panels};
}

double integrate_adaptive(const std::function<double(double)>& f,
                          double a, double b, const QuadratureSpec& spec) {
    return integrate_adaptive_full(f, a, b, spec).value;
}

}  // namespace spinchain
