#include "spinchain/spin_model.hpp"

#include <Eigen/LU>
#include <algorithm>
#include <cmath>
#include <numbers>

namespace spinchain {

namespace {

constexpr double kPi = std::numbers::pi;

// The lattice model is invariant under spatial reflection, which maps
// D -> -D; all kernels are therefore evaluated at |D|.
double bracket(const ModelParams& p, double phi) {
    return p.J * (std::cos(phi) - 2.0 * std::abs(p.D) * std::sin(phi)) - 1.0;
}

double delta_at(const ModelParams& p, double phi) {
    const double br = bracket(p, phi);
    const double gs = p.J * p.gamma * std::sin(phi);
    return std::sqrt(br * br + gs * gs);
}

}  // namespace

QuadratureSpec default_quadrature(const ModelParams& params) {
    QuadratureSpec spec;
    spec.breakpoints = singularity_breakpoints(params);
    return spec;
}

double delta_dispersion(const ModelParams& params, double phi) {
    params.validate();
    return delta_at(params, phi);
}

std::vector<double> singularity_breakpoints(const ModelParams& params) {
    params.validate();
    // a cos(phi) + b sin(phi) = R cos(phi - psi) with a = J, b = -2 J |D|.
    const double a = params.J;
    const double b = -2.0 * params.J * std::abs(params.D);
    const double R = std::hypot(a, b);
    std::vector<double> roots;
    if (R < 1.0)
        return roots;
    const double psi = std::atan2(b, a);
    const double phi_c = std::acos(std::min(1.0, 1.0 / R));
    for (double candidate : {psi - phi_c, psi + phi_c, psi - phi_c + 2.0 * kPi,
                             psi + phi_c - 2.0 * kPi}) {
        if (candidate > 1e-14 && candidate < kPi - 1e-14)
            roots.push_back(candidate);
    }
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end(),
                            [](double x, double y) { return std::abs(x - y) < 1e-12; }),
                roots.end());
    return roots;
}

double magnetization(const ModelParams& params, const QuadratureSpec& spec) {
    params.validate();
    const double value = integrate_adaptive(
        [&](double phi) { return bracket(params, phi) / delta_at(params, phi); }, 0.0, kPi,
        spec);
    return -value / kPi;
}

double kernel_Q(const ModelParams& params, int r, const QuadratureSpec& spec) {
    params.validate();
    const double first = integrate_adaptive(
        [&](double phi) {
            return 2.0 * std::cos(phi * r) / delta_at(params, phi) * bracket(params, phi);
        },
        0.0, kPi, spec);
    double second = 0.0;
    if (params.gamma != 0.0 && r != 0) {
        second = integrate_adaptive(
            [&](double phi) {
                return 2.0 * params.J * std::sin(phi * r) / delta_at(params, phi) *
                       std::sin(phi);
            },
            0.0, kPi, spec);
    }
    return -first / kPi + params.gamma * second / kPi;
}

namespace {

// Kernel values Q_d for d in [lo, hi], indexed as q[d - lo].
std::vector<double> kernel_range(const ModelParams& params, int lo, int hi,
                                 const QuadratureSpec& spec) {
    std::vector<double> q;
    q.reserve(hi - lo + 1);
    for (int d = lo; d <= hi; ++d)
        q.push_back(kernel_Q(params, d, spec));
    return q;
}

double toeplitz_determinant(const std::vector<double>& q, int lo, int r, int offset) {
    // entry (i, j) = scale * Q_{i - j + offset}, 1-based i, j
    Eigen::MatrixXd m(r, r);
    for (int i = 1; i <= r; ++i)
        for (int j = 1; j <= r; ++j)
            m(i - 1, j - 1) = kToeplitzKernelScale * q[i - j + offset - lo];
    return m.partialPivLu().determinant();
}

void check_separation(int r) {
    if (r < 1)
        throw Error("spin separation r must be >= 1, got " + std::to_string(r));
    if (r > kMaxSeparation)
        throw SeparationTooLarge(r);
}

}  // namespace

double corr_xx(const ModelParams& params, int r, const QuadratureSpec& spec) {
    check_separation(r);
    const auto q = kernel_range(params, -r, r - 2, spec);
    return toeplitz_determinant(q, -r, r, -1);
}

double corr_yy(const ModelParams& params, int r, const QuadratureSpec& spec) {
    check_separation(r);
    const auto q = kernel_range(params, -r + 2, r, spec);
    return toeplitz_determinant(q, -r + 2, r, +1);
}

double corr_zz(const ModelParams& params, int r, const QuadratureSpec& spec) {
    check_separation(r);
    const double mz = magnetization(params, spec);
    return mz * mz - kernel_Q(params, r, spec) * kernel_Q(params, -r, spec) / 4.0;
}

CorrelationSet correlation_set(const ModelParams& params, int r, const QuadratureSpec& spec) {
    check_separation(r);
    const double mz = magnetization(params, spec);
    const auto q = kernel_range(params, -r, r, spec);
    CorrelationSet out;
    out.r = r;
    out.mz = mz;
    out.xx = toeplitz_determinant(q, -r, r, -1);
    out.yy = toeplitz_determinant(q, -r, r, +1);
    out.zz = mz * mz - q[2 * r] * q[0] / 4.0;
    return out;
}

SpinPairState reduced_density_matrix(const CorrelationSet& corrs) {
    for (double v : {corrs.mz, corrs.xx, corrs.yy, corrs.zz})
        if (std::abs(v) > 1.0 + 1e-9)
            throw Error("correlator outside [-1, 1]: " + std::to_string(v));

    SpinPairState state;
    state.a_plus = 0.25 + 0.5 * corrs.mz + 0.25 * corrs.zz;
    state.a_minus = 0.25 - 0.5 * corrs.mz + 0.25 * corrs.zz;
    state.b = 0.25 * (1.0 - corrs.zz);
    state.c_plus = 0.25 * (corrs.xx + corrs.yy);
    state.c_minus = 0.25 * (corrs.xx - corrs.yy);

    const auto eigs = state.eigenvalues();
    const double min_eig = *std::min_element(eigs.begin(), eigs.end());
    if (min_eig < -1e-10)
        throw NotPositiveSemidefinite(min_eig);
    return state;
}

}  // namespace spinchain
