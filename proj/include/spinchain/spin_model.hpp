#pragma once

#include "spinchain/model.hpp"
#include "spinchain/quadrature.hpp"

namespace spinchain {

// Overall scale applied to each Toeplitz kernel entry Q_d; fixed by matching
// r = 1, 2 correlators against the finite-N free-fermion solver at N = 2000.
inline constexpr double kToeplitzKernelScale = 0.5;

// Largest supported spin separation (dense r x r determinants).
inline constexpr int kMaxSeparation = 100;

QuadratureSpec default_quadrature(const ModelParams& params);

// Delta(phi) = sqrt([J(cos phi - 2 D sin phi) - 1]^2 + J^2 gamma^2 sin^2 phi),
// evaluated at |D| (two-spin observables are even under D -> -D).
double delta_dispersion(const ModelParams& params, double phi);

// Zeros of J cos(phi) - 2 J |D| sin(phi) - 1 in the open interval (0, pi);
// the integrands lose smoothness there when gamma -> 0.
std::vector<double> singularity_breakpoints(const ModelParams& params);

// <sigma^z> = -(1/pi) Int_0^pi [J(cos phi - 2 D sin phi) - 1] / Delta dphi
double magnetization(const ModelParams& params, const QuadratureSpec& spec);

// Q_r = -(1/pi) Int 2 cos(phi r)/Delta [J(cos phi - 2 D sin phi) - 1] dphi
//       + (gamma/pi) Int 2 J sin(phi r)/Delta sin(phi) dphi
double kernel_Q(const ModelParams& params, int r, const QuadratureSpec& spec);

// <sigma^x sigma^x> at separation r: r x r Toeplitz determinant with entry
// (i, j) = kToeplitzKernelScale * Q_{i-j-1}.
double corr_xx(const ModelParams& params, int r, const QuadratureSpec& spec);

// <sigma^y sigma^y>: entry (i, j) = kToeplitzKernelScale * Q_{i-j+1}.
double corr_yy(const ModelParams& params, int r, const QuadratureSpec& spec);

// <sigma^z sigma^z> = <sigma^z>^2 - Q_r Q_{-r} / 4
double corr_zz(const ModelParams& params, int r, const QuadratureSpec& spec);

CorrelationSet correlation_set(const ModelParams& params, int r, const QuadratureSpec& spec);

// Assembles the Eq-structured X-state from a correlation set:
//   a_pm = 1/4 pm mz/2 + zz/4,  b = (1 - zz)/4,  c_pm = (xx pm yy)/4.
// Throws NotPositiveSemidefinite if an eigenvalue drops below -1e-10.
SpinPairState reduced_density_matrix(const CorrelationSet& corrs);

}  // namespace spinchain
