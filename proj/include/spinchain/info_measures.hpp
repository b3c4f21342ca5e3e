#pragma once

#include <Eigen/Dense>
#include <array>

#include "spinchain/model.hpp"

namespace spinchain {

using DensityMatrix4 = Eigen::Matrix4cd;

// Pairs (m, n) with p_m + p_n below this threshold are excluded from the
// QFI sum (removable singularity of Eq-type spectral formulas).
inline constexpr double kQfiPairThreshold = 1e-12;

// Throws InvalidState unless rho is Hermitian (1e-12), unit trace (1e-12)
// and positive semidefinite (eigenvalues >= -1e-10).
void validate_state(const DensityMatrix4& rho);

// Local orthonormal observable set {I, sx, sy, sz} / sqrt(2);
// Tr(A_mu A_nu) = delta_{mu nu}.
std::array<Eigen::Matrix2cd, 4> observable_set();

// F(rho, A) = 2 sum_{m,n} (p_m - p_n)^2 / (p_m + p_n) |<m|A|n>|^2
double qfi_single(const DensityMatrix4& rho, const Eigen::Matrix4cd& A);

// sum_mu F(rho, A_mu x I + I x B_mu) over the given local observable sets;
// independent of the choice of local orthonormal bases.
double qfi_total_direct(const DensityMatrix4& rho,
                        const std::array<Eigen::Matrix2cd, 4>& obs_a,
                        const std::array<Eigen::Matrix2cd, 4>& obs_b);
double qfi_total_direct(const DensityMatrix4& rho);

// Closed-form QFI evaluated verbatim from the correlators. The spectral
// route is canonical; `verify` reports the measured relationship between
// the two (see README). Throws SingularDenominator when
// |(1 + xx)(1 + yy) - mz^2| <= 1e-9.
double qfi_closed_form(const CorrelationSet& corrs);

// sum_{i != j} |rho_ij|
double coherence_l1(const DensityMatrix4& rho);

// X-state fast path: 2(|c_+| + |c_-|) = max(|xx|, |yy|).
double coherence_l1_xstate(const CorrelationSet& corrs);

// S(diag(rho)) - S(rho), base-2 entropies; small negative results within
// 1e-10 are clamped to zero.
double coherence_rec(const DensityMatrix4& rho);

// X-state fast path via the analytic eigenvalues.
double coherence_rec_xstate(const CorrelationSet& corrs);

// Quantum Cramer-Rao bound 1/sqrt(nu * F); throws NonpositiveInformation
// if F <= 0.
double cramer_rao_bound(double F, int nu);

// (spectral QFI, l1 coherence, REC) of the X-state assembled from corrs.
MeasureSet measures_at(const CorrelationSet& corrs);

}  // namespace spinchain
