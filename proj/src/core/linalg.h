#pragma once

#include "types.h"

namespace star {

// General matrix exponential (scaling and squaring).
Mat expm(const Mat& m);
// exp(i * scale * H) for Hermitian H via eigendecomposition; cheaper and
// exactly unitary up to eigensolver error.
Mat expm_i_hermitian(const Mat& h, double scale);

// Principal square root of a PSD matrix; eigenvalues below -1e-6 are a domain
// error, small negatives are clamped to zero.
Mat sqrtm_psd(const Mat& m);

double purity(const Mat& rho);
double min_eigenvalue_hermitian(const Mat& m);

// Uhlmann fidelity F = (Tr sqrt(sqrt(rho) sigma sqrt(rho)))^2, the squared
// convention; agrees with |<psi|phi>|^2 on pure states.
double state_fidelity(const Mat& rho, const Mat& sigma);
double state_fidelity(const Mat& rho, const Vec& psi); // = <psi|rho|psi>
double state_fidelity(const Vec& a, const Vec& b);

// Clip negative eigenvalues to zero and renormalize the trace. Returns the
// Frobenius distance moved if requested.
Mat project_psd(const Mat& rho, double* distance = nullptr);

// Frobenius distance between two matrices after stripping a global phase from
// b (phase chosen to maximize Re Tr(a† b)); for comparing unitaries.
double phase_stripped_distance(const Mat& a, const Mat& b);

} // namespace star
