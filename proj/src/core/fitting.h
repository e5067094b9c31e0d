#pragma once

#include <functional>
#include <string>
#include <vector>

#include "types.h"

namespace star {

struct FitResult {
    RVec params;
    RVec sigmas;          // 1-sigma from (J'J)^-1 scaled by residual variance
    double residual_norm = 0.0;
    bool converged = false;
    std::string model;    // identifier, e.g. "damped_cosine"
    std::string note;     // non-empty when the fit is flagged (degenerate data etc.)
};

// Damped least squares (Levenberg-Marquardt) with forward-difference Jacobian.
// residual(x) returns the vector of residuals; deterministic for fixed input.
FitResult fit_lm(const std::function<RVec(const RVec&)>& residual, RVec x0,
                 int max_iter = 200, double tol = 1e-12);

// A exp(-gamma t) cos(2 pi f t + phi) + c, params = {A, gamma, f, phi, c}.
// Initialization: discrete-Fourier peak for (f, phi, A), log-envelope
// regression for gamma. Needs at least 8 points per expected period to be
// trustworthy; flagged when the series has no identifiable oscillation.
FitResult fit_damped_cosine(const std::vector<double>& ts, const std::vector<double>& ys);

// y = a x + b, params = {a, b}; closed form.
FitResult fit_line(const std::vector<double>& xs, const std::vector<double>& ys);

// f = sqrt(f0^2 + (d - d0)^2), params = {f0, d0}; the resonance hyperbola of
// a chevron's fitted frequencies vs drive detuning.
FitResult fit_hyperbola(const std::vector<double>& ds, const std::vector<double>& fs);

} // namespace star
