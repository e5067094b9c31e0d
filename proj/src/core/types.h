#pragma once

#include <complex>
#include <Eigen/Dense>

namespace star {

using cplx = std::complex<double>;
using Mat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXcd;
using RMat = Eigen::MatrixXd;
using RVec = Eigen::VectorXd;

constexpr double kTau = 6.283185307179586476925287;
constexpr double kPi = 3.141592653589793238462643;
constexpr cplx kI{0.0, 1.0};

// All config-facing frequencies are ordinary frequencies (Hz, the /2pi values);
// Hamiltonians and rates are converted to angular units (rad/s) exactly once,
// at operator build time.
inline double angular(double hz) { return kTau * hz; }

} // namespace star
