#include "linalg.h"

#include <cmath>
#include <stdexcept>

#include <unsupported/Eigen/MatrixFunctions>

namespace star {

Mat expm(const Mat& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("expm: square matrix required");
    return m.exp();
}

Mat expm_i_hermitian(const Mat& h, double scale) {
    if (h.rows() != h.cols()) throw std::invalid_argument("expm_i_hermitian: square matrix required");
    Eigen::SelfAdjointEigenSolver<Mat> es(h);
    const auto& v = es.eigenvectors();
    Vec phases(h.rows());
    for (Eigen::Index i = 0; i < h.rows(); ++i)
        phases(i) = std::exp(kI * scale * es.eigenvalues()(i));
    return v * phases.asDiagonal() * v.adjoint();
}

Mat sqrtm_psd(const Mat& m) {
    Eigen::SelfAdjointEigenSolver<Mat> es(0.5 * (m + m.adjoint()));
    RVec ev = es.eigenvalues();
    if (ev.minCoeff() < -1e-6)
        throw std::domain_error("sqrtm_psd: matrix is not PSD within tolerance");
    Vec roots(ev.size());
    for (Eigen::Index i = 0; i < ev.size(); ++i)
        roots(i) = std::sqrt(std::max(0.0, ev(i)));
    return es.eigenvectors() * roots.asDiagonal() * es.eigenvectors().adjoint();
}

double purity(const Mat& rho) { return std::real((rho * rho).trace()); }

double min_eigenvalue_hermitian(const Mat& m) {
    Eigen::SelfAdjointEigenSolver<Mat> es(0.5 * (m + m.adjoint()), Eigen::EigenvaluesOnly);
    return es.eigenvalues().minCoeff();
}

double state_fidelity(const Mat& rho, const Mat& sigma) {
    Mat r = sqrtm_psd(rho);
    Mat inner = sqrtm_psd(r * sigma * r);
    double t = std::real(inner.trace());
    return t * t;
}

double state_fidelity(const Mat& rho, const Vec& psi) {
    return std::real((psi.adjoint() * rho * psi)(0, 0));
}

double state_fidelity(const Vec& a, const Vec& b) {
    return std::norm((a.adjoint() * b)(0, 0));
}

Mat project_psd(const Mat& rho, double* distance) {
    Eigen::SelfAdjointEigenSolver<Mat> es(0.5 * (rho + rho.adjoint()));
    RVec ev = es.eigenvalues();
    Vec clipped(ev.size());
    for (Eigen::Index i = 0; i < ev.size(); ++i)
        clipped(i) = std::max(0.0, ev(i));
    Mat out = es.eigenvectors() * clipped.asDiagonal() * es.eigenvectors().adjoint();
    double tr = std::real(out.trace());
    if (tr <= 0.0) throw std::domain_error("project_psd: zero trace after clipping");
    out /= tr;
    if (distance) *distance = (out - rho).norm();
    return out;
}

double phase_stripped_distance(const Mat& a, const Mat& b) {
    cplx ov = (a.adjoint() * b).trace();
    cplx phase = std::abs(ov) > 0 ? ov / std::abs(ov) : cplx(1.0, 0.0);
    return (a - b / phase).norm();
}

} // namespace star
