#include "hamiltonian.h"

#include <cmath>
#include <stdexcept>

#include <Eigen/Eigenvalues>

namespace star {

void HamiltonianModel::eval(double t, Mat& h) const {
    h = h_static;
    for (const auto& term : cos_terms)
        h.noalias() += std::cos(term.w_ang * t + term.phase) * term.op;
    for (const auto& term : cossq_terms) {
        const double c = std::cos(term.w_ang * t + term.phase);
        h.noalias() += (c * c) * term.op;
    }
    for (const auto& term : tone_terms) {
        const cplx ph = std::exp(cplx(0.0, -(term.w_ang * t + term.phase)));
        h.noalias() += (term.amp_ang * ph) * term.op;
        h.noalias() += std::conj(term.amp_ang * ph) * term.op.adjoint();
    }
    if (!rabi_ops.empty()) {
        const double s = pulse.shape(t);
        if (s != 0.0)
            for (const auto& op : rabi_ops) h.noalias() += s * op;
    }
}

Mat HamiltonianModel::eval(double t) const {
    Mat h(layout.dim(), layout.dim());
    eval(t, h);
    return h;
}

bool HamiltonianModel::time_dependent() const {
    return !cos_terms.empty() || !cossq_terms.empty() || !tone_terms.empty() ||
           !rabi_ops.empty();
}

namespace {

// sum_k angular(chi_k) sigma_z_k, the qubit-side factor of every dispersive
// coupling term
Mat weighted_sigma_z(const HilbertLayout& lay, const DeviceParams& params) {
    Mat s = Mat::Zero(lay.dim(), lay.dim());
    for (int k = 0; k < lay.n_qubits; ++k)
        s += angular(params.chi_hz[k]) * embed_qubit_op(lay, k, pauli_z());
    return s;
}

std::vector<Mat> rabi_operators(const HilbertLayout& lay, const RabiPulse& pulse) {
    std::vector<Mat> ops;
    ops.reserve(lay.n_qubits);
    for (int k = 0; k < lay.n_qubits; ++k)
        ops.push_back(0.5 * angular(pulse.omega_hz[k]) * embed_qubit_op(lay, k, pauli_x()));
    return ops;
}

Mat cross_kerr(const HilbertLayout& lay, const DeviceParams& params) {
    Mat h = Mat::Zero(lay.dim(), lay.dim());
    if (params.chi_jk_hz.size() == 0) return h;
    for (int j = 0; j < lay.n_qubits; ++j)
        for (int k = j + 1; k < lay.n_qubits; ++k) {
            const double c = params.chi_jk_hz(j, k);
            if (c != 0.0)
                h += angular(c) * embed_qubit_op(lay, j, pauli_z()) *
                     embed_qubit_op(lay, k, pauli_z());
        }
    return h;
}

double rabi_f_max(const RabiPulse& pulse) {
    double m = 0.0;
    for (double w : pulse.omega_hz) m = std::max(m, std::abs(w));
    return m;
}

// Gershgorin bound on the spectral radius of the worst-case |H|, in Hz. Step
// control needs this as well as the oscillation frequencies: the Fock ladder
// grows the norm linearly in the truncation even when every drive is slow.
double spectral_bound_hz(const HamiltonianModel& m) {
    RMat acc = m.h_static.cwiseAbs();
    for (const auto& t : m.cos_terms) acc += t.op.cwiseAbs();
    for (const auto& t : m.cossq_terms) acc += t.op.cwiseAbs();
    for (const auto& t : m.tone_terms)
        acc += std::abs(t.amp_ang) * (t.op.cwiseAbs() + Mat(t.op.adjoint()).cwiseAbs());
    for (const auto& op : m.rabi_ops) acc += op.cwiseAbs();
    return acc.rowwise().sum().maxCoeff() / kTau;
}

} // namespace

HamiltonianModel build_dispersive(const DeviceParams& params, const SidebandConfig& sb,
                                  const RabiPulse& pulse, int fock_dim) {
    HilbertLayout lay(params.n_qubits, fock_dim);
    HamiltonianModel m;
    m.kind = HamiltonianKind::dispersive;
    m.layout = lay;
    m.pulse = pulse;

    const Mat nd = number_op(lay);
    // Frame rotating at the tone center omega_c - delta: the resonator sits
    // +delta above the frame, the tones beat at -+Omega_SB around zero.
    m.h_static = angular(sb.delta_hz) * nd - nd * weighted_sigma_z(lay, params);
    m.h_static += cross_kerr(lay, params);
    m.rabi_ops = rabi_operators(lay, pulse);

    // Tone amplitudes sized to hold nbar/2 photons each at detuning
    // Omega_SB -+ delta from the resonator.
    const Mat adag = annihilation(lay).adjoint();
    const double root = std::sqrt(0.5 * sb.nbar);
    m.tone_terms.push_back(
        {adag, cplx(root * angular(sb.omega_sb_hz + sb.delta_hz), 0.0),
         -angular(sb.omega_sb_hz), sb.phi_r});
    m.tone_terms.push_back(
        {adag, cplx(root * angular(sb.omega_sb_hz - sb.delta_hz), 0.0),
         +angular(sb.omega_sb_hz), sb.phi_b});

    m.f_max_hz =
        std::max({sb.omega_sb_hz + std::abs(sb.delta_hz), rabi_f_max(pulse), spectral_bound_hz(m)});
    return m;
}

HamiltonianModel build_ms_ideal(const DeviceParams& params, const SidebandConfig& sb,
                                int fock_dim, double phi_axis) {
    HilbertLayout lay(params.n_qubits, fock_dim);
    HamiltonianModel m;
    m.kind = HamiltonianKind::ms_ideal;
    m.layout = lay;

    const Mat a = annihilation(lay);
    const Mat x_res = a + Mat(a.adjoint());
    Mat axis = Mat::Zero(lay.dim(), lay.dim());
    for (int k = 0; k < lay.n_qubits; ++k)
        axis += angular(params.chi_hz[k]) *
                (0.5 * std::cos(phi_axis) * embed_qubit_op(lay, k, pauli_z()) -
                 0.5 * std::sin(phi_axis) * embed_qubit_op(lay, k, pauli_y()));

    m.h_static = angular(sb.delta_hz) * number_op(lay) -
                 std::sqrt(2.0 * sb.nbar) * x_res * axis;
    m.f_max_hz = spectral_bound_hz(m);
    return m;
}

HamiltonianModel build_full_ham4(const DeviceParams& params, const SidebandConfig& sb,
                                 const RabiPulse& pulse, int fock_dim,
                                 const FullHamFlags& flags) {
    HilbertLayout lay(params.n_qubits, fock_dim);
    HamiltonianModel m;
    m.kind = HamiltonianKind::full;
    m.layout = lay;
    m.pulse = pulse;

    const Mat nd = number_op(lay);
    const Mat szc = weighted_sigma_z(lay, params);
    const Mat a = annihilation(lay);
    const Mat x_res = a + Mat(a.adjoint());

    // Positive config delta means tones below the resonator, which leaves the
    // displaced mode +delta above the beat frame; this sign closes the loop
    // with gate phase +pi/2 J^2.
    m.h_static = angular(sb.delta_hz) * nd - nd * szc;
    if (flags.include_cross_kerr) m.h_static += cross_kerr(lay, params);

    const double wsb = angular(sb.omega_sb_hz);
    const double phid = sb.phi_delta();
    m.cos_terms.push_back({-std::sqrt(2.0 * sb.nbar) * (x_res * szc), wsb, phid});
    if (flags.include_err_terms)
        m.cossq_terms.push_back({-2.0 * sb.nbar * szc, wsb, phid});

    m.rabi_ops = rabi_operators(lay, pulse);
    m.f_max_hz = std::max({2.0 * sb.omega_sb_hz, rabi_f_max(pulse), std::abs(sb.delta_hz),
                           spectral_bound_hz(m)});
    return m;
}

double renormalized_rabi(const DeviceParams& params, const SidebandConfig& sb, int qubit,
                         double omega_r_hz, int fock_dim, int steps_per_period) {
    if (qubit < 0 || qubit >= params.n_qubits)
        throw std::invalid_argument("renormalized_rabi: qubit index out of range");

    DeviceParams one;
    one.n_qubits = 1;
    one.chi_hz = {params.chi_hz[qubit]};
    one.t1rho_s = {1.0};
    one.t2rho_s = {1.0};

    RabiPulse flat;
    flat.omega_hz = {omega_r_hz};
    flat.t_r = 0.0;
    const double period = 1.0 / sb.omega_sb_hz;
    flat.t_sq = 2.0 * period;

    const HamiltonianModel m = build_full_ham4(one, sb, flat, fock_dim);
    const int d = m.layout.dim();

    // One-period propagator, RK4 on the full matrix.
    const int steps = steps_per_period;
    const double dt = period / steps;
    Mat u = Mat::Identity(d, d);
    Mat h(d, d), k1(d, d), k2(d, d), k3(d, d), k4(d, d);
    const cplx mi(0.0, -1.0);
    for (int i = 0; i < steps; ++i) {
        const double t = i * dt;
        m.eval(t, h);
        k1 = mi * (h * u);
        m.eval(t + 0.5 * dt, h);
        k2 = mi * (h * (u + 0.5 * dt * k1));
        k3 = mi * (h * (u + 0.5 * dt * k2));
        m.eval(t + dt, h);
        k4 = mi * (h * (u + dt * k3));
        u += (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    }

    Eigen::ComplexEigenSolver<Mat> es(u);
    if (es.info() != Eigen::Success)
        throw std::runtime_error("renormalized_rabi: eigensolve failed");

    // Quasi-energies from the eigenphases; the two dressed levels are the
    // eigenvectors with the largest overlap on |+,0> and |-,0>.
    const HilbertLayout lay = m.layout;
    Vec plus = basis_ket(lay, {0}, 0) + basis_ket(lay, {1}, 0);
    Vec minus = basis_ket(lay, {0}, 0) - basis_ket(lay, {1}, 0);
    plus /= std::sqrt(2.0);
    minus /= std::sqrt(2.0);

    int ip = -1, im = -1;
    double best_p = -1.0, best_m = -1.0;
    for (int j = 0; j < d; ++j) {
        const Vec v = es.eigenvectors().col(j);
        const double op = std::abs(plus.dot(v));
        const double om = std::abs(minus.dot(v));
        if (op > best_p) { best_p = op; ip = j; }
        if (om > best_m) { best_m = om; im = j; }
    }
    if (ip == im)
        throw std::runtime_error("renormalized_rabi: dressed levels not separable");

    // U eigenvalue e^{-i eps T}; splitting defined modulo 1/T, resolved to the
    // branch nearest the bare amplitude.
    auto quasi = [&](int j) {
        return -std::arg(es.eigenvalues()(j)) / (kTau * period);
    };
    double split = quasi(ip) - quasi(im);
    const double fsb = 1.0 / period;
    split = split - fsb * std::floor(split / fsb);
    double best = split;
    for (int b = -2; b <= 2; ++b) {
        const double cand = split + b * fsb;
        if (std::abs(cand - omega_r_hz) < std::abs(best - omega_r_hz)) best = cand;
    }
    return best;
}

} // namespace star
