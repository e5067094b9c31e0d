#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "core/hamiltonian.h"
#include "core/linalg.h"

using namespace star;

namespace {

DeviceParams two_qubit_chip() {
    DeviceParams p;
    p.n_qubits = 2;
    p.chi_hz = {380e3, 410e3};
    p.t1rho_s = {55e-6, 55e-6};
    p.t2rho_s = {28e-6, 16e-6};
    p.kappa_hz = 180e3;
    return p;
}

SidebandConfig sidebands(double nbar, double wsb = 30e6, double delta = 3.16e6) {
    SidebandConfig sb;
    sb.omega_sb_hz = wsb;
    sb.delta_hz = delta;
    sb.nbar = nbar;
    return sb;
}

RabiPulse flat_pulse(std::vector<double> omegas, double t_sq = 300e-9, double t_r = 10e-9) {
    RabiPulse p;
    p.omega_hz = std::move(omegas);
    p.t_r = t_r;
    p.t_sq = t_sq;
    return p;
}

double hermiticity_defect(const Mat& h) { return (h - Mat(h.adjoint())).cwiseAbs().maxCoeff(); }

} // namespace

TEST_CASE("all kinds are Hermitian at sampled times") {
    auto p = two_qubit_chip();
    auto sb = sidebands(8.0);
    sb.set_phi_delta(0.7);
    auto pulse = flat_pulse({30.55e6, 29.92e6});

    auto disp = build_dispersive(p, sb, pulse, 5);
    auto ideal = build_ms_ideal(p, sb, 5, 0.4);
    FullHamFlags flags;
    auto full = build_full_ham4(p, sb, pulse, 5, flags);

    for (double t : {0.0, 3.7e-9, 11.1e-9, 57.3e-9, 250.0e-9, 319.9e-9}) {
        CHECK(hermiticity_defect(disp.eval(t)) < 1e-10 * angular(30e6));
        CHECK(hermiticity_defect(ideal.eval(t)) < 1e-12 * angular(30e6));
        CHECK(hermiticity_defect(full.eval(t)) < 1e-12 * angular(30e6));
    }
}

TEST_CASE("full model assembles the displaced-frame terms") {
    DeviceParams p;
    p.n_qubits = 1;
    p.chi_hz = {400e3};
    p.t1rho_s = {1.0};
    p.t2rho_s = {1.0};
    auto sb = sidebands(8.0, 30e6, 3.2e6);
    auto pulse = flat_pulse({30e6}, 300e-9, 0.0);
    auto m = build_full_ham4(p, sb, pulse, 3);
    HilbertLayout lay(1, 3);

    SUBCASE("static part is delta n - n chi sigma_z") {
        // phi_delta = 0, so the oscillating parts vanish at wsb t = pi/2
        double t = 0.25 / sb.omega_sb_hz;
        Mat h = m.eval(t);
        Mat expect = angular(sb.delta_hz) * number_op(lay) -
                     number_op(lay) * (angular(400e3) * embed_qubit_op(lay, 0, pauli_z())) +
                     0.5 * angular(30e6) * embed_qubit_op(lay, 0, pauli_x());
        CHECK((h - expect).cwiseAbs().maxCoeff() < 1e-6);
    }

    SUBCASE("sideband coupling amplitude at t = 0") {
        Mat h = m.eval(0.0);
        // <g,1|H|g,0>: -sqrt(2 nbar) chi_ang for sigma_z = +1, cos = 1
        Vec g1 = basis_ket(lay, {0}, 1), g0 = basis_ket(lay, {0}, 0);
        cplx elem = g1.dot(h * g0);
        CHECK(std::real(elem) == doctest::Approx(-std::sqrt(16.0) * angular(400e3)).epsilon(1e-12));
        CHECK(std::abs(std::imag(elem)) < 1e-9);
        // cos^2 Stark ladder on the diagonal: -2 nbar chi_ang sigma_z
        Vec e0 = basis_ket(lay, {1}, 0);
        double stark_g = std::real(g0.dot(h * g0));
        double stark_e = std::real(e0.dot(h * e0));
        CHECK(stark_g == doctest::Approx(-16.0 * angular(400e3)).epsilon(1e-12));
        CHECK(stark_e == doctest::Approx(+16.0 * angular(400e3)).epsilon(1e-12));
    }

    SUBCASE("err-term flag removes the cos^2 ladder") {
        FullHamFlags flags;
        flags.include_err_terms = false;
        auto bare = build_full_ham4(p, sb, pulse, 3, flags);
        Vec g0 = basis_ket(lay, {0}, 0);
        CHECK(std::abs(g0.dot(bare.eval(0.0) * g0)) < 1e-12);
    }
}

TEST_CASE("drive phase enters as cos(wsb t + phi_delta)") {
    DeviceParams p;
    p.n_qubits = 1;
    p.chi_hz = {400e3};
    p.t1rho_s = {1.0};
    p.t2rho_s = {1.0};
    auto sb = sidebands(2.0);
    sb.set_phi_delta(1.1);
    auto pulse = flat_pulse({30e6}, 300e-9, 0.0);
    auto m = build_full_ham4(p, sb, pulse, 3);
    HilbertLayout lay(1, 3);
    Vec g1 = basis_ket(lay, {0}, 1), g0 = basis_ket(lay, {0}, 0);
    for (double t : {0.0, 2.3e-9, 7.9e-9}) {
        double expect = -std::sqrt(2.0 * sb.nbar) * angular(400e3) *
                        std::cos(angular(sb.omega_sb_hz) * t + 1.1);
        CHECK(std::real(g1.dot(m.eval(t) * g1 * 0.0 + m.eval(t) * g0)) ==
              doctest::Approx(expect).epsilon(1e-9));
    }
}

TEST_CASE("ideal model completes the square") {
    auto p = two_qubit_chip(); // unequal chi on purpose
    auto sb = sidebands(8.0, 30e6, 2 * std::sqrt(16.0) * 395e3);
    const double phi = 0.93;
    auto m = build_ms_ideal(p, sb, 6, phi);
    HilbertLayout lay(2, 6);

    Mat axis = Mat::Zero(lay.dim(), lay.dim());
    for (int k = 0; k < 2; ++k)
        axis += angular(p.chi_hz[k]) * (0.5 * std::cos(phi) * embed_qubit_op(lay, k, pauli_z()) -
                                        0.5 * std::sin(phi) * embed_qubit_op(lay, k, pauli_y()));
    const double del = angular(sb.delta_hz);
    Mat alpha = (std::sqrt(2.0 * sb.nbar) / del) * axis;
    Mat d = annihilation(lay);
    Mat shifted = del * Mat((d.adjoint() - alpha) * (d - alpha)) - del * alpha * alpha;

    // identity fails only in the top Fock row where d† truncates
    Mat diff = m.eval(0.0) - shifted;
    int top = lay.fock_dim - 1;
    double worst = 0.0;
    for (int i = 0; i < lay.dim(); ++i)
        for (int j = 0; j < lay.dim(); ++j)
            if (i % lay.fock_dim != top && j % lay.fock_dim != top)
                worst = std::max(worst, std::abs(diff(i, j)));
    CHECK(worst < 1e-7);
}

TEST_CASE("ideal model collapses to the collective axis for equal chi") {
    DeviceParams p;
    p.n_qubits = 3;
    p.chi_hz = {500e3, 500e3, 500e3};
    p.t1rho_s = {1.0, 1.0, 1.0};
    p.t2rho_s = {1.0, 1.0, 1.0};
    auto sb = sidebands(4.0, 30e6, 2.0e6);
    const double phi = -0.37;
    auto m = build_ms_ideal(p, sb, 4, phi);
    HilbertLayout lay(3, 4);
    Mat d = annihilation(lay);
    Mat expect = angular(sb.delta_hz) * number_op(lay) -
                 std::sqrt(2.0 * sb.nbar) * angular(500e3) * Mat(d + Mat(d.adjoint())) *
                     collective_spin(lay, phi);
    CHECK((m.eval(0.0) - expect).cwiseAbs().maxCoeff() < 1e-6);
}

TEST_CASE("dispersive model has the detuned Stark ladder at zero drive") {
    auto p = two_qubit_chip();
    auto sb = sidebands(0.0, 30e6, 2.5e6); // nbar = 0 kills both tones
    auto pulse = flat_pulse({0.0, 0.0});
    auto m = build_dispersive(p, sb, pulse, 4);
    HilbertLayout lay(2, 4);
    Mat h = m.eval(1.7e-9);
    CHECK(hermiticity_defect(h) < 1e-9);
    // |ge, n=2>: E = 2 delta - 2 (chi_0 - chi_1)
    Vec v = basis_ket(lay, {0, 1}, 2);
    double e = std::real(v.dot(h * v));
    CHECK(e == doctest::Approx(2.0 * angular(2.5e6) - 2.0 * (angular(380e3) - angular(410e3)))
                   .epsilon(1e-12));
    // off-diagonals all vanish
    Mat hd = h;
    hd.diagonal().setZero();
    CHECK(hd.cwiseAbs().maxCoeff() < 1e-9);
}

TEST_CASE("dispersive tones oscillate at the sideband offsets") {
    auto p = two_qubit_chip();
    auto sb = sidebands(8.0);
    auto pulse = flat_pulse({30e6, 30e6});
    auto m = build_dispersive(p, sb, pulse, 4);
    HilbertLayout lay(2, 4);
    Vec g1 = basis_ket(lay, {0, 0}, 1), g0 = basis_ket(lay, {0, 0}, 0);
    // both tones in phase at t=0 with phi_r = phi_b = 0
    cplx e0 = g1.dot(m.eval(0.0) * g0);
    double expect = std::sqrt(0.5 * sb.nbar) *
                    (angular(sb.omega_sb_hz + sb.delta_hz) + angular(sb.omega_sb_hz - sb.delta_hz));
    CHECK(std::real(e0) == doctest::Approx(expect).epsilon(1e-12));
    // half a sideband period later the beat has flipped sign (up to the slow
    // delta rotation)
    cplx e1 = g1.dot(m.eval(0.5 / sb.omega_sb_hz) * g0);
    CHECK(std::real(e1) < -0.9 * expect * std::cos(kPi * sb.delta_hz / sb.omega_sb_hz));
}

TEST_CASE("rabi envelope follows the pulse shape") {
    auto p = two_qubit_chip();
    auto sb = sidebands(8.0);
    auto pulse = flat_pulse({30.55e6, 29.92e6}, 100e-9, 8e-9);
    auto m = build_full_ham4(p, sb, pulse, 3);
    HilbertLayout lay(2, 3);
    Vec g = basis_ket(lay, {0, 0}, 0), e0 = basis_ket(lay, {1, 0}, 0);
    for (double t : {2e-9, 4e-9, 50e-9, 113e-9}) {
        cplx elem = e0.dot(m.eval(t) * g);
        CHECK(std::real(elem) ==
              doctest::Approx(0.5 * angular(30.55e6) * pulse.shape(t)).epsilon(1e-12));
    }
    CHECK(std::abs(e0.dot(m.eval(130e-9) * g)) < 1e-12); // past the tail
}

TEST_CASE("floquet splitting reduces to the bare amplitude at nbar = 0") {
    DeviceParams p;
    p.n_qubits = 1;
    p.chi_hz = {380e3};
    p.t1rho_s = {1.0};
    p.t2rho_s = {1.0};
    auto sb = sidebands(0.0, 30.55e6, 3.16e6);
    double f = renormalized_rabi(p, sb, 0, 30.55e6, 8);
    CHECK(f == doctest::Approx(30.55e6).epsilon(1e-9));
}

TEST_CASE("floquet splitting matches the frozen reference point") {
    // Reference from an independent column-wise integrator at chi = 380 kHz,
    // nbar = 8, drive and sideband both at 30.55 MHz, delta = 3.16 MHz. That
    // integrator carries a first-order boundary defect (envelope sampled as 0
    // at exactly t = 0), so the anchor is its Richardson limit: 449.57 kHz at
    // T/1600, 450.91 kHz at T/3072, extrapolating to +452.4 kHz. This
    // implementation is step-independent at the same value from T/400 up.
    DeviceParams p;
    p.n_qubits = 1;
    p.chi_hz = {380e3};
    p.t1rho_s = {1.0};
    p.t2rho_s = {1.0};
    auto sb = sidebands(8.0, 30.55e6, 2.0 * std::sqrt(16.0) * 395e3);
    double f400 = renormalized_rabi(p, sb, 0, 30.55e6, 10, 400);
    double f = renormalized_rabi(p, sb, 0, 30.55e6, 10);
    CHECK(f - 30.55e6 == doctest::Approx(0.4524e6).epsilon(0.01));
    CHECK(f400 == doctest::Approx(f).epsilon(1e-6));
}

TEST_CASE("floquet pull grows about linearly in nbar") {
    DeviceParams p;
    p.n_qubits = 1;
    p.chi_hz = {400e3};
    p.t1rho_s = {1.0};
    p.t2rho_s = {1.0};
    double delta = 2.0 * std::sqrt(16.0) * 400e3;
    auto sb4 = sidebands(4.0, 30e6, delta);
    auto sb8 = sidebands(8.0, 30e6, delta);
    double s4 = renormalized_rabi(p, sb4, 0, 30e6, 10) - 30e6;
    double s8 = renormalized_rabi(p, sb8, 0, 30e6, 12) - 30e6;
    CHECK(s4 > 0.0);
    CHECK(s8 / s4 == doctest::Approx(2.0).epsilon(0.35));
}
