#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "core/hilbert.h"
#include "core/linalg.h"

using namespace star;

TEST_CASE("layout dimensions and validation") {
    HilbertLayout lay(2, 8);
    CHECK(lay.dim() == 32);
    CHECK(lay.qubit_dim() == 4);
    CHECK_THROWS(HilbertLayout(1, 1));
    CHECK(HilbertLayout(0, 4).dim() == 4);
}

TEST_CASE("single-site embedding matches fixed ordering") {
    // n=1, fock=2: sigma_z on the qubit slot is diag(1,1,-1,-1)
    HilbertLayout lay(1, 2);
    Mat sz = embed_qubit_op(lay, 0, pauli_z());
    Mat expect = Mat::Zero(4, 4);
    expect.diagonal() << 1, 1, -1, -1;
    CHECK((sz - expect).norm() == doctest::Approx(0.0));

    Mat sx = embed_qubit_op(lay, 0, pauli_x());
    CHECK((sx * sx - Mat::Identity(4, 4)).norm() < 1e-14);
    CHECK_THROWS(embed_qubit_op(lay, 1, pauli_x()));
}

TEST_CASE("disjoint embedded operators commute") {
    HilbertLayout lay(2, 3);
    Mat a = embed_qubit_op(lay, 0, pauli_z());
    Mat b = embed_qubit_op(lay, 1, pauli_z());
    CHECK((a * b - b * a).norm() < 1e-12);
    Mat c = embed_qubit_op(lay, 0, pauli_x());
    Mat d = annihilation(lay);
    CHECK((c * d - d * c).norm() < 1e-12);
}

TEST_CASE("annihilation operator algebra") {
    Mat a = annihilation(3);
    Mat n = a.adjoint() * a;
    CHECK(std::abs(n(0, 0)) < 1e-15);
    CHECK(std::real(n(1, 1)) == doctest::Approx(1.0));
    CHECK(std::real(n(2, 2)) == doctest::Approx(2.0));

    HilbertLayout lay(1, 3);
    Mat nd = number_op(lay);
    Eigen::SelfAdjointEigenSolver<Mat> es(nd, Eigen::EigenvaluesOnly);
    // eigenvalues {0,1,2} twice (one copy per qubit sector)
    for (int i = 0; i < 6; ++i)
        CHECK(es.eigenvalues()(i) == doctest::Approx(double(i / 2)));

    // [a, a†] = I away from the top Fock level
    Mat comm = annihilation(6) * annihilation(6).adjoint() - annihilation(6).adjoint() * annihilation(6);
    for (int i = 0; i < 5; ++i) CHECK(std::real(comm(i, i)) == doctest::Approx(1.0));
}

TEST_CASE("coherent state from displacement has <a> = alpha") {
    int fock = 24;
    cplx alpha(0.7, -0.4);
    Mat a = annihilation(fock);
    Mat disp = expm(alpha * a.adjoint() - std::conj(alpha) * a);
    Vec vac = Vec::Zero(fock);
    vac(0) = 1.0;
    Vec c = disp * vac;
    cplx mean = (c.adjoint() * a * c)(0, 0);
    CHECK(std::abs(mean - alpha) < 1e-6);
}

TEST_CASE("collective spin operators") {
    HilbertLayout lay(2, 2);
    Mat jz = collective_spin(lay, 'z');
    Eigen::SelfAdjointEigenSolver<Mat> es(jz, Eigen::EigenvaluesOnly);
    // two spin-1/2: eigenvalues {-1, 0, 0, 1}, each doubled by the fock factor
    CHECK(es.eigenvalues()(0) == doctest::Approx(-1.0));
    CHECK(es.eigenvalues()(3) == doctest::Approx(0.0));
    CHECK(es.eigenvalues()(7) == doctest::Approx(1.0));

    // J_{phi=pi/2} = -J_y
    Mat jp = collective_spin(lay, kPi / 2);
    CHECK((jp + collective_spin(lay, 'y')).norm() < 1e-12);

    // [Jx, Jy] = i Jz for n up to 4
    for (int n = 1; n <= 4; ++n) {
        Mat jx = collective_spin_qubits(n, 'x');
        Mat jy = collective_spin_qubits(n, 'y');
        Mat jzq = collective_spin_qubits(n, 'z');
        CHECK((jx * jy - jy * jx - kI * jzq).norm() < 1e-12);
    }

    // n=3: Jz^2 spectrum {9/4, 1/4} with multiplicities {2, 6}
    Mat jz3 = collective_spin_qubits(3, 'z');
    Eigen::SelfAdjointEigenSolver<Mat> es3(Mat(jz3 * jz3), Eigen::EigenvaluesOnly);
    int n94 = 0, n14 = 0;
    for (int i = 0; i < 8; ++i) {
        if (std::abs(es3.eigenvalues()(i) - 2.25) < 1e-12) n94++;
        if (std::abs(es3.eigenvalues()(i) - 0.25) < 1e-12) n14++;
    }
    CHECK(n94 == 2);
    CHECK(n14 == 6);
}

TEST_CASE("basis kets and plus state") {
    HilbertLayout lay(2, 3);
    Vec v = basis_ket(lay, {1, 0}, 2);
    // index = (1*2+0)*3 + 2 = 8
    CHECK(std::abs(v(8) - 1.0) < 1e-15);
    CHECK(v.norm() == doctest::Approx(1.0));

    Vec p = plus_state(lay);
    CHECK(p.norm() == doctest::Approx(1.0));
    // every qubit sector holds 1/2 amplitude in fock 0
    for (int i = 0; i < 4; ++i) CHECK(std::abs(p(i * 3) - 0.5) < 1e-15);
}

TEST_CASE("partial trace over the resonator") {
    HilbertLayout lay(1, 4);
    // product state rho_q x |0><0|
    Mat rho_q(2, 2);
    rho_q << 0.7, cplx(0.1, 0.2), cplx(0.1, -0.2), 0.3;
    Mat rho_r = Mat::Zero(4, 4);
    rho_r(0, 0) = 1.0;
    Mat rho = kron(rho_q, rho_r);
    Mat red = partial_trace_resonator(lay, rho);
    CHECK((red - rho_q).norm() < 1e-12);

    // maximally entangled qubit-resonator pair -> maximally mixed qubit
    Vec bell = Vec::Zero(8);
    bell(0) = 1.0 / std::sqrt(2.0);     // |g,0>
    bell(4 + 1) = 1.0 / std::sqrt(2.0); // |e,1>
    Mat red2 = partial_trace_resonator(lay, Mat(bell * bell.adjoint()));
    CHECK((red2 - 0.5 * Mat::Identity(2, 2)).norm() < 1e-12);
    CHECK(std::real(red2.trace()) == doctest::Approx(1.0));
}

TEST_CASE("partial trace keep subset") {
    // |q0 q1 q2> = (|000> + |111>)/sqrt2, keep {0,1} -> mixed diag(1/2, 0, 0, 1/2)
    Vec ghz = Vec::Zero(8);
    ghz(0) = ghz(7) = 1.0 / std::sqrt(2.0);
    Mat rho = ghz * ghz.adjoint();
    Mat r01 = partial_trace_keep(3, rho, {0, 1});
    CHECK(std::real(r01(0, 0)) == doctest::Approx(0.5));
    CHECK(std::real(r01(3, 3)) == doctest::Approx(0.5));
    CHECK(std::abs(r01(0, 3)) < 1e-14);

    // keeping everything is the identity operation
    Mat all = partial_trace_keep(3, rho, {0, 1, 2});
    CHECK((all - rho).norm() < 1e-14);
}

TEST_CASE("top fock population") {
    HilbertLayout lay(1, 3);
    Vec v = basis_ket(lay, {0}, 2);
    CHECK(top_fock_population(lay, v) == doctest::Approx(1.0));
    CHECK(top_fock_population(lay, plus_state(lay)) == doctest::Approx(0.0));
}
