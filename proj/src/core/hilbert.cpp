#include "hilbert.h"

#include <cmath>

namespace star {

Mat pauli_i() { return Mat::Identity(2, 2); }

Mat pauli_x() {
    Mat m(2, 2);
    m << 0, 1, 1, 0;
    return m;
}

Mat pauli_y() {
    Mat m(2, 2);
    m << 0, -kI, kI, 0;
    return m;
}

Mat pauli_z() {
    Mat m(2, 2);
    m << 1, 0, 0, -1;
    return m;
}

Mat kron(const Mat& a, const Mat& b) {
    Mat out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    return out;
}

Mat embed_qubit_op(const HilbertLayout& lay, int k, const Mat& op2) {
    if (k < 0 || k >= lay.n_qubits)
        throw std::out_of_range("embed_qubit_op: qubit index out of range");
    if (op2.rows() != 2 || op2.cols() != 2)
        throw std::invalid_argument("embed_qubit_op: op must be 2x2");
    Mat m = Mat::Identity(1, 1);
    for (int q = 0; q < lay.n_qubits; ++q)
        m = kron(m, q == k ? op2 : Mat(Mat::Identity(2, 2)));
    return kron(m, Mat(Mat::Identity(lay.fock_dim, lay.fock_dim)));
}

Mat embed_resonator_op(const HilbertLayout& lay, const Mat& op_fock) {
    if (op_fock.rows() != lay.fock_dim || op_fock.cols() != lay.fock_dim)
        throw std::invalid_argument("embed_resonator_op: dimension mismatch");
    return kron(Mat(Mat::Identity(lay.qubit_dim(), lay.qubit_dim())), op_fock);
}

Mat annihilation(int fock_dim) {
    Mat a = Mat::Zero(fock_dim, fock_dim);
    for (int n = 1; n < fock_dim; ++n) a(n - 1, n) = std::sqrt(double(n));
    return a;
}

Mat number_op(int fock_dim) {
    Mat n = Mat::Zero(fock_dim, fock_dim);
    for (int k = 0; k < fock_dim; ++k) n(k, k) = double(k);
    return n;
}

Mat annihilation(const HilbertLayout& lay) { return embed_resonator_op(lay, annihilation(lay.fock_dim)); }
Mat number_op(const HilbertLayout& lay) { return embed_resonator_op(lay, number_op(lay.fock_dim)); }

static Mat pauli_by_axis(char axis) {
    switch (axis) {
        case 'x': return pauli_x();
        case 'y': return pauli_y();
        case 'z': return pauli_z();
        default: throw std::invalid_argument("collective_spin: axis must be x, y or z");
    }
}

Mat collective_spin_qubits(int n_qubits, char axis) {
    Mat p = pauli_by_axis(axis);
    int d = 1 << n_qubits;
    Mat j = Mat::Zero(d, d);
    for (int k = 0; k < n_qubits; ++k) {
        Mat m = Mat::Identity(1, 1);
        for (int q = 0; q < n_qubits; ++q)
            m = kron(m, q == k ? p : Mat(Mat::Identity(2, 2)));
        j += 0.5 * m;
    }
    return j;
}

Mat collective_spin_qubits(int n_qubits, double phi) {
    return std::cos(phi) * collective_spin_qubits(n_qubits, 'z') -
           std::sin(phi) * collective_spin_qubits(n_qubits, 'y');
}

Mat collective_spin(const HilbertLayout& lay, char axis) {
    return kron(collective_spin_qubits(lay.n_qubits, axis),
                Mat(Mat::Identity(lay.fock_dim, lay.fock_dim)));
}

Mat collective_spin(const HilbertLayout& lay, double phi) {
    return kron(collective_spin_qubits(lay.n_qubits, phi),
                Mat(Mat::Identity(lay.fock_dim, lay.fock_dim)));
}

Vec qubit_basis_ket(int n_qubits, const std::vector<int>& bits) {
    if (int(bits.size()) != n_qubits)
        throw std::invalid_argument("qubit_basis_ket: bits size mismatch");
    int idx = 0;
    for (int b : bits) {
        if (b != 0 && b != 1) throw std::invalid_argument("qubit_basis_ket: bits must be 0/1");
        idx = idx * 2 + b;
    }
    Vec v = Vec::Zero(1 << n_qubits);
    v(idx) = 1.0;
    return v;
}

Vec basis_ket(const HilbertLayout& lay, const std::vector<int>& bits, int n_photon) {
    if (n_photon < 0 || n_photon >= lay.fock_dim)
        throw std::out_of_range("basis_ket: photon number outside truncation");
    Vec q = qubit_basis_ket(lay.n_qubits, bits);
    Vec v = Vec::Zero(lay.dim());
    for (int i = 0; i < lay.qubit_dim(); ++i)
        v(i * lay.fock_dim + n_photon) = q(i);
    return v;
}

Vec plus_state_qubits(int n_qubits) {
    int d = 1 << n_qubits;
    return Vec::Constant(d, 1.0 / std::sqrt(double(d)));
}

Vec plus_state(const HilbertLayout& lay) {
    Vec q = plus_state_qubits(lay.n_qubits);
    Vec v = Vec::Zero(lay.dim());
    for (int i = 0; i < lay.qubit_dim(); ++i) v(i * lay.fock_dim) = q(i);
    return v;
}

Mat partial_trace_resonator(const HilbertLayout& lay, const Mat& rho) {
    if (rho.rows() != lay.dim() || rho.cols() != lay.dim())
        throw std::invalid_argument("partial_trace_resonator: dimension mismatch");
    int dq = lay.qubit_dim(), df = lay.fock_dim;
    Mat out = Mat::Zero(dq, dq);
    for (int i = 0; i < dq; ++i)
        for (int j = 0; j < dq; ++j)
            for (int n = 0; n < df; ++n)
                out(i, j) += rho(i * df + n, j * df + n);
    return out;
}

Mat partial_trace_keep(int n_qubits, const Mat& rho_q, const std::vector<int>& keep) {
    int d = 1 << n_qubits;
    if (rho_q.rows() != d || rho_q.cols() != d)
        throw std::invalid_argument("partial_trace_keep: dimension mismatch");
    for (int k : keep)
        if (k < 0 || k >= n_qubits) throw std::out_of_range("partial_trace_keep: bad qubit index");
    int nk = int(keep.size());
    int dk = 1 << nk;
    Mat out = Mat::Zero(dk, dk);
    // iterate over all pairs of full-register basis states whose kept bits are (i, j)
    // and whose traced bits agree
    for (int a = 0; a < d; ++a) {
        for (int b = 0; b < d; ++b) {
            bool same_traced = true;
            for (int q = 0; q < n_qubits; ++q) {
                bool kept = false;
                for (int k : keep) kept |= (k == q);
                if (!kept) {
                    int bit_a = (a >> (n_qubits - 1 - q)) & 1;
                    int bit_b = (b >> (n_qubits - 1 - q)) & 1;
                    if (bit_a != bit_b) { same_traced = false; break; }
                }
            }
            if (!same_traced) continue;
            int i = 0, j = 0;
            for (int t = 0; t < nk; ++t) {
                i = i * 2 + ((a >> (n_qubits - 1 - keep[t])) & 1);
                j = j * 2 + ((b >> (n_qubits - 1 - keep[t])) & 1);
            }
            out(i, j) += rho_q(a, b);
        }
    }
    return out;
}

double top_fock_population(const HilbertLayout& lay, const Mat& rho) {
    double p = 0.0;
    for (int i = 0; i < lay.qubit_dim(); ++i)
        p += std::real(rho(i * lay.fock_dim + lay.fock_dim - 1, i * lay.fock_dim + lay.fock_dim - 1));
    return p;
}

double top_fock_population(const HilbertLayout& lay, const Vec& psi) {
    double p = 0.0;
    for (int i = 0; i < lay.qubit_dim(); ++i)
        p += std::norm(psi(i * lay.fock_dim + lay.fock_dim - 1));
    return p;
}

} // namespace star
