#pragma once

#include <stdexcept>
#include <vector>

#include "types.h"

namespace star {

// Composite space of n qubits and one resonator mode, truncated at fock_dim
// photons. Tensor ordering is fixed everywhere: qubit 0 (slowest index)
// through qubit n-1, resonator last (fastest index). A basis index decomposes
// as i = ((b_0*2 + b_1)*2 + ...)*fock_dim + n_photon.
struct HilbertLayout {
    int n_qubits = 0;
    int fock_dim = 0;

    HilbertLayout() = default;
    HilbertLayout(int nq, int fock) : n_qubits(nq), fock_dim(fock) {
        if (nq < 0 || fock < 2)
            throw std::invalid_argument("HilbertLayout: need n_qubits >= 0 and fock_dim >= 2");
    }

    int qubit_dim() const { return 1 << n_qubits; }
    int dim() const { return qubit_dim() * fock_dim; }
    bool operator==(const HilbertLayout& o) const {
        return n_qubits == o.n_qubits && fock_dim == o.fock_dim;
    }
    bool operator!=(const HilbertLayout& o) const { return !(*this == o); }
};

// Pauli matrices, sigma_z|g> = +|g> with basis order {|g>, |e>}.
Mat pauli_i();
Mat pauli_x();
Mat pauli_y();
Mat pauli_z();

Mat kron(const Mat& a, const Mat& b);

// I x..x op(slot k) x..x I_fock
Mat embed_qubit_op(const HilbertLayout& lay, int k, const Mat& op2);

// op acting on the resonator slot, identity on all qubits
Mat embed_resonator_op(const HilbertLayout& lay, const Mat& op_fock);

Mat annihilation(int fock_dim);             // a|n> = sqrt(n)|n-1>
Mat number_op(int fock_dim);                // a†a
Mat annihilation(const HilbertLayout& lay); // embedded
Mat number_op(const HilbertLayout& lay);    // embedded

// J_l = sum_k sigma_{l_k}/2, identity on the resonator. axis in {'x','y','z'}.
Mat collective_spin(const HilbertLayout& lay, char axis);
// J_phi = cos(phi) J_z - sin(phi) J_y
Mat collective_spin(const HilbertLayout& lay, double phi);
// Qubit-space-only variants (no resonator factor).
Mat collective_spin_qubits(int n_qubits, char axis);
Mat collective_spin_qubits(int n_qubits, double phi);

// |q_0 q_1 ... q_{n-1}> x |n_photon>, bits[k] = 1 means |e> on qubit k
Vec basis_ket(const HilbertLayout& lay, const std::vector<int>& bits, int n_photon);
// |++...+> x |0>, the x-basis bright state used as the standard gate input
Vec plus_state(const HilbertLayout& lay);
// qubit-space kets
Vec qubit_basis_ket(int n_qubits, const std::vector<int>& bits);
Vec plus_state_qubits(int n_qubits);

// Trace over the Fock slot; result is a 2^n x 2^n qubit density matrix.
Mat partial_trace_resonator(const HilbertLayout& lay, const Mat& rho);
// Trace a qubit-only density matrix down to the listed qubits (kept in the
// given order). Used for pairwise concurrence on >2-qubit registers.
Mat partial_trace_keep(int n_qubits, const Mat& rho_q, const std::vector<int>& keep);

inline Vec ket_from_rho_check(const Mat&) = delete; // states and matrices stay distinct

double top_fock_population(const HilbertLayout& lay, const Mat& rho);
double top_fock_population(const HilbertLayout& lay, const Vec& psi);

} // namespace star
