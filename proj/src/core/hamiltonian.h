#pragma once

#include <vector>

#include "device.h"
#include "hilbert.h"

namespace star {

enum class HamiltonianKind { dispersive, ms_ideal, full };

// Time-dependent Hamiltonian assembled as
//   H(t) = H_static + sum cos(w t + phase) * op
//        + sum cos^2(w t + phase) * op
//        + sum shape(t) * op            (Rabi envelopes)
//        + sum (amp e^{-i(w t + phase)} op + h.c.)   (lab-frame drive tones)
// All operator coefficients are prebuilt in angular units (rad/s); eval() is
// allocation-free given a correctly sized buffer.
struct HamiltonianModel {
    HamiltonianKind kind = HamiltonianKind::full;
    HilbertLayout layout;

    Mat h_static;
    struct CosTerm {
        Mat op;
        double w_ang;
        double phase;
    };
    std::vector<CosTerm> cos_terms;
    std::vector<CosTerm> cossq_terms;
    struct ToneTerm {
        Mat op; // typically a†
        cplx amp_ang;
        double w_ang;
        double phase;
    };
    std::vector<ToneTerm> tone_terms;
    std::vector<Mat> rabi_ops; // per qubit, angular(omega_k)/2 * sigma_x_k
    RabiPulse pulse;           // common timing, shape(t) scales rabi_ops

    double f_max_hz = 0.0; // largest frequency present, for step control

    void eval(double t, Mat& h) const;
    Mat eval(double t) const;
    bool time_dependent() const;
};

// Dispersive-frame model: -delta a†a + sum_k [Omega_k(t)/2 sigma_x
// - chi_k sigma_z a†a] + two-tone resonator drive. Kept for validation; the
// integrated dynamics use the displaced-frame model below.
HamiltonianModel build_dispersive(const DeviceParams& params, const SidebandConfig& sb,
                                  const RabiPulse& pulse, int fock_dim);

// Rotating-wave ideal gate model: delta n_d - sqrt(2 nbar) (d+d†) sum_k
// chi_k s_k(phi), with s_k = (cos phi sigma_z - sin phi sigma_y)/2 the
// per-qubit gate-axis spin. Equal chi_k collapses the coupling to the
// collective form -sqrt(2 nbar) chi (d+d†) J_phi. Positive config delta
// (tones below the resonator) makes the closed loop advance the phase so the
// n-qubit gate at delta = 2 sqrt(2 nbar) chi is exp(+i pi/2 J_phi^2).
HamiltonianModel build_ms_ideal(const DeviceParams& params, const SidebandConfig& sb,
                                int fock_dim, double phi_axis);

struct FullHamFlags {
    bool include_err_terms = true;  // the cos^2 ladder (Stark shift + micromotion)
    bool include_cross_kerr = false;
};

// Displaced-frame workhorse:
//   H(t) = delta n_d + sum_k Omega_k(t)/2 sigma_x_k
//        - [n_d + sqrt(2 nbar) cos(Osb t + phid)(d+d†) + 2 nbar cos^2(...)]
//          * sum_k chi_k sigma_z_k
// (all angular inside). The Rabi frame rotation is not applied; unwinding
// happens after integration.
HamiltonianModel build_full_ham4(const DeviceParams& params, const SidebandConfig& sb,
                                 const RabiPulse& pulse, int fock_dim,
                                 const FullHamFlags& flags = {});

// Effective dressed splitting (Hz) of one qubit under the sideband field,
// from the one-period Floquet monodromy of its single-qubit block. The chi
// nbar-scale terms pull the splitting away from the bare drive amplitude;
// chevron centers and sideband scheduling follow this value, not omega_r_hz.
double renormalized_rabi(const DeviceParams& params, const SidebandConfig& sb, int qubit,
                         double omega_r_hz, int fock_dim, int steps_per_period = 3072);

} // namespace star
