#pragma once

#include <functional>
#include <string>
#include <vector>

#include "device.h"
#include "hamiltonian.h"
#include "hilbert.h"

namespace star {

// Jump operators with their rates folded in: L = sqrt(rate) * op. The engine
// treats the list as opaque; builders below encode the physical model.
struct DissipatorSet {
    std::vector<Mat> ops;
    bool empty() const { return ops.empty(); }
};

// Qubit decay channels in the spin-locked (dressed) frame. The "flip" model
// attaches sigma_z at rate 1/(2 T1rho) and sigma_x at rate 1/(2 T2rho) per
// qubit: under a sigma_x spin lock the first relaxes <sigma_x> to 0 at
// exactly 1/T1rho while the second dephases the lock. The "lower" variant
// replaces the sigma_z pair with the one-directional dressed lowering
// operator |-><+| at rate 1/T1rho instead.
enum class QubitDecayModel { flip, lower };

DissipatorSet build_dissipators(const HilbertLayout& lay, const DeviceParams& params,
                                QubitDecayModel model = QubitDecayModel::flip);

// Observable hooks: label -> Hermitian operator, recorded at every kept step.
struct ObservableSet {
    std::vector<std::string> labels;
    std::vector<Mat> ops;
    void add(std::string label, Mat op);
    int size() const { return int(labels.size()); }
};

struct EvolveOptions {
    double dt = 0.0;           // 0 = auto from the model's f_max (1 / (50 f_max))
    double t0 = 0.0;
    int record_every = 0;      // 0 = record only the endpoint
    bool symmetrize = true;    // re-Hermitize rho after every step
    bool rk45 = false;         // adaptive embedded pair instead of fixed RK4
    double rtol = 1e-8;
    double atol = 1e-10;
    // hygiene thresholds; crossing any of them flags the result
    double trace_tol = 1e-7;
    double eig_floor = -1e-6;
    double top_fock_tol = 1e-4;
    std::vector<double> checkpoints; // extra states to keep, absolute times
};

struct EvolutionResult {
    std::vector<double> times;
    std::vector<std::vector<double>> records; // records[i][j] = obs j at times[i]
    std::vector<Mat> checkpoint_states;
    Mat final_rho;     // only one of final_rho / final_psi is filled
    Vec final_psi;
    bool hygiene_ok = true;
    std::string hygiene_note;
    // worst |tr rho - 1| seen; on the ket path the worst single-step norm
    // defect before renormalization
    double trace_defect = 0.0;
    double min_eig_final = 0.0;  // smallest eigenvalue of the final state
    double top_fock_max = 0.0;   // worst top-Fock occupation seen
    double herm_defect = 0.0;    // worst pre-symmetrization Hermiticity deviation
    long steps_taken = 0;
};

// Closed-system path: integrates -i H(t) psi. Dissipators must be empty.
EvolutionResult evolve_ket(const HamiltonianModel& model, const Vec& psi0, double t1,
                           const ObservableSet& obs = {}, const EvolveOptions& opt = {});

// Full master equation on the density matrix.
EvolutionResult evolve_rho(const HamiltonianModel& model, const DissipatorSet& diss,
                           const Mat& rho0, double t1, const ObservableSet& obs = {},
                           const EvolveOptions& opt = {});

double default_dt(const HamiltonianModel& model);

// Column of the record table for one labeled observable.
std::vector<double> expectation_series(const EvolutionResult& res, const std::string& label,
                                       const ObservableSet& obs);

} // namespace star
