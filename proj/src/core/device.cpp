#include "device.h"

#include <algorithm>
#include <cmath>

namespace star {

DeviceParams DeviceParams::from_config(const Config& cfg) {
    DeviceParams p;
    p.chi_hz = cfg.get_vector("device", "chi_hz");
    p.n_qubits = int(p.chi_hz.size());
    if (cfg.has("device", "n_qubits") && cfg.get_int("device", "n_qubits") != p.n_qubits)
        throw ConfigError("device.n_qubits disagrees with the chi_hz list length");
    std::vector<double> huge(p.n_qubits, 1e6); // effectively infinite lifetimes
    p.t1rho_s = cfg.get_vector("device", "t1rho_s", huge);
    p.t2rho_s = cfg.get_vector("device", "t2rho_s", huge);
    p.omega_ge_hz = cfg.get_vector("device", "omega_ge_hz", {});
    p.anharm_hz = cfg.get_vector("device", "anharm_hz", {});
    p.kappa_hz = cfg.get_double("device", "kappa_hz", 0.0);
    p.omega_c_hz = cfg.get_double("device", "omega_c_hz", 0.0);
    if (cfg.has("device", "chi_jk_hz")) {
        std::vector<double> flat = cfg.get_vector("device", "chi_jk_hz");
        size_t need = size_t(p.n_qubits) * (p.n_qubits - 1) / 2;
        if (flat.size() != need)
            throw ConfigError("device.chi_jk_hz needs one entry per qubit pair (upper triangle)");
        p.chi_jk_hz = RMat::Zero(p.n_qubits, p.n_qubits);
        size_t idx = 0;
        for (int i = 0; i < p.n_qubits; ++i)
            for (int j = i + 1; j < p.n_qubits; ++j) {
                p.chi_jk_hz(i, j) = p.chi_jk_hz(j, i) = flat[idx++];
            }
    }
    p.validate();
    return p;
}

void DeviceParams::validate() const {
    if (n_qubits < 1) throw ConfigError("device: need at least one qubit");
    auto check_len = [&](const std::vector<double>& v, const char* name) {
        if (!v.empty() && int(v.size()) != n_qubits)
            throw ConfigError(std::string("device.") + name + " length disagrees with qubit count");
    };
    if (int(chi_hz.size()) != n_qubits) throw ConfigError("device.chi_hz length mismatch");
    check_len(t1rho_s, "t1rho_s");
    check_len(t2rho_s, "t2rho_s");
    check_len(omega_ge_hz, "omega_ge_hz");
    check_len(anharm_hz, "anharm_hz");
    for (double c : chi_hz)
        if (!(c > 0)) throw ConfigError("device.chi_hz entries must be positive");
    for (double t : t1rho_s)
        if (!(t > 0)) throw ConfigError("device.t1rho_s entries must be positive");
    for (double t : t2rho_s)
        if (!(t > 0)) throw ConfigError("device.t2rho_s entries must be positive");
    if (kappa_hz < 0) throw ConfigError("device.kappa_hz must be nonnegative");
    if (chi_jk_hz.size() > 0 &&
        (chi_jk_hz.rows() != n_qubits || chi_jk_hz.cols() != n_qubits ||
         (chi_jk_hz - chi_jk_hz.transpose()).norm() > 0))
        throw ConfigError("device.chi_jk_hz must be a symmetric n x n matrix");
}

double DeviceParams::chi_avg_hz() const {
    std::vector<int> all(n_qubits);
    for (int i = 0; i < n_qubits; ++i) all[i] = i;
    return chi_avg_hz(all);
}

double DeviceParams::chi_avg_hz(const std::vector<int>& qubits) const {
    if (qubits.empty()) throw ConfigError("chi_avg: empty qubit set");
    double s = 0.0;
    for (int q : qubits) s += chi_hz.at(q);
    return s / double(qubits.size());
}

double DeviceParams::chi_spread() const {
    auto [lo, hi] = std::minmax_element(chi_hz.begin(), chi_hz.end());
    return (*hi - *lo) / chi_avg_hz();
}

static bool is_auto(const Config& cfg, const std::string& sec, const std::string& key) {
    return cfg.has(sec, key) && cfg.get_string(sec, key) == "auto";
}

SidebandConfig SidebandConfig::from_config(const Config& cfg) {
    SidebandConfig s;
    s.auto_omega_sb = is_auto(cfg, "sidebands", "omega_sb_hz") || !cfg.has("sidebands", "omega_sb_hz");
    if (!s.auto_omega_sb) s.omega_sb_hz = cfg.get_double("sidebands", "omega_sb_hz");
    s.auto_delta = is_auto(cfg, "sidebands", "delta_hz") || !cfg.has("sidebands", "delta_hz");
    if (!s.auto_delta) s.delta_hz = cfg.get_double("sidebands", "delta_hz");
    s.nbar = cfg.get_double("sidebands", "nbar");

    bool has_phid = cfg.has("sidebands", "phi_delta_rad");
    s.auto_phase = is_auto(cfg, "sidebands", "phi_delta_rad") || !has_phid;
    if (has_phid && !s.auto_phase) {
        s.set_phi_delta(cfg.get_double("sidebands", "phi_delta_rad"));
    } else if (!s.auto_phase) {
        s.phi_r = cfg.get_double("sidebands", "phi_r_rad", 0.0);
        s.phi_b = cfg.get_double("sidebands", "phi_b_rad", 0.0);
    }
    if (cfg.has("sidebands", "phi_r_rad") && !has_phid) {
        s.phi_r = cfg.get_double("sidebands", "phi_r_rad");
        s.phi_b = cfg.get_double("sidebands", "phi_b_rad", 0.0);
        s.auto_phase = false;
    }
    return s;
}

void SidebandConfig::validate() const {
    if (!(omega_sb_hz > 0)) throw ConfigError("sidebands.omega_sb_hz must be positive");
    if (nbar < 0) throw ConfigError("sidebands.nbar must be nonnegative");
    if (!(std::abs(delta_hz) < omega_sb_hz))
        throw ConfigError("sidebands.delta_hz must satisfy |delta| < omega_sb");
}

double RabiPulse::shape(double t) const {
    // closed-interval limits at both edges: integrators sample the endpoint
    // nodes and a one-sided zero there degrades them to first order
    if (t < 0.0 || t > total()) return 0.0;
    if (t < t_r) return t_r > 0 ? 0.5 * (1.0 - std::cos(kPi * t / t_r)) : 1.0;
    if (t <= t_r + t_sq) return 1.0;
    return 0.5 * (1.0 - std::cos(kPi * (total() - t) / t_r));
}

double RabiPulse::mean_omega_hz() const {
    double s = 0.0;
    for (double w : omega_hz) s += w;
    return s / double(omega_hz.size());
}

RabiPulse RabiPulse::from_config(const Config& cfg) {
    RabiPulse p;
    p.omega_hz = cfg.get_vector("pulse", "omega_r_hz");
    p.t_r = cfg.get_double("pulse", "t_r_s", 0.0);
    p.t_sq = cfg.get_double("pulse", "t_sq_s", 0.0);
    return p;
}

void RabiPulse::validate(int n_qubits) const {
    if (int(omega_hz.size()) != n_qubits)
        throw ConfigError("pulse.omega_r_hz length disagrees with qubit count");
    if (t_r < 0 || t_sq < 0) throw ConfigError("pulse timings must be nonnegative");
}

double gate_condition_delta(const DeviceParams& params, const std::vector<int>& qubits,
                            double nbar) {
    if (qubits.empty()) throw ConfigError("gate_condition_delta: empty qubit set");
    if (!(nbar > 0)) throw ConfigError("gate_condition_delta: nbar must be positive");
    return 2.0 * std::sqrt(nbar) * params.chi_avg_hz(qubits);
}

double matched_delta(const DeviceParams& params, const std::vector<int>& qubits, double nbar) {
    if (qubits.empty()) throw ConfigError("matched_delta: empty qubit set");
    if (!(nbar > 0)) throw ConfigError("matched_delta: nbar must be positive");
    return 2.0 * std::sqrt(2.0 * nbar) * params.chi_avg_hz(qubits);
}

double gate_time(double delta_hz) {
    if (!(delta_hz > 0)) throw ConfigError("gate_time: delta must be positive");
    return 1.0 / delta_hz;
}

double wrap_angle(double x) {
    double w = std::remainder(x, kTau);
    if (w <= -kPi) w += kTau;
    return w;
}

double wrap_angle_pi(double x) {
    double w = std::fmod(x, kPi);
    if (w < 0) w += kPi;
    return w;
}

double effective_gate_angle(double phi_delta_0, double omega_r_hz, double t_r) {
    return wrap_angle(phi_delta_0 + angular(omega_r_hz) * t_r);
}

int default_fock_dim(int n_qubits) {
    switch (n_qubits) {
        case 1: return 8;
        case 2: return 8;
        case 3: return 12;
        case 4: return 16;
        default: return 8 + 4 * std::max(0, n_qubits - 2);
    }
}

} // namespace star
