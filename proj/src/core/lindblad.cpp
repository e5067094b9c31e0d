#include "lindblad.h"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>
#include <type_traits>

#include <Eigen/Eigenvalues>

namespace star {

void ObservableSet::add(std::string label, Mat op) {
    labels.push_back(std::move(label));
    ops.push_back(std::move(op));
}

DissipatorSet build_dissipators(const HilbertLayout& lay, const DeviceParams& params,
                                QubitDecayModel model) {
    DissipatorSet d;
    if (params.kappa_hz > 0.0)
        d.ops.push_back(std::sqrt(angular(params.kappa_hz)) * annihilation(lay));

    // Channels slower than 1e4 s contribute < 1e-10 over any pulse here and
    // are dropped rather than integrated.
    const double t_inf = 1e4;
    const Mat lower_op = 0.5 * (pauli_z() + kI * pauli_y()); // |-><+| in the x basis
    for (int k = 0; k < lay.n_qubits; ++k) {
        const double t1 = params.t1rho_s[k];
        const double t2 = params.t2rho_s[k];
        if (t1 < t_inf) {
            if (model == QubitDecayModel::flip)
                d.ops.push_back(std::sqrt(0.5 / t1) * embed_qubit_op(lay, k, pauli_z()));
            else
                d.ops.push_back(std::sqrt(1.0 / t1) * embed_qubit_op(lay, k, lower_op));
        }
        if (t2 < t_inf)
            d.ops.push_back(std::sqrt(0.5 / t2) * embed_qubit_op(lay, k, pauli_x()));
    }
    return d;
}

double default_dt(const HamiltonianModel& model) {
    if (model.f_max_hz <= 0.0)
        throw std::invalid_argument("default_dt: model has no frequency scale");
    return 1.0 / (50.0 * model.f_max_hz);
}

namespace {

// Dormand-Prince 5(4) tableau
constexpr double A21 = 1.0 / 5;
constexpr double A31 = 3.0 / 40, A32 = 9.0 / 40;
constexpr double A41 = 44.0 / 45, A42 = -56.0 / 15, A43 = 32.0 / 9;
constexpr double A51 = 19372.0 / 6561, A52 = -25360.0 / 2187, A53 = 64448.0 / 6561,
                 A54 = -212.0 / 729;
constexpr double A61 = 9017.0 / 3168, A62 = -355.0 / 33, A63 = 46732.0 / 5247,
                 A64 = 49.0 / 176, A65 = -5103.0 / 18656;
constexpr double B1 = 35.0 / 384, B3 = 500.0 / 1113, B4 = 125.0 / 192, B5 = -2187.0 / 6784,
                 B6 = 11.0 / 84;
constexpr double E1 = 71.0 / 57600, E3 = -71.0 / 16695, E4 = 71.0 / 1920,
                 E5 = -17253.0 / 339200, E6 = 22.0 / 525, E7 = -1.0 / 40;
constexpr double C2 = 1.0 / 5, C3 = 3.0 / 10, C4 = 4.0 / 5, C5 = 8.0 / 9;

template <class State>
double error_norm(const State& err, const State& y0, const State& y1, double atol,
                  double rtol) {
    const auto n = err.size();
    double acc = 0.0;
    for (Eigen::Index i = 0; i < n; ++i) {
        const double sc =
            atol + rtol * std::max(std::abs(y0.data()[i]), std::abs(y1.data()[i]));
        const double r = std::abs(err.data()[i]) / sc;
        acc += r * r;
    }
    return std::sqrt(acc / double(n));
}

struct HygieneTracker {
    const EvolveOptions& opt;
    const HilbertLayout& lay;
    double trace_defect = 0.0;
    double top_fock_max = 0.0;

    template <class State>
    void look(const State& y) {
        double tr;
        if constexpr (std::is_same_v<State, Mat>)
            tr = std::real(y.trace());
        else
            tr = y.squaredNorm();
        trace_defect = std::max(trace_defect, std::abs(tr - 1.0));
        top_fock_max = std::max(top_fock_max, top_fock_population(lay, y));
    }

    void finish(EvolutionResult& res) const {
        std::ostringstream note;
        res.trace_defect = trace_defect;
        res.top_fock_max = top_fock_max;
        if (trace_defect > opt.trace_tol)
            note << "trace drift " << trace_defect << " above " << opt.trace_tol << "; ";
        if (top_fock_max > opt.top_fock_tol)
            note << "top Fock occupation " << top_fock_max << " above " << opt.top_fock_tol
                 << "; ";
        if (res.min_eig_final < opt.eig_floor)
            note << "negative eigenvalue " << res.min_eig_final << " below " << opt.eig_floor
                 << "; ";
        res.hygiene_note = note.str();
        res.hygiene_ok = res.hygiene_note.empty();
    }
};

template <class State>
class Integrator {
public:
    using Rhs = std::function<void(double, const State&, State&)>;

    Integrator(Rhs rhs, const ObservableSet& obs, const EvolveOptions& opt,
               const HilbertLayout& lay, bool symmetrize, bool renormalize)
        : rhs_(std::move(rhs)), obs_(obs), opt_(opt), hyg_{opt, lay},
          symmetrize_(symmetrize), renormalize_(renormalize) {}

    void run(State& y, double t0, double t1, double dt, EvolutionResult& res) {
        // segment boundaries: checkpoints land exactly on step edges
        std::vector<double> stops = opt_.checkpoints;
        std::sort(stops.begin(), stops.end());
        for (double c : stops)
            if (c < t0 - 1e-15 || c > t1 + 1e-15)
                throw std::invalid_argument("evolve: checkpoint outside [t0, t1]");
        stops.push_back(t1);

        alloc(y);
        record(t0, y, res);
        double t = t0;
        double h_try = dt;
        for (double stop : stops) {
            if (stop <= t + 1e-18) {
                keep_checkpoint(stop, y, res);
                continue;
            }
            if (opt_.rk45)
                run_adaptive(y, t, stop, h_try, res);
            else
                run_fixed(y, t, stop, dt, res);
            t = stop;
            if (stop != t1) keep_checkpoint(stop, y, res);
        }
        if (res.times.empty() || res.times.back() != t1) record(t1, y, res);
        hyg_.look(y);
    }

    HygieneTracker& hygiene() { return hyg_; }

private:
    void alloc(const State& y) {
        k1_ = y; k2_ = y; k3_ = y; k4_ = y; k5_ = y; k6_ = y;
        ynew_ = y; yerr_ = y; ytmp_ = y;
    }

    void post_step(State& y) {
        if constexpr (std::is_same_v<State, Mat>) {
            if (symmetrize_) {
                ytmp_ = y.adjoint();
                herm_defect = std::max(herm_defect, (y - ytmp_).cwiseAbs().maxCoeff());
                y = 0.5 * (y + ytmp_);
            }
        } else {
            // RK4 weakly damps the fastest components; renormalizing keeps
            // long runs honest and the worst single-step defect stays as the
            // accuracy monitor.
            if (renormalize_) {
                const double nm = y.norm();
                hyg_.trace_defect = std::max(hyg_.trace_defect, std::abs(nm - 1.0));
                y /= nm;
            }
        }
    }

    void record(double t, const State& y, EvolutionResult& res) {
        res.times.push_back(t);
        std::vector<double> row(obs_.ops.size());
        for (size_t j = 0; j < obs_.ops.size(); ++j) {
            if constexpr (std::is_same_v<State, Mat>)
                row[j] = std::real((obs_.ops[j].cwiseProduct(y.transpose())).sum());
            else
                row[j] = std::real(y.dot(obs_.ops[j] * y));
        }
        res.records.push_back(std::move(row));
        hyg_.look(y);
    }

    void keep_checkpoint(double t, const State& y, EvolutionResult& res) {
        (void)t;
        if constexpr (std::is_same_v<State, Mat>)
            res.checkpoint_states.push_back(y);
        else
            res.checkpoint_states.push_back(Mat(y));
    }

    void run_fixed(State& y, double t0, double t1, double dt, EvolutionResult& res) {
        const double span = t1 - t0;
        const long n = std::max(1L, long(std::ceil(span / dt - 1e-12)));
        const double h = span / double(n);
        for (long i = 0; i < n; ++i) {
            const double t = t0 + double(i) * h;
            // roundoff must not push the last node past t1 (and off a pulse edge)
            const double t_end = i + 1 == n ? t1 : t + h;
            rhs_(t, y, k1_);
            ytmp_ = y + (0.5 * h) * k1_;
            rhs_(t + 0.5 * h, ytmp_, k2_);
            ytmp_ = y + (0.5 * h) * k2_;
            rhs_(t + 0.5 * h, ytmp_, k3_);
            ytmp_ = y + h * k3_;
            rhs_(t_end, ytmp_, k4_);
            y += (h / 6.0) * (k1_ + 2.0 * k2_ + 2.0 * k3_ + k4_);
            post_step(y);
            ++res.steps_taken;
            if (opt_.record_every > 0 && res.steps_taken % opt_.record_every == 0 &&
                i + 1 < n)
                record(t + h, y, res);
        }
    }

    void run_adaptive(State& y, double t0, double t1, double& h_try, EvolutionResult& res) {
        double t = t0;
        double h = std::min(h_try, t1 - t0);
        int rejects_in_a_row = 0;
        while (t < t1 - 1e-18) {
            h = std::min(h, t1 - t);
            rhs_(t, y, k1_);
            ytmp_ = y + h * (A21 * k1_);
            rhs_(t + C2 * h, ytmp_, k2_);
            ytmp_ = y + h * (A31 * k1_ + A32 * k2_);
            rhs_(t + C3 * h, ytmp_, k3_);
            ytmp_ = y + h * (A41 * k1_ + A42 * k2_ + A43 * k3_);
            rhs_(t + C4 * h, ytmp_, k4_);
            ytmp_ = y + h * (A51 * k1_ + A52 * k2_ + A53 * k3_ + A54 * k4_);
            rhs_(t + C5 * h, ytmp_, k5_);
            const double t_end = std::min(t + h, t1);
            ytmp_ = y + h * (A61 * k1_ + A62 * k2_ + A63 * k3_ + A64 * k4_ + A65 * k5_);
            rhs_(t_end, ytmp_, k6_);
            ynew_ = y + h * (B1 * k1_ + B3 * k3_ + B4 * k4_ + B5 * k5_ + B6 * k6_);
            rhs_(t_end, ynew_, ytmp_); // k7 for the error estimate
            yerr_ = h * (E1 * k1_ + E3 * k3_ + E4 * k4_ + E5 * k5_ + E6 * k6_ + E7 * ytmp_);
            const double err = error_norm(yerr_, y, ynew_, opt_.atol, opt_.rtol);
            if (err <= 1.0) {
                t += h;
                y = ynew_;
                post_step(y);
                ++res.steps_taken;
                rejects_in_a_row = 0;
                if (opt_.record_every > 0 && res.steps_taken % opt_.record_every == 0 &&
                    t < t1 - 1e-18)
                    record(t, y, res);
            } else if (++rejects_in_a_row > 60) {
                throw std::runtime_error("rk45: step size collapsed");
            }
            const double fac =
                std::clamp(0.9 * std::pow(std::max(err, 1e-10), -0.2), 0.2, 5.0);
            h *= fac;
        }
        h_try = h;
    }

    Rhs rhs_;
    const ObservableSet& obs_;
    const EvolveOptions& opt_;
    HygieneTracker hyg_;
    bool symmetrize_;
    bool renormalize_;

public:
    double herm_defect = 0.0;

private:
    State k1_, k2_, k3_, k4_, k5_, k6_, ynew_, yerr_, ytmp_;
};

} // namespace

EvolutionResult evolve_ket(const HamiltonianModel& model, const Vec& psi0, double t1,
                           const ObservableSet& obs, const EvolveOptions& opt) {
    if (psi0.size() != model.layout.dim())
        throw std::invalid_argument("evolve_ket: state size does not match layout");

    const int d = model.layout.dim();
    Mat h(d, d);
    auto rhs = [&](double t, const Vec& y, Vec& out) {
        model.eval(t, h);
        out.noalias() = h * y;
        out *= cplx(0.0, -1.0);
    };

    // The ket path runs finer than the rho default: norm conservation is the
    // accuracy monitor here, so the integrator must keep it below trace_tol.
    const double dt = opt.dt > 0.0 ? opt.dt : 0.5 * default_dt(model);

    EvolutionResult res;
    Integrator<Vec> integ(rhs, obs, opt, model.layout, false, true);
    Vec psi = psi0;
    integ.run(psi, opt.t0, t1, dt, res);
    res.final_psi = std::move(psi);
    res.min_eig_final = 0.0;
    integ.hygiene().finish(res);
    return res;
}

EvolutionResult evolve_rho(const HamiltonianModel& model, const DissipatorSet& diss,
                           const Mat& rho0, double t1, const ObservableSet& obs,
                           const EvolveOptions& opt) {
    const int d = model.layout.dim();
    if (rho0.rows() != d || rho0.cols() != d)
        throw std::invalid_argument("evolve_rho: state size does not match layout");

    // Fold the anticommutator into an effective non-Hermitian Hamiltonian:
    // rhs = -i Heff rho + i rho Heff† + sum L rho L†, Heff = H - i/2 sum L†L.
    Mat damp = Mat::Zero(d, d);
    for (const Mat& l : diss.ops) damp.noalias() += l.adjoint() * l;
    damp *= cplx(0.0, -0.5);

    Mat h(d, d), heff(d, d), jump(d, d), tmp(d, d);
    auto rhs = [&](double t, const Mat& y, Mat& out) {
        model.eval(t, h);
        heff = h + damp;
        out.noalias() = heff * y;
        out *= cplx(0.0, -1.0);
        tmp.noalias() = y * heff.adjoint();
        out.noalias() += cplx(0.0, 1.0) * tmp;
        for (const Mat& l : diss.ops) {
            jump.noalias() = l * y;
            out.noalias() += jump * l.adjoint();
        }
    };

    const double dt = opt.dt > 0.0 ? opt.dt : default_dt(model);

    EvolutionResult res;
    Integrator<Mat> integ(rhs, obs, opt, model.layout, opt.symmetrize, false);
    Mat rho = rho0;
    integ.run(rho, opt.t0, t1, dt, res);
    Eigen::SelfAdjointEigenSolver<Mat> es(rho, Eigen::EigenvaluesOnly);
    res.min_eig_final = es.eigenvalues().minCoeff();
    res.herm_defect = integ.herm_defect;
    res.final_rho = std::move(rho);
    integ.hygiene().finish(res);
    return res;
}

std::vector<double> expectation_series(const EvolutionResult& res, const std::string& label,
                                       const ObservableSet& obs) {
    for (int j = 0; j < obs.size(); ++j)
        if (obs.labels[j] == label) {
            std::vector<double> out(res.records.size());
            for (size_t i = 0; i < res.records.size(); ++i) out[i] = res.records[i][j];
            return out;
        }
    throw std::invalid_argument("expectation_series: no observable labeled " + label);
}

} // namespace star
