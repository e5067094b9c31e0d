#include "fitting.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace star {

static RMat numeric_jacobian(const std::function<RVec(const RVec&)>& f, const RVec& x,
                             const RVec& r0) {
    RMat jac(r0.size(), x.size());
    for (Eigen::Index j = 0; j < x.size(); ++j) {
        double h = 1e-7 * std::max(1.0, std::abs(x(j)));
        RVec xp = x;
        xp(j) += h;
        jac.col(j) = (f(xp) - r0) / h;
    }
    return jac;
}

FitResult fit_lm(const std::function<RVec(const RVec&)>& residual, RVec x0, int max_iter,
                 double tol) {
    FitResult out;
    out.model = "lm";
    RVec x = x0;
    RVec r = residual(x);
    double cost = r.squaredNorm();
    double lambda = 1e-3;
    bool converged = false;
    for (int it = 0; it < max_iter; ++it) {
        RMat jac = numeric_jacobian(residual, x, r);
        RMat jtj = jac.transpose() * jac;
        RVec g = jac.transpose() * r;
        if (g.lpNorm<Eigen::Infinity>() < tol) { converged = true; break; }
        bool stepped = false;
        for (int tries = 0; tries < 12; ++tries) {
            RMat m = jtj;
            m.diagonal() += lambda * jtj.diagonal().cwiseMax(1e-12);
            RVec dx = m.ldlt().solve(-g);
            RVec xn = x + dx;
            RVec rn = residual(xn);
            double cn = rn.squaredNorm();
            if (cn < cost) {
                double rel = (cost - cn) / std::max(cost, 1e-300);
                x = xn;
                r = rn;
                cost = cn;
                lambda = std::max(lambda * 0.3, 1e-12);
                stepped = true;
                if (rel < 1e-12 || dx.lpNorm<Eigen::Infinity>() < tol) converged = true;
                break;
            }
            lambda *= 4.0;
        }
        if (!stepped || converged) {
            converged = converged || !stepped; // stall at a minimum counts as done
            break;
        }
    }
    out.params = x;
    out.residual_norm = std::sqrt(cost);
    out.converged = converged;

    // uncertainty estimate from the local quadratic model
    RVec rb = residual(x);
    RMat jac = numeric_jacobian(residual, x, rb);
    RMat jtj = jac.transpose() * jac;
    Eigen::Index dof = rb.size() - x.size();
    double s2 = dof > 0 ? rb.squaredNorm() / double(dof) : 0.0;
    RMat cov = jtj.completeOrthogonalDecomposition().pseudoInverse() * s2;
    out.sigmas = cov.diagonal().cwiseMax(0.0).cwiseSqrt();
    return out;
}

// Discrete Fourier magnitude on the uniform grid; small series, direct sum.
static void dft_peak(const std::vector<double>& ts, const std::vector<double>& ys, double mean,
                     double& f_peak, double& amp, double& phase) {
    size_t n = ys.size();
    double dt = (ts.back() - ts.front()) / double(n - 1);
    double best = -1.0;
    f_peak = 0.0;
    cplx best_sum = 0.0;
    for (size_t k = 1; k <= n / 2; ++k) {
        double f = double(k) / (double(n) * dt);
        cplx s = 0.0;
        for (size_t i = 0; i < n; ++i)
            s += (ys[i] - mean) * std::exp(cplx(0.0, -kTau * f * (ts[i] - ts.front())));
        if (std::abs(s) > best) {
            best = std::abs(s);
            best_sum = s;
            f_peak = f;
        }
    }
    amp = 2.0 * best / double(n);
    // y ~ A cos(w t + phi): DFT at +f picks (A/2) e^{i phi} (t measured from ts.front())
    phase = std::arg(best_sum) - kTau * f_peak * 0.0;
}

FitResult fit_damped_cosine(const std::vector<double>& ts, const std::vector<double>& ys) {
    if (ts.size() != ys.size() || ts.size() < 8)
        throw std::invalid_argument("fit_damped_cosine: need >= 8 samples");
    size_t n = ys.size();
    double mean = 0.0;
    for (double y : ys) mean += y;
    mean /= double(n);
    double var = 0.0;
    for (double y : ys) var += (y - mean) * (y - mean);
    double sd = std::sqrt(var / double(n));

    FitResult flagged;
    flagged.model = "damped_cosine";
    if (sd < 1e-12 * std::max(1.0, std::abs(mean))) {
        flagged.params = RVec::Zero(5);
        flagged.params(4) = mean;
        flagged.sigmas = RVec::Zero(5);
        flagged.converged = false;
        flagged.note = "degenerate series: no oscillation to fit";
        return flagged;
    }

    double f0, a0, ph0;
    dft_peak(ts, ys, mean, f0, a0, ph0);

    // log-envelope regression on one-period maxima of |y - mean|
    double gamma0 = 0.0;
    {
        double period = 1.0 / f0;
        double t_start = ts.front();
        std::vector<double> env_t, env_v;
        size_t i = 0;
        while (i < n) {
            double t_end = t_start + period;
            double peak = 0.0, tp = ts[i];
            size_t j = i;
            for (; j < n && ts[j] < t_end; ++j)
                if (std::abs(ys[j] - mean) > peak) { peak = std::abs(ys[j] - mean); tp = ts[j]; }
            if (peak > 1e-3 * a0) { env_t.push_back(tp); env_v.push_back(std::log(peak)); }
            i = j;
            t_start = t_end;
        }
        if (env_t.size() >= 3) {
            FitResult line = fit_line(env_t, env_v);
            gamma0 = std::max(0.0, -line.params(0));
        }
    }

    auto residual = [&](const RVec& p) {
        RVec r(n);
        for (size_t i = 0; i < n; ++i) {
            double t = ts[i] - ts.front();
            r(i) = p(0) * std::exp(-p(1) * t) * std::cos(kTau * p(2) * t + p(3)) + p(4) - ys[i];
        }
        return r;
    };
    RVec x0(5);
    x0 << a0, gamma0, f0, ph0, mean;
    FitResult fit = fit_lm(residual, x0);
    fit.model = "damped_cosine";
    // canonical form: positive amplitude, frequency and phase in principal range
    if (fit.params(0) < 0) {
        fit.params(0) = -fit.params(0);
        fit.params(3) += kPi;
    }
    if (fit.params(2) < 0) {
        fit.params(2) = -fit.params(2);
        fit.params(3) = -fit.params(3);
    }
    fit.params(3) = std::remainder(fit.params(3), kTau);
    if (std::abs(fit.params(0)) < 1e-10 * std::max(1.0, sd)) {
        fit.converged = false;
        fit.note = "amplitude consistent with zero: frequency unidentifiable";
    }
    return fit;
}

FitResult fit_line(const std::vector<double>& xs, const std::vector<double>& ys) {
    if (xs.size() != ys.size() || xs.size() < 2)
        throw std::invalid_argument("fit_line: need >= 2 points");
    size_t n = xs.size();
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (size_t i = 0; i < n; ++i) {
        sx += xs[i];
        sy += ys[i];
        sxx += xs[i] * xs[i];
        sxy += xs[i] * ys[i];
    }
    double denom = double(n) * sxx - sx * sx;
    if (std::abs(denom) < 1e-300) throw std::invalid_argument("fit_line: degenerate x grid");
    double a = (double(n) * sxy - sx * sy) / denom;
    double b = (sy - a * sx) / double(n);
    double ss = 0.0;
    for (size_t i = 0; i < n; ++i) {
        double r = a * xs[i] + b - ys[i];
        ss += r * r;
    }
    FitResult out;
    out.model = "line";
    out.params = RVec(2);
    out.params << a, b;
    double s2 = n > 2 ? ss / double(n - 2) : 0.0;
    out.sigmas = RVec(2);
    out.sigmas << std::sqrt(std::max(0.0, s2 * double(n) / denom)),
        std::sqrt(std::max(0.0, s2 * sxx / denom));
    out.residual_norm = std::sqrt(ss);
    out.converged = true;
    return out;
}

FitResult fit_hyperbola(const std::vector<double>& ds, const std::vector<double>& fs) {
    if (ds.size() != fs.size() || ds.size() < 3)
        throw std::invalid_argument("fit_hyperbola: need >= 3 points");
    size_t imin = 0;
    for (size_t i = 1; i < fs.size(); ++i)
        if (fs[i] < fs[imin]) imin = i;
    auto residual = [&](const RVec& p) {
        RVec r(ds.size());
        for (size_t i = 0; i < ds.size(); ++i)
            r(i) = std::sqrt(p(0) * p(0) + (ds[i] - p(1)) * (ds[i] - p(1))) - fs[i];
        return r;
    };
    RVec x0(2);
    x0 << std::max(fs[imin], 1e-12), ds[imin];
    FitResult fit = fit_lm(residual, x0);
    fit.model = "hyperbola";
    fit.params(0) = std::abs(fit.params(0));
    return fit;
}

} // namespace star
