#include "epitrend/optimize.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace epitrend::optimize {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double safe_eval(const Objective& f, const std::vector<double>& x, int& evals) {
    ++evals;
    const double v = f(x);
    return std::isfinite(v) ? v : kInf;
}

bool rel_converged(double f_new, double f_old, double tol) {
    return std::fabs(f_new - f_old) <= tol * (std::fabs(f_old) + std::fabs(f_new) + 1e-12);
}

std::vector<double> gradient(const Objective& f, const std::vector<double>& x, double fx,
                             int& evals) {
    const std::size_t n = x.size();
    std::vector<double> g(n), xp = x;
    for (std::size_t i = 0; i < n; ++i) {
        const double h = 1e-6 * std::max(1.0, std::fabs(x[i]));
        xp[i] = x[i] + h;
        const double fp = safe_eval(f, xp, evals);
        xp[i] = x[i] - h;
        const double fm = safe_eval(f, xp, evals);
        xp[i] = x[i];
        if (std::isfinite(fp) && std::isfinite(fm)) {
            g[i] = (fp - fm) / (2.0 * h);
        } else if (std::isfinite(fp)) {
            g[i] = (fp - fx) / h;
        } else if (std::isfinite(fm)) {
            g[i] = (fx - fm) / h;
        } else {
            g[i] = 0.0;
        }
    }
    return g;
}

}  // namespace

Result nelder_mead(const Objective& f, std::vector<double> x0, const Options& opts) {
    const std::size_t n = x0.size();
    Result res;
    if (n == 0) {
        res.x = std::move(x0);
        res.fx = safe_eval(f, res.x, res.evaluations);
        res.converged = true;
        return res;
    }

    // Reflection/expansion/contraction/shrink coefficients.
    const double alpha = 1.0, gamma = 2.0, rho = 0.5, sigma = 0.5;

    std::vector<std::vector<double>> simplex(n + 1, x0);
    std::vector<double> fv(n + 1);
    for (std::size_t i = 0; i < n; ++i) {
        double& c = simplex[i + 1][i];
        c += (c != 0.0) ? opts.initial_step * std::fabs(c) : 0.25 * opts.initial_step;
    }
    for (std::size_t i = 0; i <= n; ++i) fv[i] = safe_eval(f, simplex[i], res.evaluations);

    std::vector<std::size_t> order(n + 1);
    std::vector<double> centroid(n), xr(n), xe(n), xc(n);

    for (res.iterations = 0; res.iterations < opts.max_iter; ++res.iterations) {
        std::iota(order.begin(), order.end(), std::size_t{0});
        std::sort(order.begin(), order.end(),
                  [&](std::size_t a, std::size_t b) { return fv[a] < fv[b]; });
        const std::size_t best = order[0], worst = order[n], second = order[n - 1];

        if (std::isfinite(fv[worst]) && rel_converged(fv[worst], fv[best], opts.ftol_rel)) {
            res.converged = true;
            break;
        }

        std::fill(centroid.begin(), centroid.end(), 0.0);
        for (std::size_t i = 0; i <= n; ++i) {
            if (i == worst) continue;
            for (std::size_t j = 0; j < n; ++j) centroid[j] += simplex[i][j];
        }
        for (double& c : centroid) c /= static_cast<double>(n);

        for (std::size_t j = 0; j < n; ++j)
            xr[j] = centroid[j] + alpha * (centroid[j] - simplex[worst][j]);
        const double fr = safe_eval(f, xr, res.evaluations);

        if (fr < fv[best]) {
            for (std::size_t j = 0; j < n; ++j)
                xe[j] = centroid[j] + gamma * (xr[j] - centroid[j]);
            const double fe = safe_eval(f, xe, res.evaluations);
            if (fe < fr) {
                simplex[worst] = xe;
                fv[worst] = fe;
            } else {
                simplex[worst] = xr;
                fv[worst] = fr;
            }
        } else if (fr < fv[second]) {
            simplex[worst] = xr;
            fv[worst] = fr;
        } else {
            const bool outside = fr < fv[worst];
            const std::vector<double>& towards = outside ? xr : simplex[worst];
            for (std::size_t j = 0; j < n; ++j)
                xc[j] = centroid[j] + rho * (towards[j] - centroid[j]);
            const double fc = safe_eval(f, xc, res.evaluations);
            if (fc < (outside ? fr : fv[worst])) {
                simplex[worst] = xc;
                fv[worst] = fc;
            } else {
                for (std::size_t i = 0; i <= n; ++i) {
                    if (i == best) continue;
                    for (std::size_t j = 0; j < n; ++j)
                        simplex[i][j] = simplex[best][j] + sigma * (simplex[i][j] - simplex[best][j]);
                    fv[i] = safe_eval(f, simplex[i], res.evaluations);
                }
            }
        }
    }

    const std::size_t best =
        static_cast<std::size_t>(std::min_element(fv.begin(), fv.end()) - fv.begin());
    res.x = simplex[best];
    res.fx = fv[best];
    return res;
}

Result bfgs(const Objective& f, std::vector<double> x0, const Options& opts) {
    const std::size_t n = x0.size();
    Result res;
    res.x = std::move(x0);
    res.fx = safe_eval(f, res.x, res.evaluations);
    if (n == 0 || !std::isfinite(res.fx)) {
        res.converged = std::isfinite(res.fx);
        return res;
    }

    // Inverse Hessian approximation, kept as a dense row-major matrix.
    std::vector<double> H(n * n, 0.0);
    for (std::size_t i = 0; i < n; ++i) H[i * n + i] = 1.0;

    std::vector<double> g = gradient(f, res.x, res.fx, res.evaluations);
    std::vector<double> dir(n), x_new(n), g_new(n), s(n), y(n), Hy(n);

    for (res.iterations = 0; res.iterations < opts.max_iter; ++res.iterations) {
        for (std::size_t i = 0; i < n; ++i) {
            double d = 0.0;
            for (std::size_t j = 0; j < n; ++j) d -= H[i * n + j] * g[j];
            dir[i] = d;
        }
        double slope = std::inner_product(dir.begin(), dir.end(), g.begin(), 0.0);
        if (slope >= 0.0) {  // reset to steepest descent if H lost positive-definiteness
            std::fill(H.begin(), H.end(), 0.0);
            for (std::size_t i = 0; i < n; ++i) H[i * n + i] = 1.0;
            for (std::size_t i = 0; i < n; ++i) dir[i] = -g[i];
            slope = -std::inner_product(g.begin(), g.end(), g.begin(), 0.0);
            if (slope == 0.0) {
                res.converged = true;
                break;
            }
        }

        double step = 1.0;
        double f_new = kInf;
        bool accepted = false;
        for (int ls = 0; ls < 40; ++ls) {
            for (std::size_t i = 0; i < n; ++i) x_new[i] = res.x[i] + step * dir[i];
            f_new = safe_eval(f, x_new, res.evaluations);
            if (f_new <= res.fx + 1e-4 * step * slope) {
                accepted = true;
                break;
            }
            step *= 0.5;
        }
        if (!accepted) break;  // no descent achievable along dir

        g_new = gradient(f, x_new, f_new, res.evaluations);
        for (std::size_t i = 0; i < n; ++i) {
            s[i] = x_new[i] - res.x[i];
            y[i] = g_new[i] - g[i];
        }
        const double sy = std::inner_product(s.begin(), s.end(), y.begin(), 0.0);
        const bool done = rel_converged(f_new, res.fx, opts.ftol_rel);
        res.x = x_new;
        g = g_new;
        const double f_old = res.fx;
        res.fx = f_new;
        (void)f_old;
        if (done) {
            res.converged = true;
            break;
        }
        if (sy > 1e-12) {
            for (std::size_t i = 0; i < n; ++i) {
                double acc = 0.0;
                for (std::size_t j = 0; j < n; ++j) acc += H[i * n + j] * y[j];
                Hy[i] = acc;
            }
            const double yHy = std::inner_product(y.begin(), y.end(), Hy.begin(), 0.0);
            const double c1 = (sy + yHy) / (sy * sy);
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j)
                    H[i * n + j] += c1 * s[i] * s[j] - (Hy[i] * s[j] + s[i] * Hy[j]) / sy;
        }
    }
    return res;
}

}  // namespace epitrend::optimize
