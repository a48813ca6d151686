#pragma once

#include <functional>
#include <vector>

namespace epitrend::optimize {

using Objective = std::function<double(const std::vector<double>&)>;

struct Options {
    int max_iter = 500;
    double ftol_rel = 1e-8;  // relative change of the objective
    double initial_step = 0.1;
};

struct Result {
    std::vector<double> x;
    double fx = 0.0;
    int iterations = 0;
    int evaluations = 0;
    bool converged = false;
};

/// Derivative-free downhill simplex (Nelder-Mead, Lagarias coefficients).
Result nelder_mead(const Objective& f, std::vector<double> x0, const Options& opts = {});

/// BFGS with a numerical central-difference gradient and Armijo
/// backtracking line search. Intended as a polish step from a point
/// already near the optimum.
Result bfgs(const Objective& f, std::vector<double> x0, const Options& opts = {});

}  // namespace epitrend::optimize
