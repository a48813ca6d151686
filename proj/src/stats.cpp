#include "epitrend/stats.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "epitrend/errors.hpp"

namespace epitrend::stats {

namespace {

constexpr int kMaxIter = 500;
constexpr double kEps = 1e-16;
constexpr double kFpMin = std::numeric_limits<double>::min() / kEps;

// Lower incomplete gamma by its series representation,
// gamma(a,x) = e^{-x} x^a sum_n x^n Gamma(a)/Gamma(a+1+n).
double gamma_p_series(double a, double x) {
    double ap = a;
    double sum = 1.0 / a;
    double del = sum;
    for (int n = 0; n < kMaxIter; ++n) {
        ++ap;
        del *= x / ap;
        sum += del;
        if (std::fabs(del) < std::fabs(sum) * kEps)
            break;
    }
    return sum * std::exp(-x + a * std::log(x) - std::lgamma(a));
}

// Upper incomplete gamma by the Lentz continued fraction.
double gamma_q_cf(double a, double x) {
    double b = x + 1.0 - a;
    double c = 1.0 / kFpMin;
    double d = 1.0 / b;
    double h = d;
    for (int i = 1; i <= kMaxIter; ++i) {
        const double an = -i * (i - a);
        b += 2.0;
        d = an * d + b;
        if (std::fabs(d) < kFpMin) d = kFpMin;
        c = b + an / c;
        if (std::fabs(c) < kFpMin) c = kFpMin;
        d = 1.0 / d;
        const double del = d * c;
        h *= del;
        if (std::fabs(del - 1.0) < kEps)
            break;
    }
    return std::exp(-x + a * std::log(x) - std::lgamma(a)) * h;
}

}  // namespace

double gamma_p(double a, double x) {
    if (!(a > 0.0) || x < 0.0)
        throw std::invalid_argument("gamma_p requires a > 0 and x >= 0");
    if (x == 0.0) return 0.0;
    return x < a + 1.0 ? gamma_p_series(a, x) : 1.0 - gamma_q_cf(a, x);
}

double gamma_q(double a, double x) {
    if (!(a > 0.0) || x < 0.0)
        throw std::invalid_argument("gamma_q requires a > 0 and x >= 0");
    if (x == 0.0) return 1.0;
    return x < a + 1.0 ? 1.0 - gamma_p_series(a, x) : gamma_q_cf(a, x);
}

double gamma_cdf(double x, double shape, double rate) {
    if (x <= 0.0) return 0.0;
    return gamma_p(shape, rate * x);
}

double chi_square_sf(double x, double df) {
    if (x <= 0.0) return 1.0;
    return gamma_q(0.5 * df, 0.5 * x);
}

double chi_square_quantile(double p, double df) {
    if (p <= 0.0 || p >= 1.0)
        throw std::invalid_argument("chi_square_quantile requires 0 < p < 1");
    double lo = 0.0, hi = df + 10.0;
    while (1.0 - chi_square_sf(hi, df) < p) hi *= 2.0;
    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo + hi);
        (1.0 - chi_square_sf(mid, df) < p ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

double mean(std::span<const double> x) {
    double s = 0.0;
    for (double v : x) s += v;
    return x.empty() ? 0.0 : s / static_cast<double>(x.size());
}

double variance(std::span<const double> x) {
    const double m = mean(x);
    double s = 0.0;
    for (double v : x) s += (v - m) * (v - m);
    return x.empty() ? 0.0 : s / static_cast<double>(x.size());
}

std::vector<double> sample_acf(std::span<const double> x, int max_lag) {
    const int n = static_cast<int>(x.size());
    if (max_lag >= n)
        throw std::invalid_argument("sample_acf requires max_lag < n");
    const double m = mean(x);
    double c0 = 0.0;
    for (double v : x) c0 += (v - m) * (v - m);
    if (c0 <= 0.0)
        throw DegenerateResidualError("zero-variance series has no autocorrelations");
    std::vector<double> rho(static_cast<std::size_t>(max_lag) + 1, 1.0);
    for (int k = 1; k <= max_lag; ++k) {
        double ck = 0.0;
        for (int t = k; t < n; ++t)
            ck += (x[static_cast<std::size_t>(t)] - m) * (x[static_cast<std::size_t>(t - k)] - m);
        rho[static_cast<std::size_t>(k)] = ck / c0;
    }
    return rho;
}

}  // namespace epitrend::stats
