#include "suscept/stats.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "suscept/common.hpp"

namespace suscept::stats {

namespace {

constexpr double kLanczosG = 4.7421875;  // 607/128
constexpr double kLanczos[15] = {
    0.99999999999999709182,     57.156235665862923517,     -59.597960355475491248,
    14.136097974741747174,      -0.49191381609762019978,   0.33994649984811888699e-4,
    0.46523628927048575665e-4,  -0.98374475304879564677e-4, 0.15808870322491248884e-3,
    -0.21026444172410488319e-3, 0.21743961811521264320e-3, -0.16431810653676389022e-3,
    0.84418223983852743293e-4,  -0.26190838401581408670e-4, 0.36899182659531622704e-5,
};

constexpr double kLog2Pi = 1.8378770664093454836;

void check_pair(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size()) throw DataError("correlation: input length mismatch");
    if (x.size() < 3) throw DataError("correlation: need at least 3 observations");
}

bool is_constant(std::span<const double> v) {
    for (std::size_t i = 1; i < v.size(); ++i) {
        if (v[i] != v[0]) return false;
    }
    return true;
}

// Continued fraction for incbeta, modified Lentz.
double incbeta_cf(double a, double b, double x) {
    constexpr double kEps = 1e-15;
    constexpr double kFpMin = 1e-300;
    constexpr int kMaxIter = 500;

    const double qab = a + b;
    const double qap = a + 1.0;
    const double qam = a - 1.0;
    double c = 1.0;
    double d = 1.0 - qab * x / qap;
    if (std::fabs(d) < kFpMin) d = kFpMin;
    d = 1.0 / d;
    double h = d;
    for (int m = 1; m <= kMaxIter; ++m) {
        const int m2 = 2 * m;
        double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
        d = 1.0 + aa * d;
        if (std::fabs(d) < kFpMin) d = kFpMin;
        c = 1.0 + aa / c;
        if (std::fabs(c) < kFpMin) c = kFpMin;
        d = 1.0 / d;
        h *= d * c;
        aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
        d = 1.0 + aa * d;
        if (std::fabs(d) < kFpMin) d = kFpMin;
        c = 1.0 + aa / c;
        if (std::fabs(c) < kFpMin) c = kFpMin;
        d = 1.0 / d;
        const double del = d * c;
        h *= del;
        if (std::fabs(del - 1.0) < kEps) return h;
    }
    throw InternalError("incbeta: continued fraction did not converge");
}

double correlation_p(double r, std::size_t n) {
    const double dof = static_cast<double>(n - 2);
    const double denom = (1.0 - r) * (1.0 + r);
    if (denom <= 0.0) return 0.0;
    const double t = r * std::sqrt(dof / denom);
    return student_t_two_sided_p(t, dof);
}

}  // namespace

double log_gamma(double x) {
    if (!(x > 0.0)) throw InternalError("log_gamma: argument must be positive");
    if (x < 0.5) {
        // Reflection; sin(pi*x) > 0 on (0, 0.5).
        return std::log(M_PI / std::sin(M_PI * x)) - log_gamma(1.0 - x);
    }
    double acc = kLanczos[0];
    for (int k = 1; k < 15; ++k) acc += kLanczos[k] / (x - 1.0 + k);
    const double t = x + kLanczosG - 0.5;
    return 0.5 * kLog2Pi + (x - 0.5) * std::log(t) - t + std::log(acc);
}

double incbeta(double a, double b, double x) {
    if (!(a > 0.0) || !(b > 0.0)) throw InternalError("incbeta: a and b must be positive");
    if (std::isnan(x)) throw InternalError("incbeta: x is NaN");
    if (x <= 0.0) return 0.0;
    if (x >= 1.0) return 1.0;
    const double log_bt = log_gamma(a + b) - log_gamma(a) - log_gamma(b) +
                          a * std::log(x) + b * std::log1p(-x);
    const double bt = std::exp(log_bt);
    if (x < (a + 1.0) / (a + b + 2.0)) {
        return bt * incbeta_cf(a, b, x) / a;
    }
    return 1.0 - bt * incbeta_cf(b, a, 1.0 - x) / b;
}

double student_t_two_sided_p(double t, double dof) {
    if (dof <= 0.0) throw InternalError("student_t_two_sided_p: dof must be positive");
    if (std::isinf(t)) return 0.0;
    // 2*P(T > |t|) collapses to a single incomplete beta evaluation.
    return incbeta(0.5 * dof, 0.5, dof / (dof + t * t));
}

CorrelationResult pearson(std::span<const double> x, std::span<const double> y) {
    check_pair(x, y);
    if (is_constant(x) || is_constant(y)) throw DataError("pearson: constant input vector");

    const std::size_t n = x.size();
    long double mx = 0.0L, my = 0.0L;
    for (std::size_t i = 0; i < n; ++i) {
        mx += x[i];
        my += y[i];
    }
    mx /= n;
    my /= n;
    long double sxy = 0.0L, sxx = 0.0L, syy = 0.0L;
    for (std::size_t i = 0; i < n; ++i) {
        const long double dx = x[i] - mx;
        const long double dy = y[i] - my;
        sxy += dx * dy;
        sxx += dx * dx;
        syy += dy * dy;
    }
    double r = static_cast<double>(sxy / std::sqrt(sxx * syy));
    r = std::clamp(r, -1.0, 1.0);
    return {r, correlation_p(r, n), n};
}

std::vector<double> midranks(std::span<const double> v) {
    const std::size_t n = v.size();
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return v[a] < v[b]; });
    std::vector<double> ranks(n);
    std::size_t i = 0;
    while (i < n) {
        std::size_t j = i;
        while (j + 1 < n && v[order[j + 1]] == v[order[i]]) ++j;
        const double mid = 0.5 * (static_cast<double>(i + 1) + static_cast<double>(j + 1));
        for (std::size_t k = i; k <= j; ++k) ranks[order[k]] = mid;
        i = j + 1;
    }
    return ranks;
}

CorrelationResult spearman(std::span<const double> x, std::span<const double> y) {
    check_pair(x, y);
    if (is_constant(x) || is_constant(y)) throw DataError("spearman: constant input vector");
    const auto rx = midranks(x);
    const auto ry = midranks(y);
    return pearson(rx, ry);
}

OlsFit ols_simple(std::span<const double> x, std::span<const double> y) {
    check_pair(x, y);
    if (is_constant(x)) throw DataError("ols_simple: constant regressor");

    const std::size_t n = x.size();
    long double mx = 0.0L, my = 0.0L;
    for (std::size_t i = 0; i < n; ++i) {
        mx += x[i];
        my += y[i];
    }
    mx /= n;
    my /= n;
    long double sxx = 0.0L, sxy = 0.0L, syy = 0.0L;
    for (std::size_t i = 0; i < n; ++i) {
        const long double dx = x[i] - mx;
        const long double dy = y[i] - my;
        sxx += dx * dx;
        sxy += dx * dy;
        syy += dy * dy;
    }

    OlsFit fit;
    fit.n = n;
    fit.beta1 = static_cast<double>(sxy / sxx);
    fit.beta0 = static_cast<double>(my - (sxy / sxx) * mx);

    long double sse = 0.0L;
    for (std::size_t i = 0; i < n; ++i) {
        const long double r = y[i] - (fit.beta0 + fit.beta1 * x[i]);
        sse += r * r;
    }
    const long double sst = syy;
    fit.r2 = sst > 0.0L ? static_cast<double>(1.0L - sse / sst) : 0.0;

    const double dof = static_cast<double>(n - 2);
    const double sigma2 = static_cast<double>(sse) / dof;
    fit.se_beta1 = std::sqrt(sigma2 / static_cast<double>(sxx));
    fit.se_beta0 = std::sqrt(sigma2 * (1.0 / n + static_cast<double>(mx * mx / sxx)));

    auto coeff_p = [&](double beta, double se) {
        if (se == 0.0) return beta == 0.0 ? 1.0 : 0.0;
        return student_t_two_sided_p(beta / se, dof);
    };
    fit.p_beta0 = coeff_p(fit.beta0, fit.se_beta0);
    fit.p_beta1 = coeff_p(fit.beta1, fit.se_beta1);
    return fit;
}

}  // namespace suscept::stats
