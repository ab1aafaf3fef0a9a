#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace suscept::stats {

struct CorrelationResult {
    double coefficient = 0.0;
    double p_value = 1.0;
    std::size_t n = 0;
};

struct OlsFit {
    double beta0 = 0.0;
    double beta1 = 0.0;
    double r2 = 0.0;
    double se_beta0 = 0.0;
    double se_beta1 = 0.0;
    double p_beta0 = 1.0;
    double p_beta1 = 1.0;
    std::size_t n = 0;
};

/// Sample Pearson correlation with a two-sided t-test p-value (n-2 dof).
/// Throws DataError on length mismatch, n < 3, or a constant input vector.
CorrelationResult pearson(std::span<const double> x, std::span<const double> y);

/// Spearman rank correlation: Pearson on mid-ranks, exact under ties.
CorrelationResult spearman(std::span<const double> x, std::span<const double> y);

/// Simple least squares y = beta0 + beta1 * x with coefficient t-tests.
OlsFit ols_simple(std::span<const double> x, std::span<const double> y);

/// Mid-ranks (1-based, ties averaged).
std::vector<double> midranks(std::span<const double> v);

/// Regularized incomplete beta function I_x(a, b).
double incbeta(double a, double b, double x);

/// Two-sided p-value for a Student-t statistic with `dof` degrees of freedom.
double student_t_two_sided_p(double t, double dof);

/// Log gamma via a 15-term Lanczos expansion (thread-safe, ~1e-14 relative).
double log_gamma(double x);

}  // namespace suscept::stats
