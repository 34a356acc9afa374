#pragma once

#include <cmath>
#include <vector>

#include "errors.hpp"
#include "functions.hpp"
#include "kernel.hpp"
#include "quadrature.hpp"

namespace fracineq {

struct FracIntegralValue {
    double value;
    double est_error;
    int panels_used;
};

enum class Side { left, right };

namespace detail {

// The kernel mass concentrates in a layer of width alpha/(1-alpha) at the
// evaluation endpoint; seeding panel boundaries at j*ln(10) decay lengths
// resolves it before adaptivity starts (uniform initial panels miss the
// layer once A is large).
inline void add_layer_seeds(std::vector<double>& seeds, double endpoint, double rate, int sign) {
    if (rate <= 0.0) return;
    constexpr double ln10 = 2.302585092994045684;
    for (int j = 1; j <= 4; ++j) seeds.push_back(endpoint + sign * j * ln10 / rate);
}

template <class F>
FracIntegralValue frac_integral_impl(F&& u, FracOrder order, double lo, double hi,
                                     double eval_point, const QuadratureConfig& cfg,
                                     std::vector<double> seeds) {
    const double rate = kernel_decay_rate(order);
    add_layer_seeds(seeds, eval_point, rate, eval_point == hi ? -1 : +1);
    auto integrand = [&u, rate, eval_point](double s) {
        return std::exp(-rate * std::fabs(eval_point - s)) * u(s);
    };
    // the 1/alpha prefactor scales the error estimate too, so the raw
    // integration must hit an alpha-tightened absolute target
    QuadratureConfig qc = cfg;
    qc.abs_tol = cfg.abs_tol * order.alpha;
    const IntegralEstimate r = integrate_adaptive(integrand, lo, hi, qc, seeds);
    const double inv_alpha = 1.0 / order.alpha;
    return {r.value * inv_alpha, r.est_error * inv_alpha, r.panels};
}

}  // namespace detail

/// Left fractional integral (1/alpha) Int_a^x exp(-(1-alpha)/alpha (x-s)) u(s) ds.
/// At alpha = 1 this is the plain integral of u over [a, x].
template <class F>
FracIntegralValue left_integral(F&& u, FracOrder order, double a, double x,
                                const QuadratureConfig& cfg, std::vector<double> seeds = {}) {
    if (!(x > a)) throw DomainError("left integral requires x > a");
    return detail::frac_integral_impl(std::forward<F>(u), order, a, x, x, cfg, std::move(seeds));
}

/// Right fractional integral (1/alpha) Int_x^b exp(-(1-alpha)/alpha (s-x)) u(s) ds.
template <class F>
FracIntegralValue right_integral(F&& u, FracOrder order, double x, double b,
                                 const QuadratureConfig& cfg, std::vector<double> seeds = {}) {
    if (!(x < b)) throw DomainError("right integral requires x < b");
    return detail::frac_integral_impl(std::forward<F>(u), order, x, b, x, cfg, std::move(seeds));
}

inline FracIntegralValue left_integral(const FunctionSpec& u, FracOrder order, double a, double x,
                                       const QuadratureConfig& cfg) {
    return left_integral([&u](double s) { return u(s); }, order, a, x, cfg, u.kinks());
}

inline FracIntegralValue right_integral(const FunctionSpec& u, FracOrder order, double x, double b,
                                        const QuadratureConfig& cfg) {
    return right_integral([&u](double s) { return u(s); }, order, x, b, cfg, u.kinks());
}

namespace detail {

/// Moments M_j = Int_0^1 t^j e^{-A t} dt for j = 0..n, evaluated by series
/// for A < 4 (alternating, factorially convergent there) and by the forward
/// recurrence above it, where division by A keeps it stable.
inline void exp_moments(double A, int n, double* m) {
    if (A < 4.0) {
        for (int j = 0; j <= n; ++j) {
            double term = 1.0;  // (-A)^k / k!
            double sum = 1.0 / (j + 1);
            for (int k = 1; k < 80; ++k) {
                term *= -A / k;
                const double incr = term / (j + k + 1);
                sum += incr;
                if (std::fabs(incr) < 1e-18 * std::fabs(sum)) break;
            }
            m[j] = sum;
        }
        return;
    }
    const double e1 = std::exp(-A);
    m[0] = detail::one_minus_exp_neg(A) / A;
    for (int j = 1; j <= n; ++j) m[j] = (j * m[j - 1] - e1) / A;
}

}  // namespace detail

/// Closed-form fractional integral of s^n over [a, b] (left side evaluated
/// at b, right side at a), used as an oracle for the quadrature path.
inline double monomial_closed_form(int n, FracOrder order, double a, double b, Side side) {
    if (n < 0 || n > 8) throw DomainError("monomial order must be in [0, 8]");
    if (order.is_classical())
        throw DomainError("monomial closed form covers alpha in (0, 1) only");
    if (!(a < b)) throw DomainError("monomial closed form requires a < b");

    const double h = b - a;
    const double A = kernel_decay_rate(order) * h;
    double m[9];
    detail::exp_moments(A, n, m);

    // expand (base -+ h t)^n around the evaluation endpoint
    const double base = side == Side::left ? b : a;
    const double step = side == Side::left ? -h : h;
    double sum = 0.0;
    double binom = 1.0;
    double step_pow = 1.0;
    for (int j = 0; j <= n; ++j) {
        sum += binom * std::pow(base, n - j) * step_pow * m[j];
        binom = binom * (n - j) / (j + 1);
        step_pow *= step;
    }
    return sum * h / order.alpha;
}

}  // namespace fracineq
