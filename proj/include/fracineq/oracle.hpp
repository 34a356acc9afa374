#pragma once

#include <cmath>

#include "errors.hpp"
#include "kernel.hpp"

namespace fracineq {

/// Result of the brute-force reference integrator.  value is the finest
/// composite-Simpson level; richardson_delta the gap to the previous level.
struct OracleResult {
    double value;
    long grid_n;
    double richardson_delta;
};

namespace oracle {

/// Composite Simpson on a uniform grid, doubled until two consecutive levels
/// agree to `target`, or the 2^22-point cap is hit (NonConvergent).
/// Deliberately simple and structurally unrelated to the adaptive
/// integrator so that it can serve as an independent cross-check.
template <class F>
OracleResult brute_integral(F&& f, double a, double b, double target) {
    if (!std::isfinite(a) || !std::isfinite(b) || !(a < b))
        throw DomainError("oracle interval requires a < b");
    if (!(target > 0.0)) throw DomainError("oracle target must be positive");

    constexpr long max_points = 1L << 22;

    auto simpson = [&](long segments) {
        const double h = (b - a) / static_cast<double>(segments);
        double odd = 0.0, even = 0.0;
        for (long i = 1; i < segments; i += 2) odd += f(a + h * static_cast<double>(i));
        for (long i = 2; i < segments; i += 2) even += f(a + h * static_cast<double>(i));
        return h / 3.0 * (f(a) + f(b) + 4.0 * odd + 2.0 * even);
    };

    long segments = 16;
    double prev = simpson(segments);
    while (true) {
        segments *= 2;
        const double cur = simpson(segments);
        const double delta = std::fabs(cur - prev);
        if (!std::isfinite(cur)) throw DomainError("oracle integrand produced a non-finite value");
        if (delta < target) return {cur, segments + 1, delta};
        if (segments * 2 + 1 > max_points)
            throw NonConvergent("oracle hit the grid cap", cur, delta, segments + 1);
        prev = cur;
    }
}

enum class Side { left, right };

/// Brute-force evaluation of the exponential-kernel fractional integral over
/// the full interval: left side is evaluated at b, right side at a.
/// `target` applies to the operator value, so the raw integration runs at an
/// alpha-tightened target to absorb the 1/alpha prefactor.
template <class F>
OracleResult brute_frac(F&& u, FracOrder order, const Interval& iv, Side side, double target) {
    const double rate = kernel_decay_rate(order);
    const double raw_target = target * order.alpha;
    OracleResult r =
        side == Side::left
            ? brute_integral([&](double s) { return std::exp(-rate * (iv.b - s)) * u(s); }, iv.a,
                             iv.b, raw_target)
            : brute_integral([&](double s) { return std::exp(-rate * (s - iv.a)) * u(s); }, iv.a,
                             iv.b, raw_target);
    const double inv_alpha = 1.0 / order.alpha;
    return {r.value * inv_alpha, r.grid_n, r.richardson_delta * inv_alpha};
}

}  // namespace oracle
}  // namespace fracineq
