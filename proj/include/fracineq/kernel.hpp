#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <limits>

#include "errors.hpp"

namespace fracineq {

/// Order of the exponential-kernel fractional integral.  alpha = 1 is
/// admitted and selects the exact classical branch everywhere.
struct FracOrder {
    double alpha;

    explicit FracOrder(double a) : alpha(a) {
        if (!std::isfinite(a) || !(a > 0.0) || !(a <= 1.0))
            throw DomainError("fractional order requires 0 < alpha <= 1");
    }

    bool is_classical() const { return alpha == 1.0; }
};

struct Interval {
    double a;
    double b;

    Interval(double a_, double b_) : a(a_), b(b_) {
        if (!std::isfinite(a) || !std::isfinite(b) || !(a < b))
            throw DomainError("interval requires finite a < b");
    }

    double width() const { return b - a; }
    double midpoint() const { return 0.5 * (a + b); }
};

/// The dimensionless scale A = (1-alpha)/alpha * (b-a).  Zero iff alpha = 1.
struct KernelScale {
    double value;
};

inline KernelScale kernel_scale(FracOrder order, const Interval& iv) {
    if (order.is_classical()) return {0.0};
    return {(1.0 - order.alpha) / order.alpha * iv.width()};
}

/// Decay rate (1-alpha)/alpha of the kernel exp(-rate * distance).
inline double kernel_decay_rate(FracOrder order) {
    return order.is_classical() ? 0.0 : (1.0 - order.alpha) / order.alpha;
}

/// Which evaluation path produced a constant.
enum class Branch { direct, series };

/// A closed-form constant together with the branch that evaluated it.
struct StableValue {
    double value;
    Branch branch;
};

namespace detail {

// Switch thresholds.  Constants that cancel to O(A^3) (the product-bound
// constants and the endpoint moments) lose ~12/A^2 ulps of relative accuracy
// in direct form, so their switch sits at 0.25 where both branches still
// deliver <= 1e-13; the mass ratio and trapezoid-gap factor are stable in
// direct form down to tiny A and switch at 1e-2.
inline constexpr double k_ratio_threshold = 1e-2;
inline constexpr double k_cubic_threshold = 0.25;

// Maclaurin tables generated by scripts/gen_series_coeffs.py (exact
// rationals rounded once to double).  Truncation error at the switch
// thresholds is below 1e-23 relative.

// A/(1 - e^-A)
inline constexpr std::array<double, 12> k_mass_ratio_series = {
    1.0,
    0.5,
    0.083333333333333333,
    0.0,
    -0.0013888888888888889,
    0.0,
    3.3068783068783069e-5,
    0.0,
    -8.2671957671957672e-7,
    0.0,
    2.0876756987868099e-8,
    0.0,
};

// 4*tanh(A/4)/A
inline constexpr std::array<double, 10> k_dragomir_norm_series = {
    1.0,
    0.0,
    -0.020833333333333333,
    0.0,
    0.00052083333333333333,
    0.0,
    -1.3175843253968254e-5,
    0.0,
    3.3370191247795414e-7,
    0.0,
};

// (A^2 - 2A + 4 - (A^2 + 2A + 4) e^-A) / (2 A^3), limit 1/3
inline constexpr std::array<double, 16> k_pachpatte_c1_series = {
    0.33333333333333333,
    -0.16666666666666667,
    0.058333333333333333,
    -0.015277777777777778,
    0.0031746031746031746,
    -0.00054563492063492063,
    7.9916225749559083e-5,
    -1.0196208112874780e-5,
    1.1523969857303191e-6,
    -1.1690983913206135e-7,
    1.0759559370670482e-8,
    -9.0618890222064825e-10,
    7.0353906332742312e-11,
    -5.0662459723306284e-12,
    3.4018632777580801e-13,
    -2.1398313546963130e-14,
};

// (A - 2 + (A + 2) e^-A) / A^3, limit 1/6
inline constexpr std::array<double, 16> k_pachpatte_c2_series = {
    0.16666666666666667,
    -0.083333333333333333,
    0.025,
    -0.0055555555555555556,
    0.00099206349206349206,
    -0.00014880952380952381,
    1.9290123456790123e-5,
    -2.2045855379188713e-6,
    2.2546897546897547e-7,
    -2.0876756987868099e-8,
    1.7664948220503776e-9,
    -1.3764894717275670e-10,
    9.9413128513657614e-12,
    -6.6912682653423394e-13,
    4.2171858815182811e-14,
    -2.4990731149737962e-15,
};

// -e^{-A/2}/A + (1 - e^-A)/A^2
inline constexpr std::array<double, 16> k_moment_i1_series = {
    0.0,
    0.041666666666666667,
    -0.020833333333333333,
    0.0057291666666666667,
    -0.0011284722222222222,
    0.00017671130952380952,
    -2.3251488095238095e-5,
    2.6588507220017637e-6,
    -2.7019090332892416e-7,
    2.4782993939894982e-8,
    -2.0754432239892309e-9,
    1.6008075191831702e-10,
    -1.1451142272733605e-11,
    7.6401625443212021e-13,
    -4.7771436032211805e-14,
    2.8107279639810818e-15,
};

// (1 - e^{-A/2} + e^-A)/A - (1 - e^-A)/A^2
inline constexpr std::array<double, 16> k_moment_i2_series = {
    0.0,
    0.20833333333333333,
    -0.10416666666666667,
    0.030729166666666667,
    -0.0066840277777777778,
    0.0011687748015873016,
    -0.00017206101190476190,
    2.1948974178791887e-5,
    -2.4747764412477954e-6,
    2.5025196940887045e-7,
    -2.2952200211857330e-8,
    1.9265755739686946e-9,
    -1.4910008944549030e-10,
    1.0705329105797882e-11,
    -7.1689826256644575e-13,
    4.4982586779163893e-14,
};

template <std::size_t N>
inline double horner(const std::array<double, N>& c, double x) {
    double r = 0.0;
    for (std::size_t i = N; i-- > 0;) r = r * x + c[i];
    return r;
}

/// 1 - e^-A evaluated without the literal subtraction.
inline double one_minus_exp_neg(double A) { return -std::expm1(-A); }

inline double mass_ratio_direct(double A) { return A / one_minus_exp_neg(A); }
inline double mass_ratio_series(double A) { return horner(k_mass_ratio_series, A); }

inline double dragomir_norm_direct(double A) { return 4.0 * std::tanh(0.25 * A) / A; }
inline double dragomir_norm_series(double A) { return horner(k_dragomir_norm_series, A); }

// Direct forms below group each O(1) literal with an expm1 so that only the
// unavoidable O(A^3) cancellation remains.
inline double pachpatte_p1_direct(double A) {
    const double em = one_minus_exp_neg(A);
    return (A * A + 4.0) * em - 2.0 * A * (1.0 + std::exp(-A));
}

inline double pachpatte_p2_direct(double A) {
    const double em = one_minus_exp_neg(A);
    return A * (1.0 + std::exp(-A)) - 2.0 * em;
}

inline double pachpatte_c1_direct(double A) { return pachpatte_p1_direct(A) / (2.0 * A * A * A); }
inline double pachpatte_c1_series(double A) { return horner(k_pachpatte_c1_series, A); }
inline double pachpatte_c2_direct(double A) { return pachpatte_p2_direct(A) / (A * A * A); }
inline double pachpatte_c2_series(double A) { return horner(k_pachpatte_c2_series, A); }

inline double moment_i1_direct(double A) {
    const double em = one_minus_exp_neg(A);
    return (em - A * std::exp(-0.5 * A)) / (A * A);
}

inline double moment_i2_direct(double A) {
    const double em = one_minus_exp_neg(A);
    const double em_half = one_minus_exp_neg(0.5 * A);
    return (A * (em_half + std::exp(-A)) - em) / (A * A);
}

inline double moment_i3_direct(double A) {
    // grouped as in its own closed form; algebraically equal to i2
    const double em = one_minus_exp_neg(A);
    return (A * (1.0 + std::exp(-A) - std::exp(-0.5 * A)) - em) / (A * A);
}

inline double moment_i1_series(double A) { return horner(k_moment_i1_series, A); }
inline double moment_i2_series(double A) { return horner(k_moment_i2_series, A); }

inline StableValue stable_mass_ratio(double A) {
    if (A < k_ratio_threshold) return {mass_ratio_series(A), Branch::series};
    return {mass_ratio_direct(A), Branch::direct};
}

inline StableValue stable_dragomir_norm(double A) {
    if (A < k_ratio_threshold) return {dragomir_norm_series(A), Branch::series};
    return {dragomir_norm_direct(A), Branch::direct};
}

inline void require_scale(KernelScale A) {
    if (!std::isfinite(A.value) || A.value < 0.0)
        throw DomainError("kernel scale A must be finite and >= 0");
}

}  // namespace detail

/// Coefficient (1-alpha) / (2 (1 - e^-A)) of the fractional mean term.
/// Small A switches to alpha/(2(b-a)) * series of A/(1-e^-A); at alpha = 1
/// this yields exactly 1/(2(b-a)).
inline StableValue coef_midpoint(FracOrder order, const Interval& iv) {
    const double A = kernel_scale(order, iv).value;
    if (A < detail::k_ratio_threshold) {
        const double ratio = detail::mass_ratio_series(A);
        return {order.alpha / (2.0 * iv.width()) * ratio, Branch::series};
    }
    return {(1.0 - order.alpha) / (2.0 * detail::one_minus_exp_neg(A)), Branch::direct};
}

/// Coefficient (b-a)/(2A) * tanh(A/4) of the trapezoid-gap bound; exactly
/// (b-a)/8 at alpha = 1.
inline StableValue coef_dragomir(FracOrder order, const Interval& iv) {
    const double A = kernel_scale(order, iv).value;
    const StableValue norm = detail::stable_dragomir_norm(A);
    return {iv.width() / 8.0 * norm.value, norm.branch};
}

/// First product-bound numerator A^2 - 2A + 4 - (A^2 + 2A + 4) e^-A.
/// Behaves like 2A^3/3 near zero.
inline StableValue pachpatte_P1(KernelScale A) {
    detail::require_scale(A);
    if (A.value < detail::k_cubic_threshold) {
        const double a3 = A.value * A.value * A.value;
        return {2.0 * a3 * detail::pachpatte_c1_series(A.value), Branch::series};
    }
    return {detail::pachpatte_p1_direct(A.value), Branch::direct};
}

/// Second product-bound numerator A - 2 + (A + 2) e^-A, ~ A^3/6 near zero.
inline StableValue pachpatte_P2(KernelScale A) {
    detail::require_scale(A);
    if (A.value < detail::k_cubic_threshold) {
        const double a3 = A.value * A.value * A.value;
        return {a3 * detail::pachpatte_c2_series(A.value), Branch::series};
    }
    return {detail::pachpatte_p2_direct(A.value), Branch::direct};
}

/// P1/(2A^3); tends to 1/3 as A -> 0 and equals it exactly at A = 0.
inline StableValue pachpatte_c1(KernelScale A) {
    detail::require_scale(A);
    if (A.value < detail::k_cubic_threshold)
        return {detail::pachpatte_c1_series(A.value), Branch::series};
    return {detail::pachpatte_c1_direct(A.value), Branch::direct};
}

/// P2/A^3; tends to 1/6 as A -> 0.
inline StableValue pachpatte_c2(KernelScale A) {
    detail::require_scale(A);
    if (A.value < detail::k_cubic_threshold)
        return {detail::pachpatte_c2_series(A.value), Branch::series};
    return {detail::pachpatte_c2_direct(A.value), Branch::direct};
}

/// P2/(A^2 (1 - e^-A)); tends to 1/6.  Branch flag follows the cubic part.
inline StableValue pachpatte_d1(KernelScale A) {
    const StableValue c = pachpatte_c2(A);
    return {c.value * detail::stable_mass_ratio(A.value).value, c.branch};
}

/// P1/(2A^2 (1 - e^-A)); tends to 1/3.
inline StableValue pachpatte_d2(KernelScale A) {
    const StableValue c = pachpatte_c1(A);
    return {c.value * detail::stable_mass_ratio(A.value).value, c.branch};
}

/// Endpoint moments of the kernel-difference weight, split at t = 1/2.
/// i3 equals i2 and i4 equals i1 in closed form; all four are returned so
/// the identities can be checked.  A = 0 is rejected: the moments are
/// defined for A > 0 only, and callers needing the limit go through
/// coef_dragomir's series branch.
struct DragomirMoments {
    double i1, i2, i3, i4;
    Branch branch;
};

inline DragomirMoments dragomir_moments(KernelScale A) {
    if (!std::isfinite(A.value) || A.value <= 0.0)
        throw DomainError("dragomir_moments requires A > 0");
    if (A.value < detail::k_cubic_threshold) {
        const double i1 = detail::moment_i1_series(A.value);
        const double i2 = detail::moment_i2_series(A.value);
        return {i1, i2, i2, i1, Branch::series};
    }
    const double i1 = detail::moment_i1_direct(A.value);
    const double i2 = detail::moment_i2_direct(A.value);
    const double i3 = detail::moment_i3_direct(A.value);
    return {i1, i2, i3, i1, Branch::direct};
}

/// One row of the normalized-constant table: every column tends to 1 as
/// A -> 0 and is exactly 1 on the alpha = 1 branch.
struct NormalizedConstants {
    double A;
    double alpha;
    double midpoint;  // coef_midpoint * 2(b-a)  = alpha * A/(1-e^-A)
    double dragomir;  // coef_dragomir * 8/(b-a) = 4 tanh(A/4)/A
    double p2;        // 6 * P2/A^3
    double p1;        // 3 * P1/(2A^2(1-e^-A))
    Branch b_midpoint, b_dragomir, b_p2, b_p1;
};

inline NormalizedConstants normalized_constants(FracOrder order, const Interval& iv) {
    const KernelScale A = kernel_scale(order, iv);
    const StableValue ratio = detail::stable_mass_ratio(A.value);
    const StableValue drag = detail::stable_dragomir_norm(A.value);
    const StableValue c2 = pachpatte_c2(A);
    const StableValue d2 = pachpatte_d2(A);
    return {A.value,      order.alpha,  order.alpha * ratio.value,
            drag.value,   6.0 * c2.value, 3.0 * d2.value,
            ratio.branch, drag.branch,  c2.branch, d2.branch};
}

/// Same table addressed by A; the order is implied by A and the interval
/// width (alpha = w / (w + A), exactly 1 at A = 0).
inline NormalizedConstants normalized_constants(KernelScale A, const Interval& iv) {
    detail::require_scale(A);
    const double w = iv.width();
    return normalized_constants(FracOrder(w / (w + A.value)), iv);
}

}  // namespace fracineq
