#pragma once

#include <algorithm>
#include <cmath>
#include <optional>
#include <string>
#include <vector>

#include "errors.hpp"
#include "frac_integral.hpp"
#include "functions.hpp"
#include "kernel.hpp"
#include "quadrature.hpp"

namespace fracineq {

enum class Ineq { hh, fejer, da, pachpatte1, pachpatte2 };

inline const char* ineq_name(Ineq i) {
    switch (i) {
        case Ineq::hh: return "hh";
        case Ineq::fejer: return "fejer";
        case Ineq::da: return "da";
        case Ineq::pachpatte1: return "pachpatte1";
        case Ineq::pachpatte2: return "pachpatte2";
    }
    return "?";
}

enum class Verdict { holds, violated, inconclusive };

inline const char* verdict_name(Verdict v) {
    switch (v) {
        case Verdict::holds: return "holds";
        case Verdict::violated: return "violated";
        case Verdict::inconclusive: return "inconclusive";
    }
    return "?";
}

struct NamedTerm {
    std::string name;
    double value;
};

/// Everything one inequality instance produced: the chain terms in order,
/// the adjacent slacks in the asserted direction, and a verdict at the
/// quadrature-derived margin.
struct InequalityReport {
    Ineq name;
    double alpha;
    Interval interval;
    double A;
    Shape shape;
    std::vector<NamedTerm> terms;
    std::vector<double> slacks;
    double margin;
    double est_error_sum;
    long panels_used;
    Verdict verdict;
};

struct CheckOptions {
    /// Enforce the stricter textbook hypotheses (0 <= a and u positive) for
    /// the mean-value chains.  Off by default: the chains hold without them.
    bool strict = false;
    /// Product inequalities only: skip the nonnegativity screen and report
    /// the terms without asserting a verdict (it becomes inconclusive).
    bool lax = false;
};

namespace detail {

inline double margin_from(double est_error_sum) {
    // a check must never report violation due to quadrature noise
    return std::max(1e-8, 10.0 * est_error_sum);
}

inline Verdict verdict_from_slacks(const std::vector<double>& slacks, double margin) {
    bool inconclusive = false;
    for (double s : slacks) {
        if (s < -10.0 * margin) return Verdict::violated;
        if (s < -margin) inconclusive = true;
    }
    return inconclusive ? Verdict::inconclusive : Verdict::holds;
}

/// Shrinks the absolute tolerance when a term multiplies the integrals by a
/// coefficient > 1, so the propagated term error stays at the configured
/// level (matters for narrow intervals, where the mean coefficient is ~1/width).
inline QuadratureConfig scaled_cfg(const QuadratureConfig& cfg, double coef_magnitude) {
    QuadratureConfig out = cfg;
    out.abs_tol = std::max(cfg.abs_tol / std::max(1.0, coef_magnitude), 5e-14);
    return out;
}

inline void enforce_strict(const FunctionSpec& u, const Interval& iv) {
    if (iv.a < 0.0) throw DomainError("strict mode requires 0 <= a");
    for (int i = 0; i <= 100; ++i)
        if (u(iv.a + iv.width() * i / 100.0) <= 0.0)
            throw DomainError("strict mode requires a positive function");
}

inline void screen_weight(const WeightSpec& w, const Interval& iv) {
    const double sum = iv.a + iv.b;
    double scale = 1.0;
    for (int i = 0; i <= 200; ++i) {
        const double x = iv.a + iv.width() * i / 200.0;
        const double vx = w(x);
        if (!std::isfinite(vx) || vx < 0.0)
            throw WeightInvalid("weight must be finite and nonnegative on the interval");
        scale = std::max(scale, std::fabs(vx));
        if (std::fabs(w(sum - x) - vx) > 1e-12 * scale)
            throw WeightInvalid("weight is not symmetric about the midpoint");
    }
}

inline void screen_nonneg(const FunctionSpec& u, const Interval& iv, const char* which) {
    for (int i = 0; i <= 1000; ++i) {
        const double v = u(iv.a + iv.width() * i / 1000.0);
        if (!std::isfinite(v) || v < 0.0)
            throw NegativeFunction(std::string(which) +
                                   " must be finite and nonnegative for the product inequalities");
    }
}

inline std::vector<double> merge_kinks(const std::vector<double>& a, const std::vector<double>& b) {
    std::vector<double> out = a;
    out.insert(out.end(), b.begin(), b.end());
    return out;
}

}  // namespace detail

/// Chain  u(mid) <= coef_midpoint * (I_a u(b) + I_b u(a)) <= (u(a)+u(b))/2
/// for convex u; reversed for concave u (computed by re-negating the convex
/// path so the two paths cannot diverge).  alpha = 1 gives the classical
/// mean-value chain exactly.
inline InequalityReport check_hermite_hadamard(const FunctionSpec& u, FracOrder order,
                                               const Interval& iv, const QuadratureConfig& cfg,
                                               CheckOptions opts = {}) {
    if (u.shape == Shape::unknown)
        throw ShapeUnknown("function carries no convexity certificate");
    if (opts.strict) detail::enforce_strict(u, iv);
    if (u.shape == Shape::concave) {
        CheckOptions inner_opts = opts;
        inner_opts.strict = false;
        InequalityReport rep = check_hermite_hadamard(negate(u), order, iv, cfg, inner_opts);
        for (auto& t : rep.terms) t.value = -t.value;
        rep.shape = Shape::concave;
        return rep;
    }

    const StableValue coef = coef_midpoint(order, iv);
    const QuadratureConfig qc = detail::scaled_cfg(cfg, 2.0 * coef.value);
    const FracIntegralValue il = left_integral(u, order, iv.a, iv.b, qc);
    const FracIntegralValue ir = right_integral(u, order, iv.a, iv.b, qc);

    const double lhs = u(iv.midpoint());
    const double mid = coef.value * (il.value + ir.value);
    const double rhs = 0.5 * (u(iv.a) + u(iv.b));
    const double est = coef.value * (il.est_error + ir.est_error);
    const double margin = detail::margin_from(est);
    std::vector<double> slacks = {mid - lhs, rhs - mid};

    return {Ineq::hh,
            order.alpha,
            iv,
            kernel_scale(order, iv).value,
            Shape::convex,
            {{"midpoint_value", lhs}, {"fractional_mean", mid}, {"endpoint_average", rhs}},
            slacks,
            margin,
            est,
            il.panels_used + ir.panels_used,
            detail::verdict_from_slacks(slacks, margin)};
}

/// Weighted chain of the mean-value inequality with a nonnegative weight
/// symmetric about the midpoint.
inline InequalityReport check_fejer(const FunctionSpec& u, const WeightSpec& w, FracOrder order,
                                    const Interval& iv, const QuadratureConfig& cfg,
                                    CheckOptions opts = {}) {
    detail::screen_weight(w, iv);
    if (u.shape == Shape::unknown)
        throw ShapeUnknown("function carries no convexity certificate");
    if (opts.strict) detail::enforce_strict(u, iv);
    if (u.shape == Shape::concave) {
        CheckOptions inner_opts = opts;
        inner_opts.strict = false;
        InequalityReport rep = check_fejer(negate(u), w, order, iv, cfg, inner_opts);
        for (auto& t : rep.terms) t.value = -t.value;
        rep.shape = Shape::concave;
        return rep;
    }

    const double um = u(iv.midpoint());
    const double avg = 0.5 * (u(iv.a) + u(iv.b));
    const QuadratureConfig qc =
        detail::scaled_cfg(cfg, 2.0 * std::max(std::fabs(um), std::fabs(avg)));

    auto weight_fn = [&w](double s) { return w(s); };
    const FracIntegralValue vl = left_integral(weight_fn, order, iv.a, iv.b, qc, w.kinks());
    const FracIntegralValue vr = right_integral(weight_fn, order, iv.a, iv.b, qc, w.kinks());
    auto product = [&u, &w](double s) { return u(s) * w(s); };
    const std::vector<double> seeds = detail::merge_kinks(u.kinks(), w.kinks());
    const FracIntegralValue pl = left_integral(product, order, iv.a, iv.b, qc, seeds);
    const FracIntegralValue pr = right_integral(product, order, iv.a, iv.b, qc, seeds);

    const double wsum = vl.value + vr.value;
    const double werr = vl.est_error + vr.est_error;
    const double t0 = um * wsum;
    const double t1 = pl.value + pr.value;
    const double t2 = avg * wsum;
    const double est =
        std::fabs(um) * werr + (pl.est_error + pr.est_error) + std::fabs(avg) * werr;
    const double margin = detail::margin_from(est);
    std::vector<double> slacks = {t1 - t0, t2 - t1};

    return {Ineq::fejer,
            order.alpha,
            iv,
            kernel_scale(order, iv).value,
            Shape::convex,
            {{"weighted_midpoint", t0}, {"weighted_mean", t1}, {"weighted_endpoint_average", t2}},
            slacks,
            margin,
            est,
            vl.panels_used + vr.panels_used + pl.panels_used + pr.panels_used,
            detail::verdict_from_slacks(slacks, margin)};
}

/// Trapezoid-gap bound |avg - fractional mean| <= coef_dragomir (|u'(a)|+|u'(b)|)
/// for differentiable u with |u'| convex.
inline InequalityReport check_dragomir_agarwal(const FunctionSpec& u, FracOrder order,
                                               const Interval& iv, const QuadratureConfig& cfg,
                                               CheckOptions = {}) {
    if (!u.has_derivative)
        throw NoDerivative("trapezoid-gap bound needs a differentiable function");
    if (!check_convexity_of([&u](double x) { return std::fabs(eval_derivative(u, x)); }, iv, 1001))
        throw ShapeUnknown("|u'| failed the convexity screen");

    const StableValue coef = coef_midpoint(order, iv);
    const QuadratureConfig qc = detail::scaled_cfg(cfg, 2.0 * coef.value);
    const FracIntegralValue il = left_integral(u, order, iv.a, iv.b, qc);
    const FracIntegralValue ir = right_integral(u, order, iv.a, iv.b, qc);

    const double gap =
        0.5 * (u(iv.a) + u(iv.b)) - coef.value * (il.value + ir.value);
    const double t0 = std::fabs(gap);
    const double t1 = coef_dragomir(order, iv).value *
                      (std::fabs(eval_derivative(u, iv.a)) + std::fabs(eval_derivative(u, iv.b)));
    const double est = coef.value * (il.est_error + ir.est_error);
    const double margin = detail::margin_from(est);
    std::vector<double> slacks = {t1 - t0};

    return {Ineq::da,
            order.alpha,
            iv,
            kernel_scale(order, iv).value,
            Shape::convex,
            {{"trapezoid_gap", t0}, {"derivative_bound", t1}},
            slacks,
            margin,
            est,
            il.panels_used + ir.panels_used,
            detail::verdict_from_slacks(slacks, margin)};
}

struct IdentityResidual {
    double residual;
    double margin;
    double est_error_sum;
    long panels_used;
};

/// Residual of the proof-level identity behind the trapezoid-gap bound:
/// both sides are computed through independent quadratures and should agree
/// to the combined error estimate.
inline IdentityResidual dragomir_identity_residual(const FunctionSpec& u, FracOrder order,
                                                   const Interval& iv,
                                                   const QuadratureConfig& cfg) {
    if (!u.has_derivative) throw NoDerivative("identity residual needs a differentiable function");

    const StableValue coef = coef_midpoint(order, iv);
    const QuadratureConfig qc = detail::scaled_cfg(cfg, 2.0 * coef.value);
    const FracIntegralValue il = left_integral(u, order, iv.a, iv.b, qc);
    const FracIntegralValue ir = right_integral(u, order, iv.a, iv.b, qc);
    const double lhs = 0.5 * (u(iv.a) + u(iv.b)) - coef.value * (ir.value + il.value);

    // chord parameterization: x(t) = t a + (1-t) b
    auto du = [&u, &iv](double t) { return eval_derivative(u, t * iv.a + (1.0 - t) * iv.b); };

    double rhs, rhs_est;
    long panels = il.panels_used + ir.panels_used;
    if (order.is_classical()) {
        const double factor = 0.5 * iv.width();
        const IntegralEstimate q = integrate_adaptive(
            [&du](double t) { return (1.0 - 2.0 * t) * du(t); }, 0.0, 1.0,
            detail::scaled_cfg(cfg, factor));
        rhs = factor * q.value;
        rhs_est = factor * q.est_error;
        panels += q.panels;
    } else {
        const double A = kernel_scale(order, iv).value;
        const double factor = iv.width() / (2.0 * detail::one_minus_exp_neg(A));
        const QuadratureConfig qt = detail::scaled_cfg(cfg, factor);
        std::vector<double> s1, s2;
        detail::add_layer_seeds(s1, 0.0, A, +1);
        detail::add_layer_seeds(s2, 1.0, A, -1);
        const IntegralEstimate q1 = integrate_adaptive(
            [&du, A](double t) { return std::exp(-A * t) * du(t); }, 0.0, 1.0, qt, s1);
        const IntegralEstimate q2 = integrate_adaptive(
            [&du, A](double t) { return std::exp(-A * (1.0 - t)) * du(t); }, 0.0, 1.0, qt, s2);
        rhs = factor * (q1.value - q2.value);
        rhs_est = factor * (q1.est_error + q2.est_error);
        panels += q1.panels + q2.panels;
    }

    const double est = coef.value * (il.est_error + ir.est_error) + rhs_est;
    return {std::fabs(lhs - rhs), detail::margin_from(est), est, panels};
}

namespace detail {

struct PachpatteParts {
    FracIntegralValue pl, pr;
    double paa, pbb, pab, pba;
    double um, vm;
};

inline PachpatteParts pachpatte_parts(const FunctionSpec& u, const FunctionSpec& v, FracOrder order,
                                      const Interval& iv, const QuadratureConfig& qc,
                                      CheckOptions opts) {
    if (u.shape == Shape::unknown || v.shape == Shape::unknown)
        throw ShapeUnknown("product inequalities need certificates on both functions");
    if (u.shape != v.shape)
        throw ShapeUnknown("product inequalities need matching certificates");
    if (!opts.lax) {
        screen_nonneg(u, iv, "u");
        screen_nonneg(v, iv, "v");
    }
    auto product = [&u, &v](double s) { return u(s) * v(s); };
    const std::vector<double> seeds = merge_kinks(u.kinks(), v.kinks());
    const double m = iv.midpoint();
    return {left_integral(product, order, iv.a, iv.b, qc, seeds),
            right_integral(product, order, iv.a, iv.b, qc, seeds),
            u(iv.a) * v(iv.a),
            u(iv.b) * v(iv.b),
            u(iv.a) * v(iv.b),
            u(iv.b) * v(iv.a),
            u(m),
            v(m)};
}

}  // namespace detail

/// Product bound: the fractional mean of u*v against the endpoint-product
/// combination with weights P1/(2A^3) and P2/A^3 (1/3 and 1/6 at alpha = 1).
/// Reversed for a concave pair.
inline InequalityReport check_pachpatte_first(const FunctionSpec& u, const FunctionSpec& v,
                                              FracOrder order, const Interval& iv,
                                              const QuadratureConfig& cfg, CheckOptions opts = {}) {
    const double coef = order.alpha / (2.0 * iv.width());
    const QuadratureConfig qc = detail::scaled_cfg(cfg, 2.0 * coef);
    const detail::PachpatteParts parts = detail::pachpatte_parts(u, v, order, iv, qc, opts);
    const KernelScale A = kernel_scale(order, iv);

    const double t0 = coef * (parts.pl.value + parts.pr.value);
    const double t1 = (parts.paa + parts.pbb) * pachpatte_c1(A).value +
                      (parts.pab + parts.pba) * pachpatte_c2(A).value;
    const double est = coef * (parts.pl.est_error + parts.pr.est_error);
    const double margin = detail::margin_from(est);
    const bool concave = u.shape == Shape::concave;
    std::vector<double> slacks = {concave ? t0 - t1 : t1 - t0};

    return {Ineq::pachpatte1,
            order.alpha,
            iv,
            A.value,
            u.shape,
            {{"product_mean", t0}, {"endpoint_product_bound", t1}},
            slacks,
            margin,
            est,
            parts.pl.panels_used + parts.pr.panels_used,
            opts.lax ? Verdict::inconclusive : detail::verdict_from_slacks(slacks, margin)};
}

/// Midpoint-product bound 2 u(m)v(m) against the fractional mean of u*v plus
/// the endpoint combination with weights P2/(A^2(1-e^-A)) and
/// P1/(2A^2(1-e^-A)) (1/6 and 1/3 at alpha = 1).
inline InequalityReport check_pachpatte_second(const FunctionSpec& u, const FunctionSpec& v,
                                               FracOrder order, const Interval& iv,
                                               const QuadratureConfig& cfg,
                                               CheckOptions opts = {}) {
    const StableValue coef = coef_midpoint(order, iv);
    const QuadratureConfig qc = detail::scaled_cfg(cfg, 2.0 * coef.value);
    const detail::PachpatteParts parts = detail::pachpatte_parts(u, v, order, iv, qc, opts);
    const KernelScale A = kernel_scale(order, iv);

    const double t0 = 2.0 * parts.um * parts.vm;
    const double t1 = coef.value * (parts.pl.value + parts.pr.value) +
                      (parts.paa + parts.pbb) * pachpatte_d1(A).value +
                      (parts.pab + parts.pba) * pachpatte_d2(A).value;
    const double est = coef.value * (parts.pl.est_error + parts.pr.est_error);
    const double margin = detail::margin_from(est);
    const bool concave = u.shape == Shape::concave;
    std::vector<double> slacks = {concave ? t0 - t1 : t1 - t0};

    return {Ineq::pachpatte2,
            order.alpha,
            iv,
            A.value,
            u.shape,
            {{"midpoint_product", t0}, {"product_mean_bound", t1}},
            slacks,
            margin,
            est,
            parts.pl.panels_used + parts.pr.panels_used,
            opts.lax ? Verdict::inconclusive : detail::verdict_from_slacks(slacks, margin)};
}

/// Dispatch a named checker.  v is required by the product inequalities,
/// w by the weighted chain.
inline InequalityReport run_check(Ineq which, const FunctionSpec& u, const FunctionSpec* v,
                                  const WeightSpec* w, FracOrder order, const Interval& iv,
                                  const QuadratureConfig& cfg, CheckOptions opts = {}) {
    switch (which) {
        case Ineq::hh: return check_hermite_hadamard(u, order, iv, cfg, opts);
        case Ineq::fejer: {
            if (!w) throw DomainError("weighted chain needs a weight");
            return check_fejer(u, *w, order, iv, cfg, opts);
        }
        case Ineq::da: return check_dragomir_agarwal(u, order, iv, cfg, opts);
        case Ineq::pachpatte1:
            if (!v) throw DomainError("product inequality needs a second function");
            return check_pachpatte_first(u, *v, order, iv, cfg, opts);
        case Ineq::pachpatte2:
            if (!v) throw DomainError("product inequality needs a second function");
            return check_pachpatte_second(u, *v, order, iv, cfg, opts);
    }
    throw DomainError("unknown inequality");
}

struct LimitRow {
    double alpha;
    double tracked;
    double abs_error;
};

struct LimitSweep {
    std::string tracked_name;
    double classical;
    std::vector<LimitRow> rows;
    bool monotone;  // abs_error nonincreasing along the alpha sequence
    std::vector<InequalityReport> reports;
};

/// Runs a checker along an increasing alpha sequence plus the exact
/// alpha = 1 branch and tracks convergence of the fractional bound/mean
/// term (terms[1]) to its classical value.
inline LimitSweep classical_limit_sweep(Ineq which, const FunctionSpec& u, const FunctionSpec* v,
                                        const WeightSpec* w, const Interval& iv,
                                        const std::vector<double>& alphas,
                                        const QuadratureConfig& cfg, CheckOptions opts = {}) {
    if (alphas.empty()) throw DomainError("limit sweep needs at least one alpha");
    for (std::size_t i = 0; i < alphas.size(); ++i) {
        if (!(alphas[i] > 0.0) || !(alphas[i] < 1.0))
            throw DomainError("limit sweep alphas must lie in (0, 1)");
        if (i && !(alphas[i] > alphas[i - 1]))
            throw DomainError("limit sweep alphas must increase");
    }

    const InequalityReport classical = run_check(which, u, v, w, FracOrder(1.0), iv, cfg, opts);
    LimitSweep out{classical.terms[1].name, classical.terms[1].value, {}, true, {}};
    for (double a : alphas) {
        InequalityReport rep = run_check(which, u, v, w, FracOrder(a), iv, cfg, opts);
        const double tracked = rep.terms[1].value;
        const double err = std::fabs(tracked - out.classical);
        if (!out.rows.empty() && err > out.rows.back().abs_error + 1e-15) out.monotone = false;
        out.rows.push_back({a, tracked, err});
        out.reports.push_back(std::move(rep));
    }
    out.reports.push_back(classical);
    return out;
}

}  // namespace fracineq
