#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <set>
#include <span>
#include <vector>

#include "errors.hpp"

namespace fracineq {

/// Tolerances and work limit for adaptive integration.  The target is
/// max(abs_tol, rel_tol * |integral|); max_subdivisions caps the panel count.
struct QuadratureConfig {
    double abs_tol = 1e-10;
    double rel_tol = 1e-10;
    int max_subdivisions = 1 << 16;

    void validate() const {
        if (!(abs_tol > 0.0) || !(abs_tol < 1.0) || !(rel_tol > 0.0) || !(rel_tol < 1.0))
            throw DomainError("quadrature tolerances must lie in (0, 1)");
        if (max_subdivisions <= 0 || max_subdivisions > (1 << 20))
            throw DomainError("max_subdivisions out of range");
    }
};

struct IntegralEstimate {
    double value;
    double est_error;
    int panels;
};

namespace detail {

/// Nested Clenshaw-Curtis pair: a 17-node rule whose even-indexed nodes form
/// the embedded 9-node rule.  Per-panel error is |full - embedded|.
/// Weights come from the classical cosine-sum formula, so the rule carries
/// no transcribed constants.
struct CCRule {
    static constexpr int n_full = 17;
    static constexpr int n_half = 9;
    std::array<double, 17> nodes;   // cos(k*pi/16), descending from +1 to -1
    std::array<double, 17> w_full;
    std::array<double, 9> w_half;
};

inline CCRule make_cc_rule() {
    CCRule r{};
    constexpr long double pi = 3.14159265358979323846264338327950288L;
    auto weights = [&](int n_intervals, double* w) {
        const int half = n_intervals / 2;
        for (int k = 0; k <= n_intervals; ++k) {
            long double s = 1.0L;
            for (int j = 1; j <= half; ++j) {
                const long double bj = (j == half) ? 1.0L : 2.0L;
                s -= bj * std::cos(2.0L * j * k * pi / n_intervals) / (4.0L * j * j - 1.0L);
            }
            const long double ck = (k == 0 || k == n_intervals) ? 1.0L : 2.0L;
            w[k] = static_cast<double>(ck * s / n_intervals);
        }
    };
    weights(16, r.w_full.data());
    weights(8, r.w_half.data());
    for (int k = 0; k <= 16; ++k)
        r.nodes[k] = static_cast<double>(std::cos(k * pi / 16.0L));
    r.nodes[8] = 0.0;
    for (int k = 0; k < 8; ++k) r.nodes[16 - k] = -r.nodes[k];  // exact symmetry
    return r;
}

inline const CCRule& cc_rule() {
    static const CCRule rule = make_cc_rule();
    return rule;
}

struct Panel {
    double a, b;
    double value;
    double err;
};

struct PanelWorse {
    bool operator()(const Panel& p, const Panel& q) const {
        if (p.err != q.err) return p.err > q.err;
        return p.a < q.a;
    }
};

template <class F>
Panel eval_panel(F&& f, double a, double b) {
    const CCRule& r = cc_rule();
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    std::array<double, 17> fv{};
    for (int k = 0; k < 17; ++k) fv[k] = f(mid + half * r.nodes[k]);

    double full = 0.0, coarse = 0.0;
    for (int k = 0; k < 17; ++k) full += r.w_full[k] * fv[k];
    for (int k = 0; k < 9; ++k) coarse += r.w_half[k] * fv[2 * k];
    full *= half;
    coarse *= half;
    if (!std::isfinite(full) || !std::isfinite(coarse))
        throw DomainError("integrand produced a non-finite value");
    return {a, b, full, std::fabs(full - coarse)};
}

}  // namespace detail

/// Globally adaptive integration of f over [a, b]: the panel with the worst
/// error estimate is bisected until the summed estimate meets the target.
/// interior_seeds lists points that become initial panel boundaries (kernel
/// boundary layers, kinks); points outside (a, b) are ignored.
///
/// Throws NonConvergent when the panel cap is reached, DomainError for an
/// empty interval or a non-finite integrand.
template <class F>
IntegralEstimate integrate_adaptive(F&& f, double a, double b, const QuadratureConfig& cfg,
                                    std::span<const double> interior_seeds = {}) {
    cfg.validate();
    if (!std::isfinite(a) || !std::isfinite(b) || !(a < b))
        throw DomainError("integration interval requires a < b");

    std::vector<double> bounds;
    bounds.push_back(a);
    for (double s : interior_seeds)
        if (s > a && s < b) bounds.push_back(s);
    bounds.push_back(b);
    std::sort(bounds.begin(), bounds.end());
    bounds.erase(std::unique(bounds.begin(), bounds.end()), bounds.end());

    std::set<detail::Panel, detail::PanelWorse> panels;
    double value_sum = 0.0, err_sum = 0.0;
    for (std::size_t i = 0; i + 1 < bounds.size(); ++i) {
        auto p = detail::eval_panel(f, bounds[i], bounds[i + 1]);
        value_sum += p.value;
        err_sum += p.err;
        panels.insert(p);
    }

    auto resum = [&panels](double& v, double& e) {
        std::vector<detail::Panel> ordered(panels.begin(), panels.end());
        std::sort(ordered.begin(), ordered.end(),
                  [](const detail::Panel& p, const detail::Panel& q) { return p.a < q.a; });
        v = 0.0;
        e = 0.0;
        for (const auto& p : ordered) {
            v += p.value;
            e += p.err;
        }
    };

    const auto target = [&cfg](double v) {
        return std::max(cfg.abs_tol, cfg.rel_tol * std::fabs(v));
    };

    while (true) {
        if (err_sum <= target(value_sum)) {
            resum(value_sum, err_sum);  // authoritative pass in positional order
            if (err_sum <= target(value_sum))
                return {value_sum, err_sum, static_cast<int>(panels.size())};
        }
        if (static_cast<int>(panels.size()) >= cfg.max_subdivisions) {
            resum(value_sum, err_sum);
            throw NonConvergent("adaptive quadrature hit the panel cap", value_sum, err_sum,
                                static_cast<long>(panels.size()));
        }
        auto worst = *panels.begin();
        panels.erase(panels.begin());
        value_sum -= worst.value;
        err_sum -= worst.err;
        const double mid = 0.5 * (worst.a + worst.b);
        for (auto& half : {detail::eval_panel(f, worst.a, mid), detail::eval_panel(f, mid, worst.b)}) {
            value_sum += half.value;
            err_sum += half.err;
            panels.insert(half);
        }
    }
}

}  // namespace fracineq
