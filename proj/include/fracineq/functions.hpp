#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <memory>
#include <random>
#include <string>
#include <vector>

#include "errors.hpp"
#include "kernel.hpp"

namespace fracineq {

enum class Family { quadratic, power_abs, exponential, piecewise_linear, negated };
enum class Shape { convex, concave, unknown };

inline const char* family_name(Family f) {
    switch (f) {
        case Family::quadratic: return "quadratic";
        case Family::power_abs: return "power_abs";
        case Family::exponential: return "exponential";
        case Family::piecewise_linear: return "piecewise_linear";
        case Family::negated: return "negated";
    }
    return "?";
}

inline const char* shape_name(Shape s) {
    switch (s) {
        case Shape::convex: return "convex";
        case Shape::concave: return "concave";
        case Shape::unknown: return "unknown";
    }
    return "?";
}

/// An evaluable test function with an optional derivative and a shape
/// certificate.  Parameter layout by family:
///   quadratic:        params = {c2, c1, c0}           c2 x^2 + c1 x + c0
///   power_abs:        params = {k, center, p, c0}     k |x-center|^p + c0
///   exponential:      params = {k, rate, c0}          k e^{rate x} + c0
///   piecewise_linear: params = {v0}, breaks b1<...<bk, slopes s1..sk;
///                     value v0 at b1, slope si on [bi, b_{i+1}), s1 extended
///                     left of b1
///   negated:          inner points at the wrapped spec
struct FunctionSpec {
    Family family = Family::quadratic;
    std::vector<double> params;
    std::vector<double> breaks;
    std::vector<double> slopes;
    std::shared_ptr<const FunctionSpec> inner;
    Shape shape = Shape::unknown;
    bool has_derivative = false;
    std::uint64_t seed = 0;  // generator provenance; 0 for hand-built specs

    double operator()(double x) const {
        switch (family) {
            case Family::quadratic:
                return (params[0] * x + params[1]) * x + params[2];
            case Family::power_abs:
                return params[0] * std::pow(std::fabs(x - params[1]), params[2]) + params[3];
            case Family::exponential:
                return params[0] * std::exp(params[1] * x) + params[2];
            case Family::piecewise_linear: {
                const double x0 = breaks.front();
                if (x <= x0) return params[0] + slopes.front() * (x - x0);
                double acc = params[0];
                double cur = x0;
                for (std::size_t i = 0; i < slopes.size(); ++i) {
                    const double seg_end =
                        (i + 1 < breaks.size()) ? std::min(breaks[i + 1], x) : x;
                    acc += slopes[i] * (seg_end - cur);
                    cur = seg_end;
                    if (cur >= x) break;
                }
                return acc;
            }
            case Family::negated:
                return -(*inner)(x);
        }
        return 0.0;
    }

    /// Interior non-smooth points, used to seed quadrature panels.
    std::vector<double> kinks() const {
        switch (family) {
            case Family::power_abs:
                return params[2] < 2.0 ? std::vector<double>{params[1]} : std::vector<double>{};
            case Family::piecewise_linear:
                return breaks;
            case Family::negated:
                return inner->kinks();
            default:
                return {};
        }
    }
};

inline double eval(const FunctionSpec& f, double x) { return f(x); }

inline double eval_derivative(const FunctionSpec& f, double x) {
    if (!f.has_derivative) throw NoDerivative("function family has kinks, no derivative");
    switch (f.family) {
        case Family::quadratic:
            return 2.0 * f.params[0] * x + f.params[1];
        case Family::power_abs: {
            const double d = x - f.params[1];
            const double p = f.params[2];
            if (d == 0.0) return 0.0;  // p > 1 here
            return f.params[0] * p * std::pow(std::fabs(d), p - 1.0) * (d > 0.0 ? 1.0 : -1.0);
        }
        case Family::exponential:
            return f.params[0] * f.params[1] * std::exp(f.params[1] * x);
        case Family::negated:
            return -eval_derivative(*f.inner, x);
        default:
            throw NoDerivative("function family has kinks, no derivative");
    }
}

inline FunctionSpec make_quadratic(double c2, double c1, double c0) {
    FunctionSpec f;
    f.family = Family::quadratic;
    f.params = {c2, c1, c0};
    f.shape = c2 >= 0.0 ? Shape::convex : Shape::concave;
    f.has_derivative = true;
    return f;
}

inline FunctionSpec make_power_abs(double k, double center, double p, double c0 = 0.0) {
    if (!(p >= 1.0)) throw DomainError("power_abs exponent must be >= 1");
    FunctionSpec f;
    f.family = Family::power_abs;
    f.params = {k, center, p, c0};
    f.shape = k >= 0.0 ? Shape::convex : Shape::concave;
    f.has_derivative = p > 1.0;
    return f;
}

inline FunctionSpec make_exponential(double k, double rate, double c0 = 0.0) {
    FunctionSpec f;
    f.family = Family::exponential;
    f.params = {k, rate, c0};
    f.shape = k >= 0.0 ? Shape::convex : Shape::concave;
    f.has_derivative = true;
    return f;
}

inline FunctionSpec make_piecewise_linear(double v0, std::vector<double> breaks,
                                          std::vector<double> slopes) {
    if (breaks.empty() || breaks.size() != slopes.size())
        throw DomainError("piecewise_linear needs one slope per breakpoint");
    for (std::size_t i = 0; i + 1 < breaks.size(); ++i)
        if (!(breaks[i] < breaks[i + 1]))
            throw DomainError("piecewise_linear breakpoints must be strictly increasing");
    for (std::size_t i = 0; i + 1 < slopes.size(); ++i)
        if (slopes[i] > slopes[i + 1])
            throw DomainError("piecewise_linear slopes must be nondecreasing");
    FunctionSpec f;
    f.family = Family::piecewise_linear;
    f.params = {v0};
    f.breaks = std::move(breaks);
    f.slopes = std::move(slopes);
    f.shape = Shape::convex;
    f.has_derivative = false;
    return f;
}

/// -f, with the shape certificate flipped.  Evaluation is an exact negation.
inline FunctionSpec negate(FunctionSpec f) {
    FunctionSpec g;
    g.family = Family::negated;
    g.seed = f.seed;
    g.has_derivative = f.has_derivative;
    switch (f.shape) {
        case Shape::convex: g.shape = Shape::concave; break;
        case Shape::concave: g.shape = Shape::convex; break;
        case Shape::unknown: g.shape = Shape::unknown; break;
    }
    g.inner = std::make_shared<const FunctionSpec>(std::move(f));
    return g;
}

inline FunctionSpec with_shape(FunctionSpec f, Shape s) {
    f.shape = s;
    return f;
}

/// Midpoint-inequality scan over grid_n points: a necessary-condition screen
/// for convexity, not a proof.  Tolerance is 1e-12 at unit scale.
inline bool check_convexity(const FunctionSpec& f, const Interval& iv, int grid_n) {
    if (grid_n < 3) throw DomainError("check_convexity needs grid_n >= 3");
    const double h = iv.width() / (grid_n - 1);
    double fx = f(iv.a);
    for (int i = 0; i + 1 < grid_n; ++i) {
        const double x1 = iv.a + h * (i + 1);
        const double fx1 = f(x1);
        const double fm = f(iv.a + h * (i + 0.5));
        const double tol =
            1e-12 * std::max({1.0, std::fabs(fx), std::fabs(fx1)});
        if (fm > 0.5 * (fx + fx1) + tol) return false;
        fx = fx1;
    }
    return true;
}

template <class F>
inline bool check_convexity_of(F&& g, const Interval& iv, int grid_n) {
    if (grid_n < 3) throw DomainError("check_convexity needs grid_n >= 3");
    const double h = iv.width() / (grid_n - 1);
    for (int i = 0; i + 1 < grid_n; ++i) {
        const double x0 = iv.a + h * i;
        const double x1 = iv.a + h * (i + 1);
        const double g0 = g(x0), g1 = g(x1);
        const double gm = g(iv.a + h * (i + 0.5));
        const double tol = 1e-12 * std::max({1.0, std::fabs(g0), std::fabs(g1)});
        if (gm > 0.5 * (g0 + g1) + tol) return false;
    }
    return true;
}

namespace detail {

/// Deterministic per-item seed derivation (splitmix64 step).
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t item) {
    std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (item + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

/// mt19937_64 with a platform-independent uniform mapping.
struct Rng {
    std::mt19937_64 engine;

    explicit Rng(std::uint64_t seed) : engine(seed) {}

    double uniform() { return static_cast<double>(engine() >> 11) * 0x1.0p-53; }
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
    std::uint64_t next_int(std::uint64_t n) { return engine() % n; }
};

inline void scale_linear_params(FunctionSpec& f, double c) {
    switch (f.family) {
        case Family::quadratic:
            for (double& p : f.params) p *= c;
            break;
        case Family::power_abs:
            f.params[0] *= c;
            f.params[3] *= c;
            break;
        case Family::exponential:
            f.params[0] *= c;
            f.params[2] *= c;
            break;
        case Family::piecewise_linear:
            f.params[0] *= c;
            for (double& s : f.slopes) s *= c;
            break;
        case Family::negated:
            throw DomainError("cannot rescale a negated wrapper");
    }
}

inline void shift_constant(FunctionSpec& f, double c) {
    switch (f.family) {
        case Family::quadratic: f.params[2] += c; break;
        case Family::power_abs: f.params[3] += c; break;
        case Family::exponential: f.params[2] += c; break;
        case Family::piecewise_linear: f.params[0] += c; break;
        case Family::negated: throw DomainError("cannot shift a negated wrapper");
    }
}

/// Rescale to max|u| <= 1 on the interval; lift the minimum to 0.05 when a
/// nonnegative variant is requested.
inline void normalize_on(FunctionSpec& f, const Interval& iv, bool nonneg) {
    constexpr int grid = 1001;
    double max_abs = 0.0, min_val = std::numeric_limits<double>::infinity();
    for (int i = 0; i < grid; ++i) {
        const double v = f(iv.a + iv.width() * i / (grid - 1));
        max_abs = std::max(max_abs, std::fabs(v));
        min_val = std::min(min_val, v);
    }
    if (max_abs > 1.0) {
        scale_linear_params(f, 1.0 / max_abs);
        min_val /= max_abs;
    }
    if (nonneg && min_val < 0.05) shift_constant(f, 0.05 - min_val);
}

}  // namespace detail

/// Deterministic convex sample from the given family.  The result is scaled
/// so max|u| <= 1 on the interval; with nonneg the grid minimum is lifted to
/// 0.05.  smooth_only restricts power_abs to exponents >= 2.
inline FunctionSpec random_convex(std::uint64_t seed, Family family, const Interval& iv,
                                  bool nonneg = false, bool smooth_only = false) {
    detail::Rng rng(seed);
    FunctionSpec f;
    switch (family) {
        case Family::quadratic:
            f = make_quadratic(0.05 + 2.0 * rng.uniform(), rng.uniform(-2.0, 2.0),
                               rng.uniform(-1.0, 1.0));
            break;
        case Family::power_abs: {
            const double k = 0.2 + 2.0 * rng.uniform();
            const double center = rng.uniform(iv.a, iv.b);
            const bool kink = !smooth_only && rng.uniform() < 0.5;
            const double p = kink ? 1.0 : rng.uniform(2.0, 4.0);
            f = make_power_abs(k, center, p, rng.uniform(-1.0, 1.0));
            break;
        }
        case Family::exponential: {
            const double k = 0.2 + 1.5 * rng.uniform();
            const double mag = 0.2 + 1.8 * rng.uniform();
            const double rate = rng.uniform() < 0.5 ? -mag : mag;
            f = make_exponential(k, rate, rng.uniform(-1.0, 1.0));
            break;
        }
        case Family::piecewise_linear: {
            const int nb = 2 + static_cast<int>(rng.next_int(7));
            std::vector<double> breaks;
            const double gap = 1e-6 * iv.width();
            while (static_cast<int>(breaks.size()) < nb) {
                breaks.clear();
                for (int i = 0; i < nb; ++i)
                    breaks.push_back(rng.uniform(iv.a + 0.01 * iv.width(), iv.b - 0.01 * iv.width()));
                std::sort(breaks.begin(), breaks.end());
                for (std::size_t i = 0; i + 1 < breaks.size(); ++i)
                    if (breaks[i + 1] - breaks[i] < gap) {
                        breaks.clear();
                        break;
                    }
            }
            std::vector<double> slopes;
            double s = rng.uniform(-3.0, 1.0);
            for (int i = 0; i < nb; ++i) {
                slopes.push_back(s);
                s += 1.5 * rng.uniform();
            }
            f = make_piecewise_linear(rng.uniform(-1.0, 1.0), std::move(breaks), std::move(slopes));
            break;
        }
        case Family::negated:
            throw DomainError("random_convex does not generate wrappers; use negate()");
    }

    detail::normalize_on(f, iv, nonneg);
    f.seed = seed;
    return f;
}

struct CorpusOptions {
    bool nonneg = false;
    bool smooth_only = false;
};

/// Seeded corpus cycling quadratic, exponential, power_abs, piecewise-linear
/// and near-linear quadratic flavors (piecewise-linear is skipped when
/// smooth_only is set).
inline std::vector<FunctionSpec> convex_corpus(std::uint64_t seed, int size, const Interval& iv,
                                               CorpusOptions opts = {}) {
    std::vector<FunctionSpec> out;
    out.reserve(static_cast<std::size_t>(std::max(size, 0)));
    for (int i = 0; i < size; ++i) {
        const std::uint64_t s = detail::mix_seed(seed, static_cast<std::uint64_t>(i));
        const int flavor = i % 5;
        FunctionSpec f;
        switch (flavor) {
            case 0: f = random_convex(s, Family::quadratic, iv, opts.nonneg); break;
            case 1: f = random_convex(s, Family::exponential, iv, opts.nonneg); break;
            case 2: f = random_convex(s, Family::power_abs, iv, opts.nonneg, opts.smooth_only); break;
            case 3:
                f = opts.smooth_only
                        ? random_convex(s, Family::exponential, iv, opts.nonneg)
                        : random_convex(s, Family::piecewise_linear, iv, opts.nonneg);
                break;
            default: {
                // near-linear regime: vanishing curvature
                detail::Rng rng(s);
                f = make_quadratic(1e-8 * (0.1 + 0.9 * rng.uniform()), rng.uniform(-1.0, 1.0),
                                   rng.uniform(-1.0, 1.0));
                detail::normalize_on(f, iv, opts.nonneg);
                f.seed = s;
                break;
            }
        }
        out.push_back(std::move(f));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Fejer weights
// ---------------------------------------------------------------------------

enum class WeightProfile { constant, affine, quadratic, power };

/// Nonnegative weight symmetric about the interval midpoint by construction:
/// v(x) = g(|x - midpoint|) for a profile g on [0, width/2].
struct WeightSpec {
    Interval interval;
    WeightProfile profile = WeightProfile::constant;
    std::vector<double> params;
    std::uint64_t seed = 0;

    double operator()(double x) const { return profile_at(std::fabs(x - interval.midpoint())); }

    double profile_at(double d) const {
        switch (profile) {
            case WeightProfile::constant: return params[0];
            case WeightProfile::affine: return params[0] + params[1] * d;
            case WeightProfile::quadratic: return params[0] + params[1] * d * d;
            case WeightProfile::power: return params[0] * std::pow(d, params[1]) + params[2];
        }
        return 0.0;
    }

    std::vector<double> kinks() const {
        if (profile == WeightProfile::constant) return {};
        return {interval.midpoint()};
    }
};

inline const char* weight_profile_name(WeightProfile p) {
    switch (p) {
        case WeightProfile::constant: return "const";
        case WeightProfile::affine: return "affine";
        case WeightProfile::quadratic: return "quad";
        case WeightProfile::power: return "pow";
    }
    return "?";
}

/// Validated construction: screens the profile for nonnegativity on a grid.
inline WeightSpec make_weight_spec(WeightProfile profile, std::vector<double> params,
                                   const Interval& iv) {
    WeightSpec w{iv, profile, std::move(params), 0};
    const std::size_t want =
        profile == WeightProfile::constant ? 1 : profile == WeightProfile::power ? 3 : 2;
    if (w.params.size() != want) throw WeightInvalid("weight profile has wrong parameter count");
    const double half = 0.5 * iv.width();
    for (int i = 0; i <= 400; ++i) {
        const double v = w.profile_at(half * i / 400.0);
        if (!std::isfinite(v) || v < 0.0)
            throw WeightInvalid("weight profile must be finite and nonnegative on the interval");
    }
    return w;
}

inline WeightSpec weight_one(const Interval& iv) {
    return make_weight_spec(WeightProfile::constant, {1.0}, iv);
}

/// Deterministic random symmetric weight; the constant profile is reachable.
inline WeightSpec make_weight(std::uint64_t seed, const Interval& iv) {
    detail::Rng rng(seed);
    const double half = 0.5 * iv.width();
    WeightSpec w{iv, WeightProfile::constant, {}, seed};
    switch (rng.next_int(4)) {
        case 0:
            w.profile = WeightProfile::constant;
            w.params = {rng.uniform(0.5, 2.0)};
            break;
        case 1: {
            w.profile = WeightProfile::affine;
            const double g0 = rng.uniform(0.2, 2.0);
            const double end = rng.uniform(0.0, 2.0);
            w.params = {g0, (end - g0) / half};
            break;
        }
        case 2:
            w.profile = WeightProfile::quadratic;
            w.params = {rng.uniform(0.1, 1.0), rng.uniform(0.0, 2.0) / std::max(1.0, half * half)};
            break;
        default:
            w.profile = WeightProfile::power;
            w.params = {rng.uniform(0.2, 1.5), rng.uniform(1.0, 3.0), rng.uniform(0.0, 1.0)};
            break;
    }
    return w;
}

// ---------------------------------------------------------------------------
// Compact text serialization (used by the CLI config format)
// ---------------------------------------------------------------------------

namespace detail {

inline std::string fmt_g17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

inline std::vector<double> parse_number_list(const std::string& s) {
    std::vector<double> out;
    std::size_t pos = 0;
    while (pos < s.size()) {
        std::size_t comma = s.find(',', pos);
        if (comma == std::string::npos) comma = s.size();
        const std::string tok = s.substr(pos, comma - pos);
        char* end = nullptr;
        const double v = std::strtod(tok.c_str(), &end);
        if (end == tok.c_str() || *end != '\0')
            throw DomainError("bad number in spec string: '" + tok + "'");
        out.push_back(v);
        pos = comma + 1;
    }
    return out;
}

}  // namespace detail

/// Round-trippable compact form, e.g. "quadratic:1,0,0" or
/// "pwl:v0,b1,s1,b2,s2" or "neg:exponential:1,1,0".
inline std::string to_string(const FunctionSpec& f) {
    using detail::fmt_g17;
    switch (f.family) {
        case Family::quadratic:
            return "quadratic:" + fmt_g17(f.params[0]) + "," + fmt_g17(f.params[1]) + "," +
                   fmt_g17(f.params[2]);
        case Family::power_abs:
            return "power_abs:" + fmt_g17(f.params[0]) + "," + fmt_g17(f.params[1]) + "," +
                   fmt_g17(f.params[2]) + "," + fmt_g17(f.params[3]);
        case Family::exponential:
            return "exponential:" + fmt_g17(f.params[0]) + "," + fmt_g17(f.params[1]) + "," +
                   fmt_g17(f.params[2]);
        case Family::piecewise_linear: {
            std::string s = "pwl:" + fmt_g17(f.params[0]);
            for (std::size_t i = 0; i < f.breaks.size(); ++i)
                s += "," + fmt_g17(f.breaks[i]) + "," + fmt_g17(f.slopes[i]);
            return s;
        }
        case Family::negated:
            return "neg:" + to_string(*f.inner);
    }
    return "";
}

inline FunctionSpec parse_function(const std::string& text) {
    const std::size_t colon = text.find(':');
    if (colon == std::string::npos) throw DomainError("function spec needs 'family:params'");
    const std::string head = text.substr(0, colon);
    const std::string rest = text.substr(colon + 1);
    if (head == "neg") return negate(parse_function(rest));
    const std::vector<double> v = detail::parse_number_list(rest);
    if (head == "quadratic") {
        if (v.size() != 3) throw DomainError("quadratic needs c2,c1,c0");
        return make_quadratic(v[0], v[1], v[2]);
    }
    if (head == "power_abs") {
        if (v.size() != 3 && v.size() != 4) throw DomainError("power_abs needs k,center,p[,c0]");
        return make_power_abs(v[0], v[1], v[2], v.size() == 4 ? v[3] : 0.0);
    }
    if (head == "exponential") {
        if (v.size() != 2 && v.size() != 3) throw DomainError("exponential needs k,rate[,c0]");
        return make_exponential(v[0], v[1], v.size() == 3 ? v[2] : 0.0);
    }
    if (head == "pwl") {
        if (v.size() < 3 || v.size() % 2 == 0)
            throw DomainError("pwl needs v0,b1,s1[,b2,s2...]");
        std::vector<double> breaks, slopes;
        for (std::size_t i = 1; i < v.size(); i += 2) {
            breaks.push_back(v[i]);
            slopes.push_back(v[i + 1]);
        }
        return make_piecewise_linear(v[0], std::move(breaks), std::move(slopes));
    }
    throw DomainError("unknown function family '" + head + "'");
}

inline std::string to_string(const WeightSpec& w) {
    using detail::fmt_g17;
    std::string s = weight_profile_name(w.profile);
    s += ":";
    for (std::size_t i = 0; i < w.params.size(); ++i) {
        if (i) s += ",";
        s += fmt_g17(w.params[i]);
    }
    return s;
}

inline WeightSpec parse_weight(const std::string& text, const Interval& iv) {
    const std::size_t colon = text.find(':');
    if (colon == std::string::npos) throw DomainError("weight spec needs 'profile:params'");
    const std::string head = text.substr(0, colon);
    const std::vector<double> v = detail::parse_number_list(text.substr(colon + 1));
    WeightProfile p;
    if (head == "const") p = WeightProfile::constant;
    else if (head == "affine") p = WeightProfile::affine;
    else if (head == "quad") p = WeightProfile::quadratic;
    else if (head == "pow") p = WeightProfile::power;
    else throw DomainError("unknown weight profile '" + head + "'");
    return make_weight_spec(p, v, iv);
}

}  // namespace fracineq
