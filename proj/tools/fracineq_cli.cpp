// Command-line front end: single inequality checks, corpus sweeps, constant
// tables, classical-limit studies and a self-test.  All numeric output is
// deterministic for a fixed configuration; an optional timestamp comment is
// the only exception and is off by default.

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include <fracineq/fracineq.hpp>

namespace {

using namespace fracineq;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitViolation = 2;
constexpr int kExitInconclusive = 3;

struct CommonOpts {
    double abs_tol = 1e-10;
    double rel_tol = 1e-10;
    int max_subdivisions = 1 << 16;
    std::string out;
    bool timestamp = false;
};

QuadratureConfig quad_config(const CommonOpts& c) {
    QuadratureConfig cfg;
    cfg.abs_tol = c.abs_tol;
    cfg.rel_tol = c.rel_tol;
    cfg.max_subdivisions = c.max_subdivisions;
    cfg.validate();
    return cfg;
}

void add_common(CLI::App* cmd, CommonOpts& c) {
    cmd->add_option("--abs-tol", c.abs_tol, "absolute quadrature tolerance");
    cmd->add_option("--rel-tol", c.rel_tol, "relative quadrature tolerance");
    cmd->add_option("--max-subdivisions", c.max_subdivisions, "adaptive panel cap");
    cmd->add_option("--out", c.out, "output file (default: stdout)");
    cmd->add_flag("--timestamp", c.timestamp, "prepend a generation-time comment");
}

void emit(const CommonOpts& c, const std::string& payload) {
    std::string full;
    if (c.timestamp) {
        char buf[64];
        std::time_t now = std::time(nullptr);
        std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
        full = std::string("# generated_at=") + buf + "\n";
    }
    full += payload;
    if (c.out.empty()) {
        std::cout << full;
        return;
    }
    std::ofstream f(c.out, std::ios::binary);
    if (!f) throw DomainError("cannot open output file '" + c.out + "'");
    f << full;
}

Ineq parse_ineq(const std::string& s) {
    if (s == "hh") return Ineq::hh;
    if (s == "fejer") return Ineq::fejer;
    if (s == "da") return Ineq::da;
    if (s == "pachpatte1") return Ineq::pachpatte1;
    if (s == "pachpatte2") return Ineq::pachpatte2;
    throw DomainError("unknown inequality '" + s + "'");
}

Interval parse_interval(const std::string& s) {
    const auto v = detail::parse_number_list(s);
    if (v.size() != 2) throw DomainError("interval must be 'a,b'");
    return Interval(v[0], v[1]);
}

std::vector<Interval> parse_intervals(const std::string& s) {
    std::vector<Interval> out;
    std::size_t pos = 0;
    while (pos <= s.size()) {
        std::size_t semi = s.find(';', pos);
        if (semi == std::string::npos) semi = s.size();
        out.push_back(parse_interval(s.substr(pos, semi - pos)));
        pos = semi + 1;
        if (semi == s.size()) break;
    }
    if (out.empty()) throw DomainError("no intervals given");
    return out;
}

std::vector<double> parse_alphas(const std::string& s, bool allow_one) {
    const auto v = detail::parse_number_list(s);
    for (double a : v)
        if (!(a > 0.0) || a > 1.0 || (!allow_one && a == 1.0))
            throw DomainError("alpha values must lie in (0, 1" +
                              std::string(allow_one ? "]" : ")"));
    if (v.empty()) throw DomainError("no alpha values given");
    return v;
}

std::optional<Shape> parse_shape(const std::string& s) {
    if (s.empty()) return std::nullopt;
    if (s == "convex") return Shape::convex;
    if (s == "concave") return Shape::concave;
    if (s == "unknown") return Shape::unknown;
    throw DomainError("shape must be convex, concave or unknown");
}

std::string family_label(const FunctionSpec& f) {
    if (f.family == Family::negated) return std::string("neg_") + family_name(f.inner->family);
    return family_name(f.family);
}

int worker_threads() {
    const char* env = std::getenv("FRACINEQ_THREADS");
    if (!env || !*env) return 1;
    const long n = std::strtol(env, nullptr, 10);
    return static_cast<int>(std::clamp(n, 1L, 64L));
}

int verdict_exit(Verdict v) {
    switch (v) {
        case Verdict::holds: return kExitOk;
        case Verdict::violated: return kExitViolation;
        case Verdict::inconclusive: return kExitInconclusive;
    }
    return kExitUsage;
}

// ---------------------------------------------------------------------------
// check
// ---------------------------------------------------------------------------

struct CheckOpts {
    CommonOpts common;
    std::string ineq;
    std::string u, v, weight;
    std::string u_shape, v_shape;
    double alpha = 0.5;
    std::string interval = "0,1";
    bool strict = false;
    bool lax = false;
};

int run_check_cmd(const CheckOpts& o) {
    const Ineq which = parse_ineq(o.ineq);
    const Interval iv = parse_interval(o.interval);
    if (!(o.alpha > 0.0) || o.alpha > 1.0) throw DomainError("alpha must lie in (0, 1]");
    const FracOrder order(o.alpha);
    const QuadratureConfig cfg = quad_config(o.common);

    FunctionSpec u = parse_function(o.u);
    if (auto s = parse_shape(o.u_shape)) u = with_shape(u, *s);

    std::optional<FunctionSpec> v;
    if (!o.v.empty()) {
        v = parse_function(o.v);
        if (auto s = parse_shape(o.v_shape)) v = with_shape(*v, *s);
    }
    std::optional<WeightSpec> w;
    if (which == Ineq::fejer) w = o.weight.empty() ? weight_one(iv) : parse_weight(o.weight, iv);

    CheckOptions opts;
    opts.strict = o.strict;
    opts.lax = o.lax;
    const InequalityReport rep =
        run_check(which, u, v ? &*v : nullptr, w ? &*w : nullptr, order, iv, cfg, opts);
    emit(o.common, report_to_json(rep).dump() + "\n");
    return verdict_exit(rep.verdict);
}

// ---------------------------------------------------------------------------
// sweep
// ---------------------------------------------------------------------------

struct SweepOpts {
    CommonOpts common;
    std::string ineq;
    std::string shape = "convex";
    std::uint64_t seed = 1;
    int size = 200;
    bool nonneg = false;
    std::string alphas = "0.05,0.1,0.25,0.5,0.75,0.9,0.99,1";
    std::string intervals = "0,1";
    int weights = 0;  // 0: constant weight 1
    std::uint64_t weights_seed = 7;
    std::string functions;  // explicit ';'-separated corpus overriding seed/size
};

struct SweepRow {
    std::string csv;
    int klass;  // exit-code class of this row
};

int run_sweep_cmd(const SweepOpts& o) {
    const Ineq which = parse_ineq(o.ineq);
    const auto shape_mode = parse_shape(o.shape);
    if (!shape_mode || *shape_mode == Shape::unknown)
        throw DomainError("sweep shape must be convex or concave");
    const auto alphas = parse_alphas(o.alphas, true);
    const auto intervals = parse_intervals(o.intervals);
    const QuadratureConfig cfg = quad_config(o.common);

    const bool product = which == Ineq::pachpatte1 || which == Ineq::pachpatte2;
    CorpusOptions copts;
    copts.nonneg = o.nonneg || product;
    copts.smooth_only = which == Ineq::da;

    struct Task {
        FunctionSpec u;
        std::optional<FunctionSpec> v;
        std::optional<WeightSpec> w;
        double alpha;
        Interval iv;
    };
    std::vector<Task> tasks;
    for (const Interval& iv : intervals) {
        std::vector<FunctionSpec> corpus;
        std::vector<FunctionSpec> partners;
        if (!o.functions.empty()) {
            std::size_t pos = 0;
            while (pos <= o.functions.size()) {
                std::size_t semi = o.functions.find(';', pos);
                if (semi == std::string::npos) semi = o.functions.size();
                corpus.push_back(parse_function(o.functions.substr(pos, semi - pos)));
                pos = semi + 1;
                if (semi == o.functions.size()) break;
            }
        } else {
            corpus = convex_corpus(o.seed, o.size, iv, copts);
            if (*shape_mode == Shape::concave)
                for (auto& f : corpus) f = negate(f);
        }
        if (product) {
            partners = convex_corpus(o.seed + 0x9E3779B97F4A7C15ULL,
                                     static_cast<int>(corpus.size()), iv, copts);
            if (*shape_mode == Shape::concave)
                for (auto& f : partners) f = negate(f);
        }
        for (std::size_t i = 0; i < corpus.size(); ++i) {
            std::optional<WeightSpec> w;
            if (which == Ineq::fejer)
                w = o.weights > 0
                        ? make_weight(
                              detail::mix_seed(o.weights_seed,
                                               static_cast<std::uint64_t>(
                                                   i % static_cast<std::size_t>(o.weights))),
                              iv)
                        : weight_one(iv);
            for (double alpha : alphas)
                tasks.push_back(Task{corpus[i],
                                     product ? std::optional<FunctionSpec>(partners[i])
                                             : std::nullopt,
                                     w, alpha, iv});
        }
    }

    std::vector<SweepRow> rows(tasks.size());
    auto run_task = [&](std::size_t idx) {
        const Task& t = tasks[idx];
        const FracOrder order(t.alpha);
        const auto blank_report = [&] {
            return InequalityReport{which,
                                    t.alpha,
                                    t.iv,
                                    kernel_scale(order, t.iv).value,
                                    t.u.shape,
                                    {},
                                    {},
                                    0.0,
                                    0.0,
                                    0,
                                    Verdict::inconclusive};
        };
        // certificate screen: the function must match the sweep mode
        if (which != Ineq::da && t.u.shape != *shape_mode) {
            rows[idx] = {sweep_csv_row(blank_report(), t.u.seed, family_label(t.u),
                                       "certificate_mismatch"),
                         kExitUsage};
            return;
        }
        try {
            const InequalityReport rep = run_check(which, t.u, t.v ? &*t.v : nullptr,
                                                   t.w ? &*t.w : nullptr, order, t.iv, cfg);
            rows[idx] = {sweep_csv_row(rep, t.u.seed, family_label(t.u)),
                         verdict_exit(rep.verdict)};
        } catch (const Error& e) {
            rows[idx] = {sweep_csv_row(blank_report(), t.u.seed, family_label(t.u),
                                       std::string("error: ") + e.what()),
                         kExitUsage};
        }
    };

    const int threads = worker_threads();
    if (threads <= 1 || tasks.size() < 2) {
        for (std::size_t i = 0; i < tasks.size(); ++i) run_task(i);
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < threads; ++t)
            pool.emplace_back([&, t] {
                for (std::size_t i = static_cast<std::size_t>(t); i < tasks.size();
                     i += static_cast<std::size_t>(threads))
                    run_task(i);
            });
        for (auto& th : pool) th.join();
    }

    long holds = 0, violated = 0, inconclusive = 0, errors = 0;
    std::string payload =
        std::string("# schema=") + k_sweep_schema + "\n" + sweep_csv_header() + "\n";
    for (const SweepRow& r : rows) {
        payload += r.csv + "\n";
        switch (r.klass) {
            case kExitOk: ++holds; break;
            case kExitViolation: ++violated; break;
            case kExitInconclusive: ++inconclusive; break;
            default: ++errors; break;
        }
    }
    std::ostringstream summary;
    summary << "# summary rows=" << rows.size() << " holds=" << holds << " violated=" << violated
            << " inconclusive=" << inconclusive << " errors=" << errors << "\n";
    payload += summary.str();
    emit(o.common, payload);

    if (errors) return kExitUsage;
    if (violated) return kExitViolation;
    if (inconclusive) return kExitInconclusive;
    return kExitOk;
}

// ---------------------------------------------------------------------------
// constants
// ---------------------------------------------------------------------------

struct ConstantsOpts {
    CommonOpts common;
    std::string a_grid;  // "min,max,count" log-spaced
    std::string a_list;  // explicit values, 0 allowed
    std::string alphas;  // alternative addressing, 1 allowed
    std::string interval = "0,1";
};

int run_constants_cmd(const ConstantsOpts& o) {
    const Interval iv = parse_interval(o.interval);
    std::vector<NormalizedConstants> table;
    if (!o.a_grid.empty()) {
        const auto g = detail::parse_number_list(o.a_grid);
        if (g.size() != 3 || !(g[0] > 0.0) || !(g[1] > g[0]) || g[2] < 2)
            throw DomainError("A grid must be 'min,max,count' with 0 < min < max, count >= 2");
        const int n = static_cast<int>(g[2]);
        for (int i = 0; i < n; ++i) {
            const double t = static_cast<double>(i) / (n - 1);
            const double A = g[0] * std::pow(g[1] / g[0], t);
            table.push_back(normalized_constants(KernelScale{A}, iv));
        }
    } else if (!o.a_list.empty()) {
        for (double A : detail::parse_number_list(o.a_list))
            table.push_back(normalized_constants(KernelScale{A}, iv));
    } else if (!o.alphas.empty()) {
        for (double a : parse_alphas(o.alphas, true))
            table.push_back(normalized_constants(FracOrder(a), iv));
    } else {
        throw DomainError("constants needs --A-grid, --A-list or --alphas");
    }

    std::string payload = std::string("# schema=") + k_constants_schema + "\n";
    payload +=
        "A,alpha,norm_midpoint,norm_dragomir,norm_p2,norm_p1,branch_midpoint,branch_dragomir,"
        "branch_p2,branch_p1\n";
    auto branch_name = [](Branch b) { return b == Branch::series ? "series" : "direct"; };
    for (const auto& r : table) {
        payload += fmt_sci(r.A) + "," + fmt_sci(r.alpha) + "," + fmt_sci(r.midpoint) + "," +
                   fmt_sci(r.dragomir) + "," + fmt_sci(r.p2) + "," + fmt_sci(r.p1) + "," +
                   branch_name(r.b_midpoint) + "," + branch_name(r.b_dragomir) + "," +
                   branch_name(r.b_p2) + "," + branch_name(r.b_p1) + "\n";
    }
    emit(o.common, payload);
    return kExitOk;
}

// ---------------------------------------------------------------------------
// limits
// ---------------------------------------------------------------------------

struct LimitsOpts {
    CommonOpts common;
    std::string ineq = "hh";
    std::string u, v, weight;
    std::string interval = "0,1";
    std::string alphas = "0.9,0.99,0.999";
};

int run_limits_cmd(const LimitsOpts& o) {
    const Ineq which = parse_ineq(o.ineq);
    const Interval iv = parse_interval(o.interval);
    if (o.u.empty()) throw DomainError("limits needs --u");
    const FunctionSpec u = parse_function(o.u);
    std::optional<FunctionSpec> v;
    if (!o.v.empty()) v = parse_function(o.v);
    std::optional<WeightSpec> w;
    if (which == Ineq::fejer) w = o.weight.empty() ? weight_one(iv) : parse_weight(o.weight, iv);

    const LimitSweep sweep =
        classical_limit_sweep(which, u, v ? &*v : nullptr, w ? &*w : nullptr, iv,
                              parse_alphas(o.alphas, false), quad_config(o.common));

    std::string payload = std::string("# schema=") + k_limits_schema + "\n";
    payload += "alpha," + sweep.tracked_name + ",classical,abs_error\n";
    for (const auto& row : sweep.rows)
        payload += fmt_sci(row.alpha) + "," + fmt_sci(row.tracked) + "," +
                   fmt_sci(sweep.classical) + "," + fmt_sci(row.abs_error) + "\n";
    payload += std::string("# monotone_decrease=") + (sweep.monotone ? "true" : "false") + "\n";
    emit(o.common, payload);
    return kExitOk;
}

// ---------------------------------------------------------------------------
// selftest
// ---------------------------------------------------------------------------

struct SelftestOpts {
    CommonOpts common;
    int size = 24;
};

int run_selftest_cmd(const SelftestOpts& o) {
    const QuadratureConfig cfg = quad_config(o.common);
    std::ostringstream out;
    long fails = 0, inconclusive = 0;

    auto item = [&](const std::string& name, bool ok) {
        out << (ok ? "ok " : "FAIL ") << name << "\n";
        if (!ok) ++fails;
    };
    // a quadrature-backed item is only certified when its error margin is
    // small against the scale of what it measured
    auto gated = [&](const std::string& name, bool ok, double margin, double scale) {
        if (margin > 1e-4 * std::max(1.0, std::fabs(scale))) {
            out << "inconclusive " << name << " (margin " << fmt_sci(margin) << ")\n";
            ++inconclusive;
        } else {
            item(name, ok);
        }
    };

    {
        bool ok = true;
        for (double alpha : {1e-3, 0.1, 0.5, 0.9, 0.999}) {
            for (auto iv : {Interval(0, 1), Interval(-2, 3)}) {
                const double A = kernel_scale(FracOrder(alpha), iv).value;
                const double lhs = coef_midpoint(FracOrder(alpha), iv).value * 2.0 *
                                   detail::one_minus_exp_neg(A) / (1.0 - alpha);
                ok = ok && std::fabs(lhs - 1.0) < 1e-13;
            }
        }
        item("kernel normalization identity", ok);
    }
    {
        bool ok = true;
        for (double A : {1e-3, 0.1, 1.0, 10.0, 100.0}) {
            const DragomirMoments m = dragomir_moments(KernelScale{A});
            const double em_half = detail::one_minus_exp_neg(0.5 * A);
            ok = ok && std::fabs(m.i1 + m.i2 - em_half * em_half / A) <= 1e-13 * (m.i1 + m.i2);
        }
        item("moment-sum identity", ok);
    }
    {
        bool ok = true;
        for (double mult : {0.5, 0.99, 1.01, 2.0}) {
            const double a1 = detail::k_ratio_threshold * mult;
            ok = ok && std::fabs(detail::mass_ratio_series(a1) - detail::mass_ratio_direct(a1)) <=
                           1e-12 * detail::mass_ratio_direct(a1);
            ok = ok &&
                 std::fabs(detail::dragomir_norm_series(a1) - detail::dragomir_norm_direct(a1)) <=
                     1e-12 * detail::dragomir_norm_direct(a1);
            const double a2 = detail::k_cubic_threshold * mult;
            ok = ok &&
                 std::fabs(detail::pachpatte_c1_series(a2) - detail::pachpatte_c1_direct(a2)) <=
                     1e-12 * detail::pachpatte_c1_direct(a2);
            ok = ok &&
                 std::fabs(detail::pachpatte_c2_series(a2) - detail::pachpatte_c2_direct(a2)) <=
                     1e-12 * detail::pachpatte_c2_direct(a2);
            ok = ok && std::fabs(detail::moment_i1_series(a2) - detail::moment_i1_direct(a2)) <=
                           1e-12 * detail::moment_i1_direct(a2);
            ok = ok && std::fabs(detail::moment_i2_series(a2) - detail::moment_i2_direct(a2)) <=
                           1e-12 * detail::moment_i2_direct(a2);
        }
        item("series/direct branch agreement", ok);
    }
    {
        bool ok = true;
        for (int i = 0; i <= 90; ++i) {
            const double A = std::pow(10.0, -6.0 + 9.0 * i / 90.0);
            ok = ok && pachpatte_P1(KernelScale{A}).value > 0.0 &&
                 pachpatte_P2(KernelScale{A}).value > 0.0;
        }
        item("product-bound numerators positive", ok);
    }
    {
        const NormalizedConstants tiny = normalized_constants(KernelScale{1e-8}, Interval(0, 1));
        const NormalizedConstants exact = normalized_constants(KernelScale{0.0}, Interval(0, 1));
        const bool ok = std::fabs(tiny.midpoint - 1.0) < 1e-7 &&
                        std::fabs(tiny.dragomir - 1.0) < 1e-7 &&
                        std::fabs(tiny.p2 - 1.0) < 1e-7 && std::fabs(tiny.p1 - 1.0) < 1e-7 &&
                        exact.midpoint == 1.0 && exact.dragomir == 1.0 && exact.p2 == 1.0 &&
                        exact.p1 == 1.0;
        item("limit constants normalize to 1", ok);
    }
    // branch visibility rows
    {
        auto branch_name = [](Branch b) { return b == Branch::series ? "series" : "direct"; };
        for (double A : {1e-3, 1.0}) {
            const NormalizedConstants r = normalized_constants(KernelScale{A}, Interval(0, 1));
            out << "info constants A=" << fmt_sci(r.A) << " branches " << branch_name(r.b_midpoint)
                << "," << branch_name(r.b_dragomir) << "," << branch_name(r.b_p2) << ","
                << branch_name(r.b_p1) << "\n";
        }
    }
    // oracle cross-check on a reduced corpus
    {
        const Interval iv(-1, 1.5);
        bool ok = true;
        double worst_margin = 0.0, scale = 1.0;
        for (const auto& u : convex_corpus(101, std::max(4, o.size / 4), iv)) {
            for (double alpha : {0.3, 0.9}) {
                const FracOrder order(alpha);
                const auto fast = left_integral(u, order, iv.a, iv.b, cfg);
                const auto slow = oracle::brute_frac([&u](double s) { return u(s); }, order, iv,
                                                     oracle::Side::left, 1e-9);
                ok = ok && std::fabs(fast.value - slow.value) <= fast.est_error + 1e-9 + 1e-12;
                worst_margin = std::max(worst_margin, fast.est_error);
                scale = std::max(scale, std::fabs(fast.value));
            }
        }
        gated("adaptive vs brute-force integrator", ok, worst_margin, scale);
    }
    // inequality spot checks
    {
        const Interval iv(0, 1);
        const auto corpus = convex_corpus(55, o.size, iv);
        const auto nonneg = convex_corpus(77, o.size, iv, {.nonneg = true});
        const auto smooth = convex_corpus(91, o.size, iv, {.nonneg = false, .smooth_only = true});
        bool ok = true;
        double worst_margin = 0.0, scale = 1.0;
        auto absorb = [&](const InequalityReport& rep) {
            ok = ok && rep.verdict == Verdict::holds;
            worst_margin = std::max(worst_margin, rep.margin);
            for (const auto& t : rep.terms) scale = std::max(scale, std::fabs(t.value));
        };
        for (int i = 0; i < o.size; ++i) {
            const FracOrder order(i % 2 ? 0.35 : 0.85);
            absorb(check_hermite_hadamard(corpus[i], order, iv, cfg));
            absorb(check_fejer(corpus[i], make_weight(i, iv), order, iv, cfg));
            absorb(check_dragomir_agarwal(smooth[i], order, iv, cfg));
            absorb(check_pachpatte_first(nonneg[i], nonneg[(i + 1) % o.size], order, iv, cfg));
            absorb(check_pachpatte_second(nonneg[i], nonneg[(i + 1) % o.size], order, iv, cfg));
        }
        gated("inequality chains on the reduced corpus", ok, worst_margin, scale);
    }
    // proof identity on a smooth sample
    {
        bool ok = true;
        double worst_margin = 0.0;
        for (const auto& u : convex_corpus(13, std::max(4, o.size / 4), Interval(0, 1),
                                           {.nonneg = false, .smooth_only = true})) {
            const auto r = dragomir_identity_residual(u, FracOrder(0.45), Interval(0, 1), cfg);
            ok = ok && r.residual <= 10.0 * r.margin;
            worst_margin = std::max(worst_margin, r.margin);
        }
        gated("trapezoid-gap proof identity", ok, worst_margin, 1.0);
    }

    out << "# summary fails=" << fails << " inconclusive=" << inconclusive << "\n";
    emit(o.common, out.str());
    if (fails) return kExitViolation;
    if (inconclusive) return kExitInconclusive;
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exponential-kernel fractional integral inequality toolkit"};
    app.require_subcommand(1);
    app.set_config("--config", "", "read options from a key=value file");
    // function/interval specs contain commas; keep them as single values
    app.get_config_formatter_base()->arrayDelimiter('\x1f');

    CheckOpts check;
    CLI::App* c = app.add_subcommand("check", "run one inequality check, emit a JSON report")->configurable();
    c->add_option("--ineq", check.ineq, "hh | fejer | da | pachpatte1 | pachpatte2")->required();
    c->add_option("--u", check.u, "function spec, e.g. quadratic:1,0,0")->required();
    c->add_option("--v", check.v, "second function for the product inequalities");
    c->add_option("--weight", check.weight, "weight spec for fejer, e.g. affine:1,1");
    c->add_option("--u-shape", check.u_shape, "override the certificate of --u");
    c->add_option("--v-shape", check.v_shape, "override the certificate of --v");
    c->add_option("--alpha", check.alpha, "fractional order in (0, 1]")->required();
    c->add_option("--interval", check.interval, "interval 'a,b'")->required();
    c->add_flag("--strict", check.strict, "enforce the literal positivity/0<=a hypotheses");
    c->add_flag("--lax", check.lax, "skip nonnegativity screens; verdict becomes inconclusive");
    add_common(c, check.common);

    SweepOpts sweep;
    CLI::App* s = app.add_subcommand("sweep", "run a corpus sweep, emit CSV")->configurable();
    s->add_option("--ineq", sweep.ineq)->required();
    s->add_option("--shape", sweep.shape, "expected certificate: convex | concave");
    s->add_option("--seed", sweep.seed, "corpus seed");
    s->add_option("--size", sweep.size, "corpus size");
    s->add_flag("--nonneg", sweep.nonneg, "lift the corpus to nonnegative values");
    s->add_option("--alphas", sweep.alphas, "comma-separated alpha values in (0, 1]");
    s->add_option("--intervals", sweep.intervals, "semicolon-separated 'a,b' intervals");
    s->add_option("--weights", sweep.weights, "number of random weights for fejer (0: v = 1)");
    s->add_option("--weights-seed", sweep.weights_seed);
    s->add_option("--functions", sweep.functions,
                  "explicit ';'-separated function specs instead of a seeded corpus");
    add_common(s, sweep.common);

    ConstantsOpts consts;
    CLI::App* k = app.add_subcommand("constants", "tabulate the normalized kernel constants")->configurable();
    k->add_option("--A-grid", consts.a_grid, "log-spaced grid 'min,max,count'");
    k->add_option("--A-list", consts.a_list, "explicit A values (0 selects the exact branch)");
    k->add_option("--alphas", consts.alphas, "address rows by alpha instead of A");
    k->add_option("--interval", consts.interval);
    add_common(k, consts.common);

    LimitsOpts limits;
    CLI::App* l = app.add_subcommand("limits", "classical-limit convergence study")->configurable();
    l->add_option("--ineq", limits.ineq);
    l->add_option("--u", limits.u)->required();
    l->add_option("--v", limits.v);
    l->add_option("--weight", limits.weight);
    l->add_option("--interval", limits.interval);
    l->add_option("--alphas", limits.alphas, "increasing alphas in (0, 1)");
    add_common(l, limits.common);

    SelftestOpts self;
    CLI::App* t = app.add_subcommand("selftest", "run the built-in invariant suite")->configurable();
    t->add_option("--size", self.size, "reduced corpus size");
    add_common(t, self.common);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*c) return run_check_cmd(check);
        if (*s) return run_sweep_cmd(sweep);
        if (*k) return run_constants_cmd(consts);
        if (*l) return run_limits_cmd(limits);
        if (*t) return run_selftest_cmd(self);
    } catch (const NonConvergent& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitViolation;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
