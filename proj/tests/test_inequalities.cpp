#include <doctest.h>

#include <cmath>
#include <vector>

#include <fracineq/inequalities.hpp>
#include <fracineq/oracle.hpp>

using namespace fracineq;

namespace {

double rel_err(double got, double want) {
    if (want == 0.0) return std::fabs(got);
    return std::fabs(got - want) / std::fabs(want);
}

const QuadratureConfig kCfg{};

}  // namespace

TEST_CASE("mean-value chain: constant function collapses to equality") {
    const FunctionSpec u = make_quadratic(0, 0, 5);
    for (double alpha : {0.2, 0.5, 1.0}) {
        const auto rep = check_hermite_hadamard(u, FracOrder(alpha), Interval(0, 1), kCfg);
        CHECK(rep.verdict == Verdict::holds);
        for (const auto& t : rep.terms) CHECK(rel_err(t.value, 5.0) < 1e-12);
        for (double s : rep.slacks) CHECK(std::fabs(s) <= rep.margin);
    }
}

TEST_CASE("mean-value chain: linear function is the equality case") {
    const FunctionSpec u = make_quadratic(0, 1, 0);
    for (double alpha : {0.3, 0.8, 1.0}) {
        const auto rep = check_hermite_hadamard(u, FracOrder(alpha), Interval(0, 1), kCfg);
        CHECK(rep.verdict == Verdict::holds);
        for (const auto& t : rep.terms) CHECK(std::fabs(t.value - 0.5) <= rep.margin);
        for (double s : rep.slacks) CHECK(std::fabs(s) <= rep.margin);
    }
}

TEST_CASE("mean-value chain: x^2 at alpha = 1/2 matches the closed form") {
    const auto rep =
        check_hermite_hadamard(make_quadratic(1, 0, 0), FracOrder(0.5), Interval(0, 1), kCfg);
    CHECK(rep.verdict == Verdict::holds);
    CHECK(rep.terms[0].value == 0.25);
    // 0.25 (6 - 14/e)/(1 - 1/e), 50-digit reference
    CHECK(rel_err(rep.terms[1].value, 0.33604658626134715) < 1e-11);
    CHECK(rep.terms[1].value > 0.25);
    CHECK(rep.terms[1].value < 0.5);
    CHECK(rep.terms[2].value == 0.5);
    for (double s : rep.slacks) CHECK(s > rep.margin);

    // independent oracle for the fractional mean
    const auto ol = oracle::brute_frac([](double s) { return s * s; }, FracOrder(0.5),
                                       Interval(0, 1), oracle::Side::left, 1e-11);
    const auto orr = oracle::brute_frac([](double s) { return s * s; }, FracOrder(0.5),
                                        Interval(0, 1), oracle::Side::right, 1e-11);
    const double coef = coef_midpoint(FracOrder(0.5), Interval(0, 1)).value;
    CHECK(rel_err(rep.terms[1].value, coef * (ol.value + orr.value)) < 1e-10);
}

TEST_CASE("mean-value chain at alpha = 1 is the classical chain") {
    const auto rep =
        check_hermite_hadamard(make_quadratic(1, 0, 0), FracOrder(1.0), Interval(0, 1), kCfg);
    CHECK(rel_err(rep.terms[1].value, 1.0 / 3.0) < 1e-13);
}

TEST_CASE("missing certificate raises ShapeUnknown") {
    const FunctionSpec u = with_shape(make_quadratic(1, 0, 0), Shape::unknown);
    CHECK_THROWS_AS(check_hermite_hadamard(u, FracOrder(0.5), Interval(0, 1), kCfg), ShapeUnknown);
}

TEST_CASE("strict mode enforces the literal hypotheses") {
    const FunctionSpec pos = make_quadratic(1, 0, 1);  // positive everywhere
    const FunctionSpec signed_u = make_quadratic(1, 0, -1);
    CheckOptions strict;
    strict.strict = true;
    CHECK(check_hermite_hadamard(pos, FracOrder(0.5), Interval(0, 1), kCfg, strict).verdict ==
          Verdict::holds);
    CHECK_THROWS_AS(check_hermite_hadamard(pos, FracOrder(0.5), Interval(-1, 1), kCfg, strict),
                    DomainError);
    CHECK_THROWS_AS(check_hermite_hadamard(signed_u, FracOrder(0.5), Interval(0, 1), kCfg, strict),
                    DomainError);
    // default mode accepts both
    CHECK(check_hermite_hadamard(signed_u, FracOrder(0.5), Interval(-1, 1), kCfg).verdict ==
          Verdict::holds);
}

TEST_CASE("concave chain is the convex chain re-negated") {
    const Interval iv(-2, 3);
    for (std::uint64_t seed : {1, 5, 9}) {
        const FunctionSpec u = random_convex(seed, Family::quadratic, iv);
        const FunctionSpec nu = negate(u);
        const auto convex_rep = check_hermite_hadamard(u, FracOrder(0.4), iv, kCfg);
        const auto concave_rep = check_hermite_hadamard(nu, FracOrder(0.4), iv, kCfg);
        CHECK(concave_rep.verdict == Verdict::holds);
        CHECK(concave_rep.shape == Shape::concave);
        for (std::size_t i = 0; i < 3; ++i)
            CHECK(concave_rep.terms[i].value == -convex_rep.terms[i].value);
        // reversed chain: midpoint >= mean >= endpoint average
        CHECK(concave_rep.terms[0].value >= concave_rep.terms[1].value - concave_rep.margin);
        CHECK(concave_rep.terms[1].value >= concave_rep.terms[2].value - concave_rep.margin);
    }
}

TEST_CASE("scale equivariance of the mean-value report") {
    const FunctionSpec base = random_convex(13, Family::exponential, Interval(0, 1));
    const auto rep1 = check_hermite_hadamard(base, FracOrder(0.6), Interval(0, 1), kCfg);
    for (double c : {1e-3, 1.0, 1e3}) {
        FunctionSpec scaled = base;
        detail::scale_linear_params(scaled, c);
        const auto rep = check_hermite_hadamard(scaled, FracOrder(0.6), Interval(0, 1), kCfg);
        CHECK(rep.verdict == rep1.verdict);
        for (std::size_t i = 0; i < 3; ++i)
            CHECK(rel_err(rep.terms[i].value, c * rep1.terms[i].value) < 1e-12);
    }
}

TEST_CASE("margin stays at the 1e-8 floor across the sweep intervals") {
    for (auto iv : {Interval(0, 1), Interval(-2, 3), Interval(5, 5.01)}) {
        for (double alpha : {0.05, 0.5, 1.0}) {
            const FunctionSpec u = random_convex(3, Family::exponential, iv);
            const auto rep = check_hermite_hadamard(u, FracOrder(alpha), iv, kCfg);
            CAPTURE(iv.a);
            CAPTURE(alpha);
            CHECK(rep.margin == 1e-8);  // quadrature error stays below the floor
        }
    }
}

TEST_CASE("weighted chain with v = 1 scales the unweighted chain") {
    const Interval iv(0, 1);
    const WeightSpec one = weight_one(iv);
    for (std::uint64_t seed : {2, 8}) {
        const FunctionSpec u = random_convex(seed, Family::power_abs, iv);
        for (double alpha : {0.3, 1.0}) {
            const auto hh = check_hermite_hadamard(u, FracOrder(alpha), iv, kCfg);
            const auto fj = check_fejer(u, one, FracOrder(alpha), iv, kCfg);
            CHECK(fj.verdict == hh.verdict);
            const double mass =
                alpha == 1.0 ? 2.0 * iv.width()
                             : 2.0 *
                                   detail::one_minus_exp_neg(
                                       kernel_scale(FracOrder(alpha), iv).value) /
                                   (1.0 - alpha);
            for (std::size_t i = 0; i < 3; ++i)
                CHECK(rel_err(fj.terms[i].value, hh.terms[i].value * mass) < 1e-10);
        }
    }
}

TEST_CASE("weighted chain: linear u is the equality case for any weight") {
    const Interval iv(0, 1);
    const FunctionSpec u = make_quadratic(0, 1, 0);
    for (std::uint64_t seed : {0, 3, 7}) {
        const WeightSpec w = make_weight(seed, iv);
        const auto rep = check_fejer(u, w, FracOrder(0.45), iv, kCfg);
        CHECK(rep.verdict == Verdict::holds);
        for (double s : rep.slacks) CHECK(std::fabs(s) <= rep.margin);
    }
}

TEST_CASE("weighted chain: x^2 with the tent weight, oracle cross-check") {
    const Interval iv(0, 1);
    // v(x) = 1 + |x - 1/2|
    const WeightSpec w = make_weight_spec(WeightProfile::affine, {1.0, 1.0}, iv);
    const auto rep = check_fejer(make_quadratic(1, 0, 0), w, FracOrder(0.5), iv, kCfg);
    CHECK(rep.verdict == Verdict::holds);

    auto uv = [](double s) { return s * s * (1.0 + std::fabs(s - 0.5)); };
    const auto l = oracle::brute_frac(uv, FracOrder(0.5), iv, oracle::Side::left, 1e-11);
    const auto r = oracle::brute_frac(uv, FracOrder(0.5), iv, oracle::Side::right, 1e-11);
    CHECK(std::fabs(rep.terms[1].value - (l.value + r.value)) < 1e-9);
}

TEST_CASE("weighted chain screens invalid weights") {
    const Interval iv(0, 1);
    WeightSpec bad{iv, WeightProfile::affine, {1.0, -10.0}, 0};  // negative near the edges
    CHECK_THROWS_AS(check_fejer(make_quadratic(1, 0, 0), bad, FracOrder(0.5), iv, kCfg),
                    WeightInvalid);
}

TEST_CASE("weighted chain: concave direction reverses") {
    const Interval iv(0, 1);
    const WeightSpec w = make_weight(5, iv);
    const FunctionSpec u = negate(random_convex(4, Family::quadratic, iv));
    const auto rep = check_fejer(u, w, FracOrder(0.7), iv, kCfg);
    CHECK(rep.shape == Shape::concave);
    CHECK(rep.verdict == Verdict::holds);
}

TEST_CASE("trapezoid-gap bound: linear function has zero gap") {
    const auto rep =
        check_dragomir_agarwal(make_quadratic(0, 2, 1), FracOrder(0.5), Interval(0, 1), kCfg);
    CHECK(rep.verdict == Verdict::holds);
    CHECK(rep.terms[0].value <= rep.margin);
}

TEST_CASE("trapezoid-gap bound: x^2 classical and fractional") {
    SUBCASE("alpha = 1 reproduces the classical constants") {
        const auto rep =
            check_dragomir_agarwal(make_quadratic(1, 0, 0), FracOrder(1.0), Interval(0, 1), kCfg);
        CHECK(std::fabs(rep.terms[0].value - 1.0 / 6.0) < 1e-10);
        CHECK(rel_err(rep.terms[1].value, 0.25) < 1e-15);
        CHECK(rep.verdict == Verdict::holds);
    }
    SUBCASE("alpha = 1/2") {
        const auto rep =
            check_dragomir_agarwal(make_quadratic(1, 0, 0), FracOrder(0.5), Interval(0, 1), kCfg);
        // gap = |1/2 - 0.25(6-14/e)/(1-1/e)|
        CHECK(rel_err(rep.terms[0].value, 0.16395341373865285) < 1e-10);
        CHECK(rel_err(rep.terms[1].value, std::tanh(0.25)) < 1e-14);
        CHECK(rep.verdict == Verdict::holds);
    }
}

TEST_CASE("trapezoid-gap preconditions") {
    const Interval iv(0, 1);
    CHECK_THROWS_AS(
        check_dragomir_agarwal(make_piecewise_linear(0, {0.5}, {1.0}), FracOrder(0.5), iv, kCfg),
        NoDerivative);
    // |u'| of k|x-c|^1.5 is concave: the screen must reject it
    CHECK_THROWS_AS(
        check_dragomir_agarwal(make_power_abs(1.0, 0.5, 1.5), FracOrder(0.5), iv, kCfg),
        ShapeUnknown);
}

TEST_CASE("bound constant factors through the endpoint moments") {
    for (auto iv : {Interval(0, 1), Interval(-2, 3)}) {
        for (double alpha : {0.1, 0.4, 0.9}) {
            const FunctionSpec u = random_convex(6, Family::exponential, iv);
            const auto rep = check_dragomir_agarwal(u, FracOrder(alpha), iv, kCfg);
            const double A = kernel_scale(FracOrder(alpha), iv).value;
            const DragomirMoments m = dragomir_moments(KernelScale{A});
            const double dsum =
                std::fabs(eval_derivative(u, iv.a)) + std::fabs(eval_derivative(u, iv.b));
            const double via_moments =
                iv.width() / (2.0 * detail::one_minus_exp_neg(A)) * (m.i1 + m.i2) * dsum;
            CHECK(rel_err(rep.terms[1].value, via_moments) <= 1e-12);
        }
    }
}

TEST_CASE("proof identity residual vanishes on both quadrature routes") {
    const Interval unit(0, 1);
    SUBCASE("linear functions") {
        const auto r =
            dragomir_identity_residual(make_quadratic(0, 3, -1), FracOrder(0.5), unit, kCfg);
        CHECK(r.residual <= r.margin);
    }
    SUBCASE("x^2 at alpha = 1/2") {
        const auto r =
            dragomir_identity_residual(make_quadratic(1, 0, 0), FracOrder(0.5), unit, kCfg);
        CHECK(r.residual <= 1e-9);
    }
    SUBCASE("e^x at alpha = 1/4 on [-1, 1]") {
        const auto r = dragomir_identity_residual(make_exponential(1.0, 1.0), FracOrder(0.25),
                                                  Interval(-1, 1), kCfg);
        CHECK(r.residual <= 1e-9);
    }
    SUBCASE("classical branch") {
        const auto r =
            dragomir_identity_residual(make_exponential(1.0, 1.0), FracOrder(1.0), unit, kCfg);
        CHECK(r.residual <= 10.0 * r.margin);
    }
    SUBCASE("kinked functions are rejected") {
        CHECK_THROWS_AS(dragomir_identity_residual(make_piecewise_linear(0, {0.5}, {1.0}),
                                                   FracOrder(0.5), unit, kCfg),
                        NoDerivative);
    }
}

TEST_CASE("first product bound: constants are the equality case") {
    const FunctionSpec one = make_quadratic(0, 0, 1);
    for (double alpha : {0.3, 0.75}) {
        const auto rep = check_pachpatte_first(one, one, FracOrder(alpha), Interval(0, 1), kCfg);
        CHECK(rep.verdict == Verdict::holds);
        CHECK(std::fabs(rep.slacks[0]) <= rep.margin);
        const double A = rep.A;
        CHECK(rel_err(rep.terms[0].value, detail::one_minus_exp_neg(A) / A) < 1e-10);
        CHECK(rel_err(rep.terms[1].value, detail::one_minus_exp_neg(A) / A) < 1e-13);
    }
}

TEST_CASE("first product bound: classical equality for u = v = x") {
    const FunctionSpec id = make_quadratic(0, 1, 0);
    const auto rep = check_pachpatte_first(id, id, FracOrder(1.0), Interval(0, 1), kCfg);
    CHECK(rep.verdict == Verdict::holds);
    CHECK(rel_err(rep.terms[0].value, 1.0 / 3.0) < 1e-12);
    CHECK(rel_err(rep.terms[1].value, 1.0 / 3.0) < 1e-15);
    CHECK(std::fabs(rep.slacks[0]) <= rep.margin);
}

TEST_CASE("first product bound: strict slack with an oracle cross-check") {
    const FunctionSpec u = make_quadratic(1, 0, 0);
    const FunctionSpec v = make_exponential(1.0, 1.0);
    const auto rep = check_pachpatte_first(u, v, FracOrder(0.5), Interval(0, 1), kCfg);
    CHECK(rep.verdict == Verdict::holds);
    CHECK(rep.slacks[0] > rep.margin);

    auto uv = [](double s) { return s * s * std::exp(s); };
    const auto l =
        oracle::brute_frac(uv, FracOrder(0.5), Interval(0, 1), oracle::Side::left, 1e-11);
    const auto r =
        oracle::brute_frac(uv, FracOrder(0.5), Interval(0, 1), oracle::Side::right, 1e-11);
    CHECK(rel_err(rep.terms[0].value, 0.25 * (l.value + r.value)) < 1e-9);
}

TEST_CASE("product bound screens") {
    const Interval iv(0, 1);
    const FunctionSpec pos = make_quadratic(1, 0, 0.2);
    const FunctionSpec signed_u = make_quadratic(1, 0, -1);
    CHECK_THROWS_AS(check_pachpatte_first(signed_u, pos, FracOrder(0.5), iv, kCfg),
                    NegativeFunction);
    CHECK_THROWS_AS(check_pachpatte_first(pos, signed_u, FracOrder(0.5), iv, kCfg),
                    NegativeFunction);
    CHECK_THROWS_AS(
        check_pachpatte_first(with_shape(pos, Shape::unknown), pos, FracOrder(0.5), iv, kCfg),
        ShapeUnknown);
    CHECK_THROWS_AS(check_pachpatte_first(pos, negate(pos), FracOrder(0.5), iv, kCfg),
                    ShapeUnknown);

    // lax mode computes the terms but refuses a verdict
    CheckOptions lax;
    lax.lax = true;
    const auto rep = check_pachpatte_first(signed_u, pos, FracOrder(0.5), iv, kCfg, lax);
    CHECK(rep.verdict == Verdict::inconclusive);
    CHECK(rep.terms.size() == 2);
}

TEST_CASE("product bounds reverse for a concave pair") {
    const Interval iv(0, 1);
    const FunctionSpec u = make_quadratic(-1, 1, 0.75);  // concave, min 0.75 on [0,1]
    const FunctionSpec v = make_quadratic(-0.5, 0, 1.0);
    REQUIRE(u.shape == Shape::concave);
    for (double alpha : {0.4, 1.0}) {
        const auto r1 = check_pachpatte_first(u, v, FracOrder(alpha), iv, kCfg);
        CHECK(r1.verdict == Verdict::holds);
        CHECK(r1.terms[0].value >= r1.terms[1].value - r1.margin);
        const auto r2 = check_pachpatte_second(u, v, FracOrder(alpha), iv, kCfg);
        CHECK(r2.verdict == Verdict::holds);
        CHECK(r2.terms[0].value >= r2.terms[1].value - r2.margin);
    }
}

TEST_CASE("second product bound: constants and classical equality") {
    const FunctionSpec one = make_quadratic(0, 0, 1);
    for (double alpha : {0.25, 0.6}) {
        const auto rep = check_pachpatte_second(one, one, FracOrder(alpha), Interval(0, 1), kCfg);
        CHECK(rep.terms[0].value == 2.0);
        CHECK(std::fabs(rep.terms[1].value - 2.0) < 1e-12);
        CHECK(rep.verdict == Verdict::holds);
    }
    const FunctionSpec id = make_quadratic(0, 1, 0);
    const auto rep = check_pachpatte_second(id, id, FracOrder(1.0), Interval(0, 1), kCfg);
    CHECK(rep.terms[0].value == 0.5);
    CHECK(std::fabs(rep.terms[1].value - 0.5) < 1e-12);
    CHECK(rep.verdict == Verdict::holds);
}

TEST_CASE("second product bound: kinked nonnegative pair") {
    const FunctionSpec u = make_power_abs(1.0, 0.5, 1.0, 0.1);  // |x-1/2| + 0.1
    const FunctionSpec v = make_quadratic(1, 0, 0.1);           // x^2 + 0.1
    const auto rep = check_pachpatte_second(u, v, FracOrder(0.3), Interval(0, 1), kCfg);
    CHECK(rep.verdict == Verdict::holds);
}

TEST_CASE("dispatch validates required arguments") {
    const FunctionSpec u = make_quadratic(1, 0, 0.2);
    CHECK_THROWS_AS(
        run_check(Ineq::fejer, u, nullptr, nullptr, FracOrder(0.5), Interval(0, 1), kCfg),
        DomainError);
    CHECK_THROWS_AS(
        run_check(Ineq::pachpatte1, u, nullptr, nullptr, FracOrder(0.5), Interval(0, 1), kCfg),
        DomainError);
}

TEST_CASE("verdict thresholds") {
    CHECK(detail::verdict_from_slacks({1.0, -1e-9}, 1e-8) == Verdict::holds);
    CHECK(detail::verdict_from_slacks({-2e-8}, 1e-8) == Verdict::inconclusive);
    CHECK(detail::verdict_from_slacks({-2e-7}, 1e-8) == Verdict::violated);
    CHECK(detail::verdict_from_slacks({-2e-7, -2e-8}, 1e-8) == Verdict::violated);
}

TEST_CASE("mislabeled certificate produces a violation") {
    // concave parabola with a forced convex certificate: the chain fails honestly
    const FunctionSpec lie = with_shape(make_quadratic(-1, 0, 0), Shape::convex);
    const auto rep = check_hermite_hadamard(lie, FracOrder(1.0), Interval(0, 1), kCfg);
    CHECK(rep.verdict == Verdict::violated);
}

TEST_CASE("classical limit sweep") {
    const std::vector<double> alphas = {0.9, 0.99, 0.999};
    SUBCASE("mean term converges to the classical integral mean") {
        const auto sweep = classical_limit_sweep(Ineq::hh, make_quadratic(1, 0, 0), nullptr,
                                                 nullptr, Interval(0, 1), alphas, kCfg);
        CHECK(rel_err(sweep.classical, 1.0 / 3.0) < 1e-12);
        CHECK(sweep.monotone);
        CHECK(sweep.rows.back().abs_error < sweep.rows.front().abs_error);
    }
    SUBCASE("constant function tracks exactly") {
        const auto sweep = classical_limit_sweep(Ineq::hh, make_quadratic(0, 0, 2), nullptr,
                                                 nullptr, Interval(0, 1), alphas, kCfg);
        for (const auto& row : sweep.rows) CHECK(row.abs_error < 1e-10);
    }
    SUBCASE("gap bound converges to (b-a)/8 times the derivative sum") {
        const auto sweep = classical_limit_sweep(Ineq::da, make_quadratic(1, 0, 0), nullptr,
                                                 nullptr, Interval(0, 1), alphas, kCfg);
        CHECK(rel_err(sweep.classical, 0.25) < 1e-14);
        CHECK(sweep.monotone);
    }
    SUBCASE("product bound converges to the 1/3, 1/6 combination") {
        const FunctionSpec id = make_quadratic(0, 1, 0);
        const auto sweep = classical_limit_sweep(Ineq::pachpatte1, id, &id, nullptr,
                                                 Interval(0, 1), alphas, kCfg);
        CHECK(rel_err(sweep.classical, 1.0 / 3.0) < 1e-14);
        CHECK(sweep.monotone);
    }
    SUBCASE("alpha sequence validation") {
        CHECK_THROWS_AS(classical_limit_sweep(Ineq::hh, make_quadratic(1, 0, 0), nullptr, nullptr,
                                              Interval(0, 1), {0.9, 0.5}, kCfg),
                        DomainError);
        CHECK_THROWS_AS(classical_limit_sweep(Ineq::hh, make_quadratic(1, 0, 0), nullptr, nullptr,
                                              Interval(0, 1), {0.9, 1.0}, kCfg),
                        DomainError);
        CHECK_THROWS_AS(classical_limit_sweep(Ineq::hh, make_quadratic(1, 0, 0), nullptr, nullptr,
                                              Interval(0, 1), {}, kCfg),
                        DomainError);
    }
}

TEST_CASE("small randomized sweep holds across checkers") {
    const Interval iv(-2, 3);
    const auto corpus = convex_corpus(99, 10, iv);
    const auto nonneg = convex_corpus(17, 10, iv, {.nonneg = true});
    const auto smooth = convex_corpus(55, 10, iv, {.nonneg = false, .smooth_only = true});
    for (double alpha : {0.05, 0.5, 0.99, 1.0}) {
        const FracOrder order(alpha);
        for (int i = 0; i < 10; ++i) {
            CHECK(check_hermite_hadamard(corpus[i], order, iv, kCfg).verdict == Verdict::holds);
            CHECK(check_hermite_hadamard(negate(corpus[i]), order, iv, kCfg).verdict ==
                  Verdict::holds);
            CHECK(check_dragomir_agarwal(smooth[i], order, iv, kCfg).verdict == Verdict::holds);
            const auto& v = nonneg[(i + 3) % 10];
            CHECK(check_pachpatte_first(nonneg[i], v, order, iv, kCfg).verdict == Verdict::holds);
            CHECK(check_pachpatte_second(nonneg[i], v, order, iv, kCfg).verdict == Verdict::holds);
        }
    }
}
