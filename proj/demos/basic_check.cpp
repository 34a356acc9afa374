// Minimal library walkthrough: build a certified convex function, check the
// mean-value chain at a fractional order, and print the chain terms.

#include <cstdio>

#include <fracineq/fracineq.hpp>

int main() {
    using namespace fracineq;

    const FunctionSpec u = make_quadratic(1, 0, 0);  // x^2, convex
    const Interval iv(0, 1);

    for (double alpha : {0.25, 0.5, 0.9, 1.0}) {
        const auto rep = check_hermite_hadamard(u, FracOrder(alpha), iv, QuadratureConfig{});
        std::printf("alpha=%.2f  %s <= %s <= %s:  %.12f <= %.12f <= %.12f  [%s]\n", alpha,
                    rep.terms[0].name.c_str(), rep.terms[1].name.c_str(),
                    rep.terms[2].name.c_str(), rep.terms[0].value, rep.terms[1].value,
                    rep.terms[2].value, verdict_name(rep.verdict));
    }

    const auto gap = check_dragomir_agarwal(u, FracOrder(0.5), iv, QuadratureConfig{});
    std::printf("trapezoid gap %.12f bounded by %.12f  [%s]\n", gap.terms[0].value,
                gap.terms[1].value, verdict_name(gap.verdict));
    return 0;
}
