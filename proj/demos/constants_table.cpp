// Prints the normalized kernel constants over a log-spaced range of the
// scale A; every column tends to 1 as A -> 0.

#include <cmath>
#include <cstdio>

#include <fracineq/kernel.hpp>

int main() {
    using namespace fracineq;
    const Interval iv(0, 1);

    std::printf("%12s %10s %14s %14s %14s %14s\n", "A", "alpha", "midpoint", "dragomir", "p2",
                "p1");
    for (int i = 0; i <= 12; ++i) {
        const double A = std::pow(10.0, -8.0 + i);
        const NormalizedConstants r = normalized_constants(KernelScale{A}, iv);
        std::printf("%12.3e %10.6f %14.10f %14.10f %14.10f %14.10f\n", r.A, r.alpha, r.midpoint,
                    r.dragomir, r.p2, r.p1);
    }
    const NormalizedConstants exact = normalized_constants(KernelScale{0.0}, iv);
    std::printf("%12s %10.6f %14.10f %14.10f %14.10f %14.10f  (exact branch)\n", "0", exact.alpha,
                exact.midpoint, exact.dragomir, exact.p2, exact.p1);
    return 0;
}
