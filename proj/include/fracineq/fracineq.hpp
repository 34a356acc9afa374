#pragma once

/**
 * @file fracineq.hpp
 * @brief Umbrella header for the exponential-kernel fractional integral
 *        inequality library.
 *
 * The library evaluates the fractional integrals
 *   I_a u(x) = (1/alpha) Int_a^x exp(-(1-alpha)/alpha (x-s)) u(s) ds
 * (and the right-sided mirror) by adaptive quadrature, computes the
 * closed-form constants of the associated mean-value, weighted, trapezoid-gap
 * and product inequalities with stable small-A branches, and verifies those
 * inequality chains over corpora of certified convex/concave functions.
 *
 * Usage:
 * @code
 * using namespace fracineq;
 * auto u = make_quadratic(1, 0, 0);                  // x^2, certified convex
 * auto rep = check_hermite_hadamard(u, FracOrder(0.5), Interval(0, 1), {});
 * // rep.verdict == Verdict::holds, rep.slacks are the chain gaps
 * @endcode
 */

#include "errors.hpp"
#include "kernel.hpp"
#include "quadrature.hpp"
#include "oracle.hpp"
#include "functions.hpp"
#include "frac_integral.hpp"
#include "inequalities.hpp"
#include "report_io.hpp"
