#pragma once

#include <functional>

#include "casidual/errors.hpp"

namespace casidual::numerics {

using Fn = std::function<double(double)>;

// Error control for the adaptive Gauss-Kronrod integrator.
struct QuadratureConfig {
    double rel_tol = 1e-10;
    double abs_tol = 1e-14;
    int max_subdivisions = 1 << 16;
    // Semi-infinite integrals are truncated here and the remainder is
    // covered by an analytic envelope bound. 0 selects max(50/rate, 50).
    double tail_cut = 0.0;
};

// Central differences with Richardson extrapolation.
struct DerivativeConfig {
    double initial_step = 0.0;  // 0 selects 1e-2 * max(|x|, 1)
    int richardson_levels = 4;
};

struct AbelPlanaResult {
    double integral_term;  // integral of f over [0, inf)
    double half_f0;        // f(0)/2
    double branch_term;    // integral of disc(x)/(e^{2 pi x} - 1)
    double total;          // sum of the three, reproduces sum_{n>=0} f(n)
};

struct CothSeriesCheck {
    double partial;
    double target;
    double tail_bound;
};

// 1/(e^x - 1), stable near 0, exactly 0 once e^x overflows.
double bose_weight(double x);

double integrate(const Fn& f, double a, double b, const QuadratureConfig& cfg = {});

// Integral of f over [a, inf) for integrands bounded by
// envelope_scale * x^envelope_power * exp(-decay_rate * x) past the cut.
double integrate_exp_tail(const Fn& f, double a, double decay_rate,
                          double envelope_power, double envelope_scale,
                          const QuadratureConfig& cfg = {});

// integral_0^inf x^{s-1}/(e^{a x}-1) dx for s > 1, a > 0.
// Equals Gamma(s) zeta(s) / a^s.
double bose_integral(double s, double a, const QuadratureConfig& cfg = {});

// integral_0^inf x^2 ln(1 - e^{-a x}) dx = -pi^4 / (45 a^3).
double log_bose_integral(double a, const QuadratureConfig& cfg = {});

// zeta(s) for s in {2, 3, 4}. Closed pi-expressions for 2 and 4, a
// 16-digit literal for 3.
double zeta_value(int s);

// sum_{n>=0} f(n) split into integral, f(0)/2 and branch pieces. The
// caller supplies disc(x) = i [f(ix) - f(-ix)] so the handles stay
// real-valued and encode the branch choice themselves.
AbelPlanaResult abel_plana(const Fn& f, const Fn& branch_discontinuity,
                           const QuadratureConfig& cfg = {});
double abel_plana_branch_term(const Fn& branch_discontinuity,
                              const QuadratureConfig& cfg = {});

// Partial sum of coth(z)/z = 1/z^2 + sum 2/(z^2 + pi^2 n^2) against
// direct evaluation, with the integral tail bound 2/(pi^2 N).
CothSeriesCheck coth_series_check(double z, long long terms);

double derivative(const Fn& g, double x, const DerivativeConfig& cfg = {});

}  // namespace casidual::numerics
