#include "casidual/numerics.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace casidual::numerics {
namespace {

constexpr double kPi = std::numbers::pi;

// 15-point Kronrod extension of the 7-point Gauss rule (positive half).
constexpr std::array<double, 8> kKronrodNodes = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.0};
constexpr std::array<double, 8> kKronrodWeights = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714};
constexpr std::array<double, 4> kGaussWeights = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327};

struct Segment {
    double a, b;
    double integral;
    double error;
};

Segment gk15(const Fn& f, double a, double b) {
    const double center = 0.5 * (a + b);
    const double half = 0.5 * (b - a);

    const double fc = f(center);
    double resk = kKronrodWeights[7] * fc;
    double resg = kGaussWeights[3] * fc;
    double resabs = kKronrodWeights[7] * std::abs(fc);

    std::array<double, 7> flo{};
    std::array<double, 7> fhi{};
    for (int j = 0; j < 7; ++j) {
        const double dx = half * kKronrodNodes[j];
        flo[j] = f(center - dx);
        fhi[j] = f(center + dx);
        const double pair = flo[j] + fhi[j];
        resk += kKronrodWeights[j] * pair;
        resabs += kKronrodWeights[j] * (std::abs(flo[j]) + std::abs(fhi[j]));
        if (j % 2 == 1) resg += kGaussWeights[(j - 1) / 2] * pair;
    }

    const double mean = 0.5 * resk;
    double resasc = kKronrodWeights[7] * std::abs(fc - mean);
    for (int j = 0; j < 7; ++j)
        resasc += kKronrodWeights[j] *
                  (std::abs(flo[j] - mean) + std::abs(fhi[j] - mean));

    Segment seg{a, b, resk * half, 0.0};
    resabs *= std::abs(half);
    resasc *= std::abs(half);
    double err = std::abs((resk - resg) * half);
    if (resasc != 0.0 && err != 0.0)
        err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
    const double eps50 = 50.0 * std::numeric_limits<double>::epsilon();
    if (resabs > std::numeric_limits<double>::min() / eps50)
        err = std::max(err, eps50 * resabs);
    seg.error = err;
    if (!std::isfinite(seg.integral))
        throw ConvergenceError("integrand produced a non-finite value");
    return seg;
}

void validate(const QuadratureConfig& cfg) {
    if (!(cfg.rel_tol > 0.0) || !(cfg.abs_tol > 0.0))
        throw std::invalid_argument("quadrature tolerances must be positive");
    if (cfg.max_subdivisions < 1)
        throw std::invalid_argument("max_subdivisions must be >= 1");
    if (cfg.tail_cut < 0.0)
        throw std::invalid_argument("tail_cut must be >= 0");
}

// Globally adaptive bisection over an initial partition: always split the
// segment with the largest error estimate.
double integrate_segments(const Fn& f, const std::vector<double>& pts,
                          const QuadratureConfig& cfg) {
    auto by_error = [](const Segment& s1, const Segment& s2) {
        return s1.error < s2.error;
    };
    std::vector<Segment> heap;
    std::vector<Segment> settled;  // too narrow to split further
    double sum = 0.0;
    double err_active = 0.0;
    double err_settled = 0.0;
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
        Segment s = gk15(f, pts[i], pts[i + 1]);
        sum += s.integral;
        err_active += s.error;
        heap.push_back(s);
    }
    std::make_heap(heap.begin(), heap.end(), by_error);
    int used = static_cast<int>(pts.size()) - 1;

    while (true) {
        const double tol = std::max(cfg.abs_tol, cfg.rel_tol * std::abs(sum));
        if (err_active + err_settled <= tol) break;
        if (heap.empty() || used >= cfg.max_subdivisions)
            throw ConvergenceError(
                "quadrature tolerance not met within max_subdivisions");

        std::pop_heap(heap.begin(), heap.end(), by_error);
        Segment worst = heap.back();
        heap.pop_back();

        const double width_floor =
            100.0 * std::numeric_limits<double>::epsilon() *
            std::max({std::abs(worst.a), std::abs(worst.b), 1.0});
        if (worst.b - worst.a < width_floor) {
            err_active -= worst.error;
            err_settled += worst.error;
            settled.push_back(worst);
            continue;
        }

        const double mid = 0.5 * (worst.a + worst.b);
        Segment left = gk15(f, worst.a, mid);
        Segment right = gk15(f, mid, worst.b);
        ++used;
        sum += left.integral + right.integral - worst.integral;
        err_active += left.error + right.error - worst.error;
        heap.push_back(left);
        std::push_heap(heap.begin(), heap.end(), by_error);
        heap.push_back(right);
        std::push_heap(heap.begin(), heap.end(), by_error);
    }

    // One clean pass over the final partition; the running sum accumulates
    // cancellation while splitting.
    double total = 0.0;
    for (const Segment& s : heap) total += s.integral;
    for (const Segment& s : settled) total += s.integral;
    return total;
}

double stable_log1mexp(double y) {
    // ln(1 - e^{-y}) for y > 0
    return y > 0.5 ? std::log1p(-std::exp(-y)) : std::log(-std::expm1(-y));
}

}  // namespace

double bose_weight(double x) {
    if (x > 700.0) return 0.0;
    return 1.0 / std::expm1(x);
}

double integrate(const Fn& f, double a, double b, const QuadratureConfig& cfg) {
    validate(cfg);
    if (a == b) return 0.0;
    if (!(b > a)) throw std::invalid_argument("integrate: requires b >= a");
    return integrate_segments(f, {a, b}, cfg);
}

double integrate_exp_tail(const Fn& f, double a, double decay_rate,
                          double envelope_power, double envelope_scale,
                          const QuadratureConfig& cfg) {
    validate(cfg);
    if (!(decay_rate > 0.0))
        throw std::invalid_argument("integrate_exp_tail: decay rate must be positive");
    const double span =
        cfg.tail_cut > 0.0 ? cfg.tail_cut : std::max(50.0 / decay_rate, 50.0);
    // past the cut x^p e^{-rx/2} must already be decreasing for the
    // envelope bound below to hold
    double cut = a + std::max(span, (2.0 * envelope_power + 4.0) / decay_rate);

    // Seed the partition at the decay scale so features near the origin are
    // not stepped over by the first coarse rule.
    std::vector<double> pts{a};
    for (double w = 0.5 / decay_rate; a + w < cut; w *= 4.0) pts.push_back(a + w);
    pts.push_back(cut);

    double total = integrate_segments(f, pts, cfg);
    for (int attempt = 0; attempt < 10; ++attempt) {
        const double bound =
            envelope_scale * (2.0 / decay_rate) *
            std::exp(envelope_power * std::log(cut) - decay_rate * cut);
        if (bound <= std::max(cfg.abs_tol, cfg.rel_tol * std::abs(total)))
            return total;
        const double next = cut + span;
        total += integrate_segments(f, {cut, next}, cfg);
        cut = next;
    }
    throw ConvergenceError(
        "integrate_exp_tail: analytic tail bound does not meet the tolerance");
}

double bose_integral(double s, double a, const QuadratureConfig& cfg) {
    if (!(s > 1.0)) throw std::invalid_argument("bose_integral: requires s > 1");
    if (!(a > 0.0)) throw std::invalid_argument("bose_integral: requires a > 0");
    auto f = [s, a](double x) { return std::pow(x, s - 1.0) * bose_weight(a * x); };
    return integrate_exp_tail(f, 0.0, a, s - 1.0, 1.05, cfg);
}

double log_bose_integral(double a, const QuadratureConfig& cfg) {
    if (!(a > 0.0)) throw std::invalid_argument("log_bose_integral: requires a > 0");
    auto f = [a](double x) { return x * x * stable_log1mexp(a * x); };
    return integrate_exp_tail(f, 0.0, a, 2.0, 1.05, cfg);
}

double zeta_value(int s) {
    switch (s) {
        case 2:
            return kPi * kPi / 6.0;
        case 3:
            return 1.2020569031595942854;
        case 4:
            return kPi * kPi * kPi * kPi / 90.0;
        default:
            throw std::invalid_argument("zeta_value: only s in {2, 3, 4}");
    }
}

double abel_plana_branch_term(const Fn& disc, const QuadratureConfig& cfg) {
    auto f = [&disc](double x) { return disc(x) * bose_weight(2.0 * kPi * x); };
    // Admissible summands grow slower than e^{2 pi x}, so the weight wins;
    // calibrate the envelope from a few samples of the discontinuity.
    double scale = 1.0;
    for (double x : {1.0, 5.0, 10.0, 25.0})
        scale = std::max(scale, std::abs(disc(x)));
    return integrate_exp_tail(f, 0.0, 2.0 * kPi, 1.0, 2.0 * scale, cfg);
}

AbelPlanaResult abel_plana(const Fn& f, const Fn& branch_discontinuity,
                           const QuadratureConfig& cfg) {
    AbelPlanaResult r{};
    r.half_f0 = 0.5 * f(0.0);
    // map [0, inf) to [0, 1) with x = t/(1-t) so algebraic tails converge
    auto mapped = [&f](double t) {
        const double omt = 1.0 - t;
        return f(t / omt) / (omt * omt);
    };
    r.integral_term = integrate(mapped, 0.0, 1.0, cfg);
    r.branch_term = abel_plana_branch_term(branch_discontinuity, cfg);
    r.total = r.integral_term + r.half_f0 + r.branch_term;
    if (!std::isfinite(r.total))
        throw ConvergenceError("abel_plana: non-finite term in total");
    return r;
}

CothSeriesCheck coth_series_check(double z, long long terms) {
    if (z == 0.0)
        throw std::invalid_argument("coth_series_check: z must be nonzero");
    if (terms < 1)
        throw std::invalid_argument("coth_series_check: need at least one term");
    const double z2 = z * z;
    double partial = 0.0;
    for (long long n = terms; n >= 1; --n) {  // small terms first
        const double pn = kPi * static_cast<double>(n);
        partial += 2.0 / (z2 + pn * pn);
    }
    partial += 1.0 / z2;
    const double target = 1.0 / (std::tanh(z) * z);
    const double tail_bound = 2.0 / (kPi * kPi * static_cast<double>(terms));
    return {partial, target, tail_bound};
}

double derivative(const Fn& g, double x, const DerivativeConfig& cfg) {
    if (cfg.richardson_levels < 1)
        throw std::invalid_argument("derivative: richardson_levels must be >= 1");
    if (cfg.initial_step < 0.0)
        throw std::invalid_argument("derivative: initial_step must be positive");
    const double h0 =
        cfg.initial_step > 0.0 ? cfg.initial_step : 1e-2 * std::max(std::abs(x), 1.0);
    const int levels = cfg.richardson_levels;

    std::vector<std::vector<double>> tab(levels);
    double h = h0;
    for (int i = 0; i < levels; ++i) {
        const double fp = g(x + h);
        const double fm = g(x - h);
        if (!std::isfinite(fp) || !std::isfinite(fm))
            throw ConvergenceError("derivative: non-finite function value");
        tab[i].resize(i + 1);
        tab[i][0] = (fp - fm) / (2.0 * h);
        double p4 = 4.0;
        for (int j = 1; j <= i; ++j, p4 *= 4.0)
            tab[i][j] = (p4 * tab[i][j - 1] - tab[i - 1][j - 1]) / (p4 - 1.0);
        h *= 0.5;
    }
    return tab[levels - 1][levels - 1];
}

}  // namespace casidual::numerics
