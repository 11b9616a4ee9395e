#include "casidual/casimir.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace casidual::casimir {
namespace {

constexpr double kPi = std::numbers::pi;

void require_gap(double gap) {
    if (!(gap > 0.0)) throw std::invalid_argument("plate gap must be positive");
}

void require_k_perp(double k_perp) {
    if (!(k_perp >= 0.0))
        throw std::invalid_argument("transverse wavenumber must be >= 0");
}

double pow4(double x) {
    const double x2 = x * x;
    return x2 * x2;
}

// Sum-minus-continuum at unit gap: all regulated-sum work happens in the
// scaled variables x = gap * k_perp, mu = lambda / gap.
double scaled_mode_sum(double x, double mu) {
    const ModeSpectrum modes(x, 1.0);
    double total = 0.5 * modes.degeneracy(0) * x * std::exp(-mu * x);
    for (int n = 1;; ++n) {
        const double r = modes.wavenumber(n);
        const double term = 0.5 * modes.degeneracy(n) * r * std::exp(-mu * r);
        total += term;
        if (total > 0.0 && term < 1e-16 * total) break;
        if (n > 50'000'000)
            throw ConvergenceError("regulated mode sum failed to truncate");
    }
    return total;
}

double scaled_continuum(double x, double mu, const QuadratureConfig& inner) {
    auto f = [x, mu](double y) {
        const double r = std::hypot(x, y);
        return r * std::exp(-mu * r);
    };
    // sqrt(y^2+x^2) <= sqrt(2) y past the cut (which always exceeds x here)
    return (1.0 / kPi) * numerics::integrate_exp_tail(f, 0.0, mu, 1.0, 1.5, inner);
}

double extrapolate_to_zero(const std::vector<double>& xs,
                           const std::vector<double>& ys, int order) {
    const int n = static_cast<int>(xs.size());
    if (order + 1 == n) {
        // Neville's scheme evaluated at 0
        std::vector<double> p = ys;
        for (int level = 1; level < n; ++level)
            for (int i = 0; i < n - level; ++i)
                p[i] = (xs[i + level] * p[i] - xs[i] * p[i + 1]) /
                       (xs[i + level] - xs[i]);
        return p[0];
    }
    // least-squares polynomial in t = x / x_max, normal equations
    const int m = order + 1;
    const double scale = *std::max_element(xs.begin(), xs.end());
    std::vector<long double> a(m * m, 0.0L);
    std::vector<long double> rhs(m, 0.0L);
    for (int k = 0; k < n; ++k) {
        long double t = xs[k] / scale;
        std::vector<long double> row(m, 1.0L);
        for (int j = 1; j < m; ++j) row[j] = row[j - 1] * t;
        for (int i = 0; i < m; ++i) {
            rhs[i] += row[i] * ys[k];
            for (int j = 0; j < m; ++j) a[i * m + j] += row[i] * row[j];
        }
    }
    for (int col = 0; col < m; ++col) {  // Gaussian elimination, partial pivoting
        int piv = col;
        for (int r = col + 1; r < m; ++r)
            if (std::abs((double)a[r * m + col]) > std::abs((double)a[piv * m + col]))
                piv = r;
        for (int j = 0; j < m; ++j) std::swap(a[col * m + j], a[piv * m + j]);
        std::swap(rhs[col], rhs[piv]);
        if (a[col * m + col] == 0.0L)
            throw ConvergenceError("regulator extrapolation: singular fit");
        for (int r = col + 1; r < m; ++r) {
            const long double fac = a[r * m + col] / a[col * m + col];
            for (int j = col; j < m; ++j) a[r * m + j] -= fac * a[col * m + j];
            rhs[r] -= fac * rhs[col];
        }
    }
    for (int r = m - 1; r >= 0; --r) {
        for (int j = r + 1; j < m; ++j) rhs[r] -= a[r * m + j] * rhs[j];
        rhs[r] /= a[r * m + r];
    }
    return static_cast<double>(rhs[0]);  // value at t = 0
}

}  // namespace

PlateGeometry::PlateGeometry(double gap_, std::optional<double> area)
    : gap(gap_), transverse_area(area) {
    require_gap(gap);
    if (transverse_area && !(*transverse_area >= 0.0))
        throw std::invalid_argument("transverse area must be >= 0");
}

PlateGeometry PlateGeometry::from_quantities(const Quantity& gap_q,
                                             std::optional<Quantity> area_q) {
    if (gap_q.dim != dim::length)
        throw std::invalid_argument("plate gap must be a length");
    std::optional<double> area;
    if (area_q) {
        if (area_q->dim != dim::area)
            throw std::invalid_argument("transverse area must be an area");
        area = area_q->magnitude;
    }
    return PlateGeometry(gap_q.magnitude, area);
}

double PlateGeometry::mode_wavenumber(int n) const {
    if (n < 0) throw std::invalid_argument("mode index must be >= 0");
    return kPi * n / gap;
}

ModeSpectrum::ModeSpectrum(double k_perp_, double gap_)
    : k_perp(k_perp_), gap(gap_) {
    require_k_perp(k_perp);
    require_gap(gap);
}

double ModeSpectrum::wavenumber(int n) const {
    if (n < 0) throw std::invalid_argument("mode index must be >= 0");
    if (n == 0) return k_perp;
    return std::hypot(k_perp, kPi * n / gap);
}

int ModeSpectrum::degeneracy(int n) const {
    if (n < 0) throw std::invalid_argument("mode index must be >= 0");
    return n == 0 ? 1 : 2;
}

double delta_I_log_route(double k_perp, double gap, const QuadratureConfig& cfg) {
    require_k_perp(k_perp);
    require_gap(gap);
    auto f = [k_perp, gap](double kz) {
        const double y = 2.0 * gap * std::hypot(kz, k_perp);
        if (y > 745.0) return 0.0;  // e^{-y} underflows, integrand is 0
        return y > 0.5 ? std::log1p(-std::exp(-y)) : std::log(-std::expm1(-y));
    };
    // |ln(1-e^{-y})| <= 1.01 e^{-2 gap k_z}; start past the k_perp shoulder
    QuadratureConfig tail_cfg = cfg;
    if (tail_cfg.tail_cut == 0.0)
        tail_cfg.tail_cut = k_perp + std::max(50.0 / (2.0 * gap), 50.0);
    return (1.0 / kPi) *
           numerics::integrate_exp_tail(f, 0.0, 2.0 * gap, 0.0, 1.05, tail_cfg);
}

double delta_I_abel_plana(double k_perp, double gap, const QuadratureConfig& cfg) {
    require_k_perp(k_perp);
    require_gap(gap);
    if (k_perp == 0.0)
        return -(2.0 * gap / kPi) * numerics::bose_integral(2.0, 2.0 * gap, cfg);

    const double u = gap * k_perp;
    const double scale = (2.0 * gap / kPi) * k_perp * k_perp;
    double chi = 30.0;
    for (int attempt = 0; attempt < 8; ++attempt) {
        const double cosh_max = 1.0 + chi / u;
        const double theta_max = std::acosh(cosh_max);
        auto f = [u](double th) {
            const double sh = std::sinh(th);
            return sh * sh * numerics::bose_weight(2.0 * u * std::cosh(th));
        };
        const double integral = numerics::integrate(f, 0.0, theta_max, cfg);
        // sinh^2 e^{-2u cosh} <= (1/4) e^{2 th} e^{-u e^th}; substitute v = e^th
        const double v0 = cosh_max + std::sqrt(cosh_max * cosh_max - 1.0);
        const double bose_margin = -1.0 / std::expm1(-2.0 * u);
        const double tail = 0.25 * bose_margin * std::exp(-u * v0) *
                            (v0 / u + 1.0 / (u * u));
        if (scale * tail <=
            std::max(cfg.abs_tol, 0.5 * cfg.rel_tol * scale * std::abs(integral)))
            return -scale * integral;
        chi *= 2.0;
    }
    throw ConvergenceError("delta_I_abel_plana: tail bound not met");
}

double energy_density(double gap, const QuadratureConfig& cfg) {
    require_gap(gap);
    return numerics::log_bose_integral(2.0 * gap, cfg) / (2.0 * kPi * kPi * gap);
}

double energy_density_abel_plana(double gap, const QuadratureConfig& cfg) {
    require_gap(gap);
    QuadratureConfig inner = cfg;
    inner.rel_tol = std::min(cfg.rel_tol, 1e-11);
    inner.abs_tol = 1e-300;
    auto f = [&inner](double x) {
        return x * delta_I_abel_plana(x, 1.0, inner);
    };
    // the transverse density decays like e^{-2x}; past x = 16 the remainder
    // is below 1e-12 of the total
    QuadratureConfig outer = cfg;
    outer.rel_tol = std::max(cfg.rel_tol, 1e-9);
    const double per_area = (1.0 / (2.0 * kPi)) * numerics::integrate(f, 0.0, 16.0, outer);
    return per_area / pow4(gap);
}

double pressure(double gap, const QuadratureConfig& cfg) {
    require_gap(gap);
    return -numerics::bose_integral(4.0, 2.0 * gap, cfg) / (kPi * kPi);
}

double pressure_via_derivative(double gap, const DerivativeConfig& dcfg,
                               const QuadratureConfig& cfg) {
    require_gap(gap);
    DerivativeConfig d = dcfg;
    if (d.initial_step == 0.0) d.initial_step = 1e-2 * gap;
    auto area_energy = [&cfg](double l) { return l * energy_density(l, cfg); };
    return -numerics::derivative(area_energy, gap, d);
}

RegulatedSumResult regulated_finite_part(double gap, const RegulatorConfig& reg,
                                         const QuadratureConfig& cfg) {
    require_gap(gap);
    std::vector<double> lambdas = reg.lambda_sequence;
    if (lambdas.empty())
        lambdas = {gap / 5.0, gap / 10.0, gap / 20.0, gap / 40.0};
    if (lambdas.size() < 2)
        throw std::invalid_argument("regulator sequence needs at least two values");
    for (std::size_t i = 0; i < lambdas.size(); ++i) {
        if (!(lambdas[i] > 0.0))
            throw std::invalid_argument("regulator values must be positive");
        if (i > 0 && !(lambdas[i] < lambdas[i - 1]))
            throw std::invalid_argument("regulator sequence must be strictly decreasing");
    }
    const int order = reg.extrapolation_order;
    if (order < 1 || order + 1 > static_cast<int>(lambdas.size()))
        throw std::invalid_argument("extrapolation order incompatible with sequence");

    // Tolerances here are fixed internally: the continuum integral feeds a
    // sum-minus-integral cancellation, so it runs much tighter than the
    // outer transverse integral needs to.
    QuadratureConfig inner;
    inner.rel_tol = 1e-13;
    inner.abs_tol = 1e-12;
    inner.max_subdivisions = cfg.max_subdivisions;
    QuadratureConfig outer;
    outer.rel_tol = 1e-8;
    outer.abs_tol = 1e-13;
    outer.max_subdivisions = cfg.max_subdivisions;

    RegulatedSumResult result;
    result.lambdas = lambdas;
    for (double lambda : lambdas) {
        const double mu = lambda / gap;
        auto transverse = [mu, &inner](double x) {
            return x * (scaled_mode_sum(x, mu) - scaled_continuum(x, mu, inner));
        };
        // the finite part decays like e^{-2x}; x = 14 leaves < 1e-9 relative
        const double phi =
            (1.0 / (2.0 * kPi)) * numerics::integrate(transverse, 0.0, 14.0, outer);
        result.energy_per_area.push_back(phi / (gap * gap * gap));
    }

    result.extrapolated = extrapolate_to_zero(lambdas, result.energy_per_area, order);
    if (lambdas.size() >= 3 && order >= 2) {
        std::vector<double> xs(lambdas.begin() + 1, lambdas.end());
        std::vector<double> ys(result.energy_per_area.begin() + 1,
                               result.energy_per_area.end());
        const int reduced = std::min<int>(order - 1, static_cast<int>(xs.size()) - 1);
        result.error_estimate =
            std::abs(result.extrapolated - extrapolate_to_zero(xs, ys, reduced));
    } else {
        result.error_estimate =
            std::abs(result.extrapolated - result.energy_per_area.back());
    }
    if (result.error_estimate > 0.05 * std::abs(result.extrapolated))
        throw ConvergenceError("regulator extrapolation residual too large");
    return result;
}

double total_force(const PlateGeometry& geom, const QuadratureConfig& cfg) {
    if (!geom.transverse_area)
        throw std::invalid_argument("total_force: geometry has no transverse area");
    return pressure(geom.gap, cfg) * (*geom.transverse_area);
}

double energy_density_closed_form(double gap) {
    require_gap(gap);
    return -kPi * kPi / (720.0 * pow4(gap));
}

double pressure_closed_form(double gap) {
    require_gap(gap);
    return -kPi * kPi / (240.0 * pow4(gap));
}

double energy_per_area_closed_form(double gap) {
    require_gap(gap);
    return -kPi * kPi / (720.0 * gap * gap * gap);
}

double energy_density(const Quantity& gap, const QuadratureConfig& cfg) {
    if (gap.dim != dim::length)
        throw std::invalid_argument("plate gap must be a length");
    return energy_density(gap.magnitude, cfg);
}

double pressure(const Quantity& gap, const QuadratureConfig& cfg) {
    if (gap.dim != dim::length)
        throw std::invalid_argument("plate gap must be a length");
    return pressure(gap.magnitude, cfg);
}

}  // namespace casidual::casimir
