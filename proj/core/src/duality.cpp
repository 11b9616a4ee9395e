#include "casidual/duality.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace casidual::duality {
namespace {

constexpr double kPi = std::numbers::pi;

void require_positive(double v, const char* what) {
    if (!(v > 0.0)) throw std::invalid_argument(std::string(what) + " must be positive");
}

}  // namespace

DualityMap DualityMap::gap_to_beta(double gap) {
    require_positive(gap, "gap");
    return {Direction::gap_to_beta, gap, 2.0 * gap};
}

DualityMap DualityMap::beta_to_gap(double beta) {
    require_positive(beta, "beta");
    return {Direction::beta_to_gap, beta, beta / 2.0};
}

double map_gap_to_beta(double gap) { return DualityMap::gap_to_beta(gap).output; }

double map_beta_to_gap(double beta) { return DualityMap::beta_to_gap(beta).output; }

Xi::Xi(double v) : value(v) { require_positive(v, "xi"); }

Xi xi_inversion(const Xi& x) { return Xi(1.0 / (4.0 * x.value)); }

SwapResiduals check_pressure_energy_swap(double l, Route route,
                                         const QuadratureConfig& cfg) {
    require_positive(l, "gap");
    const double beta_dual = map_gap_to_beta(l);
    double p_cas, u_cas, p_bb, u_bb;
    if (route == Route::closed_form) {
        p_cas = casimir::pressure_closed_form(l);
        u_cas = casimir::energy_density_closed_form(l);
        p_bb = blackbody::pressure_closed_form(beta_dual);
        u_bb = blackbody::internal_energy_closed_form(beta_dual);
    } else {
        const auto state = blackbody::ThermalState::from_beta(beta_dual);
        p_cas = casimir::pressure(l, cfg);
        u_cas = casimir::energy_density(l, cfg);
        p_bb = blackbody::pressure_bb(state, cfg);
        u_bb = blackbody::internal_energy_bb(state, cfg);
    }
    SwapResiduals r{};
    r.residual_p_swap = std::abs(p_cas + u_bb) / std::abs(u_bb);
    r.residual_u_swap = std::abs(u_cas + p_bb) / std::abs(p_bb);
    return r;
}

double dual_entropy_density(double l, const QuadratureConfig& cfg) {
    require_positive(l, "gap");
    const double u = casimir::energy_density(l, cfg);
    const double p = casimir::pressure(l, cfg);
    return -2.0 * l * (u + p);
}

double dual_entropy_closed_form(double l) {
    require_positive(l, "gap");
    return kPi * kPi / (90.0 * l * l * l);
}

DualThermoCheck check_dual_thermo_relation(double l, const DerivativeConfig& dcfg,
                                           const QuadratureConfig& cfg) {
    require_positive(l, "gap");
    DerivativeConfig d = dcfg;
    if (d.initial_step == 0.0) d.initial_step = 1e-2 * l;
    auto s_of_l = [&cfg](double x) { return dual_entropy_density(x, cfg); };
    auto u_of_l = [&cfg](double x) { return casimir::energy_density(x, cfg); };
    const double ds = numerics::derivative(s_of_l, l, d);
    const double du = numerics::derivative(u_of_l, l, d);
    DualThermoCheck out{};
    out.ds_du = ds / du;
    out.effective_inverse_T = 2.0 * l;
    out.inconsistency_ratio = std::abs(out.ds_du) / out.effective_inverse_T;
    return out;
}

DualityReport full_report(double l, const DerivativeConfig& dcfg,
                          const QuadratureConfig& cfg, Route route) {
    require_positive(l, "gap");
    DualityReport rep{};
    rep.l = l;
    rep.beta_dual = map_gap_to_beta(l);
    const SwapResiduals swap = check_pressure_energy_swap(l, route, cfg);
    rep.residual_p_swap = swap.residual_p_swap;
    rep.residual_u_swap = swap.residual_u_swap;
    const DualThermoCheck thermo = check_dual_thermo_relation(l, dcfg, cfg);
    rep.ds_du_dual = thermo.ds_du;
    rep.inconsistency_ratio = thermo.inconsistency_ratio;
    return rep;
}

DualityReport full_report(const Quantity& gap, const DerivativeConfig& dcfg,
                          const QuadratureConfig& cfg, Route route) {
    if (gap.dim != dim::length)
        throw std::invalid_argument("duality report: gap must be a length");
    return full_report(gap.magnitude, dcfg, cfg, route);
}

}  // namespace casidual::duality
