#include "casidual/blackbody.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace casidual::blackbody {
namespace {

constexpr double kPi = std::numbers::pi;

double pow4(double x) {
    const double x2 = x * x;
    return x2 * x2;
}

void require_beta(double beta) {
    if (!(beta > 0.0)) throw std::invalid_argument("beta must be positive");
}

}  // namespace

ThermalState ThermalState::from_temperature(double T) {
    if (!(T > 0.0)) throw std::invalid_argument("temperature must be positive");
    return {T, 1.0 / T};
}

ThermalState ThermalState::from_beta(double beta) {
    require_beta(beta);
    return {1.0 / beta, beta};
}

ThermalState ThermalState::from_temperature_quantity(const Quantity& T,
                                                     const PhysicalConstants& k) {
    return from_beta(beta_from_temperature(T, k).magnitude);
}

double pressure_bb(const ThermalState& state, const QuadratureConfig& cfg) {
    require_beta(state.beta);
    return -numerics::log_bose_integral(state.beta, cfg) / (kPi * kPi * state.beta);
}

double internal_energy_bb(const ThermalState& state, const QuadratureConfig& cfg) {
    require_beta(state.beta);
    return numerics::bose_integral(4.0, state.beta, cfg) / (kPi * kPi);
}

double internal_energy_via_derivative(const ThermalState& state,
                                      const DerivativeConfig& dcfg,
                                      const QuadratureConfig& cfg) {
    require_beta(state.beta);
    DerivativeConfig d = dcfg;
    if (d.initial_step == 0.0) d.initial_step = 1e-2 * state.beta;
    auto beta_p = [&cfg](double b) {
        return b * pressure_bb(ThermalState::from_beta(b), cfg);
    };
    return -numerics::derivative(beta_p, state.beta, d);
}

double entropy_density(const ThermalState& state, const QuadratureConfig& cfg) {
    const double p = pressure_bb(state, cfg);
    const double u = internal_energy_bb(state, cfg);
    return (p + u) / state.temperature;
}

double entropy_via_derivative(const ThermalState& state, const DerivativeConfig& dcfg,
                              const QuadratureConfig& cfg) {
    DerivativeConfig d = dcfg;
    if (d.initial_step == 0.0) d.initial_step = 1e-2 * state.temperature;
    auto p_of_T = [&cfg](double T) {
        return pressure_bb(ThermalState::from_temperature(T), cfg);
    };
    return numerics::derivative(p_of_T, state.temperature, d);
}

ThermoPoint thermo_point(const ThermalState& state, const QuadratureConfig& cfg) {
    ThermoPoint pt{};
    pt.p = pressure_bb(state, cfg);
    pt.f = -pt.p;
    pt.u = internal_energy_bb(state, cfg);
    pt.s = (pt.p + pt.u) / state.temperature;
    return pt;
}

DsDuCheck check_ds_du(const ThermalState& state, const DerivativeConfig& dcfg,
                      const QuadratureConfig& cfg) {
    const double T0 = state.temperature;
    DerivativeConfig d = dcfg;
    if (d.initial_step == 0.0) d.initial_step = 1e-2 * T0;
    auto s_of_T = [&cfg](double T) {
        return entropy_density(ThermalState::from_temperature(T), cfg);
    };
    auto u_of_T = [&cfg](double T) {
        return internal_energy_bb(ThermalState::from_temperature(T), cfg);
    };
    const double ds = numerics::derivative(s_of_T, T0, d);
    const double du = numerics::derivative(u_of_T, T0, d);
    DsDuCheck out{};
    out.ds_du = ds / du;
    out.expected = 1.0 / T0;
    out.residual = std::abs(out.ds_du * T0 - 1.0);
    return out;
}

double pressure_closed_form(double beta) {
    require_beta(beta);
    return kPi * kPi / (45.0 * pow4(beta));
}

double internal_energy_closed_form(double beta) {
    require_beta(beta);
    return kPi * kPi / (15.0 * pow4(beta));
}

double entropy_closed_form(double beta) {
    require_beta(beta);
    return 4.0 * kPi * kPi / (45.0 * beta * beta * beta);
}

}  // namespace casidual::blackbody
