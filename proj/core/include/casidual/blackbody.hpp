#pragma once

#include "casidual/numerics.hpp"
#include "casidual/quantities.hpp"

namespace casidual::blackbody {

using numerics::DerivativeConfig;
using numerics::QuadratureConfig;

// Photon gas at temperature T, natural units: T is an inverse length and
// beta = 1/T the length-valued inverse temperature.
struct ThermalState {
    double temperature;
    double beta;

    static ThermalState from_temperature(double T);
    static ThermalState from_beta(double beta);
    // SI temperature -> natural state via beta = hbar c / (k_B T).
    static ThermalState from_temperature_quantity(const Quantity& T,
                                                  const PhysicalConstants& k = {});
};

// p = -f holds exactly; s = (p + u)/T; all positive for T > 0.
struct ThermoPoint {
    double p;
    double f;
    double u;
    double s;
};

struct DsDuCheck {
    double ds_du;
    double expected;  // 1/T
    double residual;  // |ds_du * T - 1|
};

// p = -(1/(pi^2 beta)) integral_0^inf k^2 ln(1 - e^{-beta k}) dk
//   = pi^2/(45 beta^4).
double pressure_bb(const ThermalState& state, const QuadratureConfig& cfg = {});

// u = (1/pi^2) integral_0^inf k^3/(e^{beta k}-1) dk = pi^2/(15 beta^4);
// the spectral integrand is the Planck distribution.
double internal_energy_bb(const ThermalState& state, const QuadratureConfig& cfg = {});

// u = -d(beta p)/d beta by Richardson differentiation.
double internal_energy_via_derivative(const ThermalState& state,
                                      const DerivativeConfig& dcfg = {},
                                      const QuadratureConfig& cfg = {});

// s = (p + u)/T.
double entropy_density(const ThermalState& state, const QuadratureConfig& cfg = {});

// s = -df/dT = dp/dT, the cross-check route for the entropy.
double entropy_via_derivative(const ThermalState& state,
                              const DerivativeConfig& dcfg = {},
                              const QuadratureConfig& cfg = {});

ThermoPoint thermo_point(const ThermalState& state, const QuadratureConfig& cfg = {});

// ds/du along the one-parameter family in T, against the absolute-
// temperature relation ds/du = 1/T.
DsDuCheck check_ds_du(const ThermalState& state, const DerivativeConfig& dcfg = {},
                      const QuadratureConfig& cfg = {});

double pressure_closed_form(double beta);
double internal_energy_closed_form(double beta);
double entropy_closed_form(double beta);

}  // namespace casidual::blackbody
