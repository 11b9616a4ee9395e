#pragma once

#include "casidual/blackbody.hpp"
#include "casidual/casimir.hpp"
#include "casidual/numerics.hpp"

namespace casidual::duality {

using numerics::DerivativeConfig;
using numerics::QuadratureConfig;

// The exchange 2l <-> beta that maps the plate system onto the photon gas.
struct DualityMap {
    enum class Direction { gap_to_beta, beta_to_gap };
    Direction direction;
    double input;
    double output;

    static DualityMap gap_to_beta(double gap);
    static DualityMap beta_to_gap(double beta);
};

double map_gap_to_beta(double gap);   // beta = 2 l
double map_beta_to_gap(double beta);  // l = beta / 2

// xi = T l, dimensionless; the inversion xi -> 1/(4 xi) is the image of the
// 2l <-> beta exchange and fixes xi = 1/2.
struct Xi {
    double value;
    explicit Xi(double v);
};

Xi xi_inversion(const Xi& x);

enum class Route { closed_form, quadrature };

struct DualityReport {
    double l;
    double beta_dual;          // 2 l
    double residual_p_swap;    // |p_cas(l) + u_bb(2l)| / |u_bb(2l)|
    double residual_u_swap;    // |u_cas(l) + p_bb(2l)| / |p_bb(2l)|
    double ds_du_dual;         // slope of the dual entropy against u_cas, signed
    double inconsistency_ratio;  // |ds_du_dual| / (2 l); 3 where a genuine
                                 // temperature would give 1
};

struct SwapResiduals {
    double residual_p_swap;
    double residual_u_swap;
};

struct DualThermoCheck {
    double ds_du;
    double effective_inverse_T;  // 2 k_B l / (hbar c), i.e. 2 l in natural units
    double inconsistency_ratio;
};

SwapResiduals check_pressure_energy_swap(double l, Route route = Route::quadrature,
                                         const QuadratureConfig& cfg = {});

// s_dual = -(2 k_B l / hbar c)(u_cas + p_cas); positive, = pi^2/(90 l^3)
// in natural units.
double dual_entropy_density(double l, const QuadratureConfig& cfg = {});
double dual_entropy_closed_form(double l);

// ds/du along the gap family. A genuine temperature 1/(2l) would demand
// |ds/du| = 2l; the actual slope is 6l, ratio 3.
DualThermoCheck check_dual_thermo_relation(double l, const DerivativeConfig& dcfg = {},
                                           const QuadratureConfig& cfg = {});

DualityReport full_report(double l, const DerivativeConfig& dcfg = {},
                          const QuadratureConfig& cfg = {},
                          Route route = Route::quadrature);

DualityReport full_report(const Quantity& gap, const DerivativeConfig& dcfg = {},
                          const QuadratureConfig& cfg = {},
                          Route route = Route::quadrature);

}  // namespace casidual::duality
