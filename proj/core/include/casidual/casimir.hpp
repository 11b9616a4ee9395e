#pragma once

#include <optional>
#include <vector>

#include "casidual/numerics.hpp"
#include "casidual/quantities.hpp"

namespace casidual::casimir {

using numerics::DerivativeConfig;
using numerics::QuadratureConfig;

// Two conducting plates a gap apart, natural units (metres).
struct PlateGeometry {
    double gap;
    std::optional<double> transverse_area;

    explicit PlateGeometry(double gap_,
                           std::optional<double> area = std::nullopt);
    static PlateGeometry from_quantities(const Quantity& gap,
                                         std::optional<Quantity> area = std::nullopt);

    double mode_wavenumber(int n) const;  // k_z(n) = pi n / gap
};

// Discrete spectrum k_n = sqrt(k_perp^2 + (pi n / gap)^2) with polarization
// degeneracy 2 for n >= 1 and 1 for the n = 0 mode.
struct ModeSpectrum {
    double k_perp;
    double gap;

    ModeSpectrum(double k_perp_, double gap_);
    double wavenumber(int n) const;
    int degeneracy(int n) const;
};

// Exponential-regulator ladder for the mode sum; empty sequence selects
// {gap/5, gap/10, gap/20, gap/40}.
struct RegulatorConfig {
    std::vector<double> lambda_sequence;
    int extrapolation_order = 3;
};

struct RegulatedSumResult {
    std::vector<double> lambdas;
    std::vector<double> energy_per_area;  // finite sum-minus-continuum at each lambda
    double extrapolated;                  // polynomial limit lambda -> 0
    double error_estimate;
};

// Finite part of the transverse-mode density, two independent routes.
// Log route: (1/pi) integral_0^inf dk_z ln(1 - e^{-2 gap sqrt(k_z^2+k_perp^2)}).
double delta_I_log_route(double k_perp, double gap, const QuadratureConfig& cfg = {});
// Branch route: -(2 gap/pi) integral_{k_perp}^inf dt sqrt(t^2-k_perp^2)/(e^{2 gap t}-1),
// evaluated under t = k_perp cosh(theta) so the half-power onset is smooth.
double delta_I_abel_plana(double k_perp, double gap, const QuadratureConfig& cfg = {});

// u(gap) = (1/(2 pi^2 gap)) integral_0^inf k^2 ln(1 - e^{-2 gap k}) dk,
// natural units; equals -pi^2/(720 gap^4). Always negative.
double energy_density(double gap, const QuadratureConfig& cfg = {});
// Same quantity assembled from the branch-route density.
double energy_density_abel_plana(double gap, const QuadratureConfig& cfg = {});

// p(gap) = -(1/pi^2) integral_0^inf k^3/(e^{2 gap k}-1) dk = -pi^2/(240 gap^4).
double pressure(double gap, const QuadratureConfig& cfg = {});
// p = -d(gap * u)/d gap by Richardson differentiation.
double pressure_via_derivative(double gap, const DerivativeConfig& dcfg = {},
                               const QuadratureConfig& cfg = {});

// Regulated mode sum minus its continuum counterpart, per unit plate area,
// extrapolated to vanishing regulator. Matches -pi^2/(720 gap^3).
RegulatedSumResult regulated_finite_part(double gap, const RegulatorConfig& reg = {},
                                         const QuadratureConfig& cfg = {});

double total_force(const PlateGeometry& geom, const QuadratureConfig& cfg = {});

double energy_density_closed_form(double gap);
double pressure_closed_form(double gap);
double energy_per_area_closed_form(double gap);

// Dimension-checked entry points; gap must be a length, area an area.
double energy_density(const Quantity& gap, const QuadratureConfig& cfg = {});
double pressure(const Quantity& gap, const QuadratureConfig& cfg = {});

}  // namespace casidual::casimir
