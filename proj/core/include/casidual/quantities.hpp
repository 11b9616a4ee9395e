#pragma once

#include <string>

#include "casidual/errors.hpp"

namespace casidual {

// Integer exponents over the four base dimensions everything in this
// project needs: metre, second, kilogram, kelvin. Exponent arithmetic
// is exact.
struct Dimension {
    int length = 0;
    int time = 0;
    int mass = 0;
    int temperature = 0;

    friend constexpr bool operator==(const Dimension&, const Dimension&) = default;

    constexpr Dimension operator*(const Dimension& o) const {
        return {length + o.length, time + o.time, mass + o.mass,
                temperature + o.temperature};
    }
    constexpr Dimension operator/(const Dimension& o) const {
        return {length - o.length, time - o.time, mass - o.mass,
                temperature - o.temperature};
    }
    constexpr Dimension pow(int n) const {
        return {length * n, time * n, mass * n, temperature * n};
    }
    constexpr bool is_dimensionless() const {
        return length == 0 && time == 0 && mass == 0 && temperature == 0;
    }
    // After setting hbar = c = k_B = 1 only a power of length remains.
    constexpr bool is_length_power() const {
        return time == 0 && mass == 0 && temperature == 0;
    }

    std::string str() const;
};

namespace dim {
inline constexpr Dimension dimensionless{};
inline constexpr Dimension length{1, 0, 0, 0};
inline constexpr Dimension inverse_length{-1, 0, 0, 0};
inline constexpr Dimension area{2, 0, 0, 0};
inline constexpr Dimension time{0, 1, 0, 0};
inline constexpr Dimension mass{0, 0, 1, 0};
inline constexpr Dimension temperature{0, 0, 0, 1};
inline constexpr Dimension energy{2, -2, 1, 0};
inline constexpr Dimension energy_density{-1, -2, 1, 0};
inline constexpr Dimension pressure{-1, -2, 1, 0};
inline constexpr Dimension energy_per_area{0, -2, 1, 0};
inline constexpr Dimension entropy_density{-1, -2, 1, -1};
inline constexpr Dimension force{1, -2, 1, 0};
}  // namespace dim

// A magnitude tagged with its dimension. Binary operations check
// homogeneity; mixing incompatible dimensions throws std::invalid_argument.
struct Quantity {
    double magnitude = 0.0;
    Dimension dim{};

    Quantity operator+(const Quantity& o) const;
    Quantity operator-(const Quantity& o) const;
    Quantity operator*(const Quantity& o) const;
    Quantity operator/(const Quantity& o) const;
    bool operator<(const Quantity& o) const;
    bool operator>(const Quantity& o) const;
    bool operator<=(const Quantity& o) const;
    bool operator>=(const Quantity& o) const;
    bool same_value(const Quantity& o) const;  // equality, dimension-checked
};

Quantity quantity_pow(const Quantity& q, int n);

// CODATA-2018 values. Fixed on purpose: every golden number downstream
// depends on them bit for bit.
struct PhysicalConstants {
    double hbar = 1.054571817e-34;  // J s
    double c = 2.99792458e8;        // m / s
    double k_B = 1.380649e-23;      // J / K
};

// Powers of (hbar, c, k_B) that cancel everything but a length power.
struct NaturalReduction {
    int hbar_power = 0;
    int c_power = 0;
    int kB_power = 0;
    int length_power = 0;
};

NaturalReduction natural_reduction(const Dimension& d);

// SI magnitude -> natural-unit magnitude (metre powers, hbar = c = k_B = 1).
// Round-trips with from_natural to a couple of ulps.
Quantity to_natural(const Quantity& q, const PhysicalConstants& k = {});
Quantity from_natural(double natural_magnitude, const Dimension& d,
                      const PhysicalConstants& k = {});

// beta = hbar c / (k_B T), the length-valued inverse temperature.
Quantity beta_from_temperature(const Quantity& T, const PhysicalConstants& k = {});
double beta_from_kelvin(double kelvin, const PhysicalConstants& k = {});

}  // namespace casidual
