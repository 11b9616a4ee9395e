#include "casidual/quantities.hpp"

#include <sstream>
#include <stdexcept>

namespace casidual {
namespace {

double ipow(double base, int e) {
    if (e < 0) return 1.0 / ipow(base, -e);
    double r = 1.0;
    double b = base;
    while (e) {
        if (e & 1) r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

void check_constants(const PhysicalConstants& k) {
    if (!(k.hbar > 0.0) || !(k.c > 0.0) || !(k.k_B > 0.0))
        throw std::invalid_argument("physical constants must be strictly positive");
}

[[noreturn]] void dimension_mismatch(const char* op, const Dimension& a,
                                     const Dimension& b) {
    std::ostringstream msg;
    msg << "dimension mismatch in " << op << ": " << a.str() << " vs " << b.str();
    throw std::invalid_argument(msg.str());
}

}  // namespace

std::string Dimension::str() const {
    if (is_dimensionless()) return "1";
    std::ostringstream out;
    auto emit = [&out](const char* sym, int e) {
        if (e == 0) return;
        if (out.tellp() > 0) out << ' ';
        out << sym;
        if (e != 1) out << '^' << e;
    };
    emit("L", length);
    emit("T", time);
    emit("M", mass);
    emit("K", temperature);
    return out.str();
}

Quantity Quantity::operator+(const Quantity& o) const {
    if (dim != o.dim) dimension_mismatch("+", dim, o.dim);
    return {magnitude + o.magnitude, dim};
}

Quantity Quantity::operator-(const Quantity& o) const {
    if (dim != o.dim) dimension_mismatch("-", dim, o.dim);
    return {magnitude - o.magnitude, dim};
}

Quantity Quantity::operator*(const Quantity& o) const {
    return {magnitude * o.magnitude, dim * o.dim};
}

Quantity Quantity::operator/(const Quantity& o) const {
    return {magnitude / o.magnitude, dim / o.dim};
}

bool Quantity::operator<(const Quantity& o) const {
    if (dim != o.dim) dimension_mismatch("<", dim, o.dim);
    return magnitude < o.magnitude;
}

bool Quantity::operator>(const Quantity& o) const {
    if (dim != o.dim) dimension_mismatch(">", dim, o.dim);
    return magnitude > o.magnitude;
}

bool Quantity::operator<=(const Quantity& o) const {
    if (dim != o.dim) dimension_mismatch("<=", dim, o.dim);
    return magnitude <= o.magnitude;
}

bool Quantity::operator>=(const Quantity& o) const {
    if (dim != o.dim) dimension_mismatch(">=", dim, o.dim);
    return magnitude >= o.magnitude;
}

bool Quantity::same_value(const Quantity& o) const {
    if (dim != o.dim) dimension_mismatch("==", dim, o.dim);
    return magnitude == o.magnitude;
}

Quantity quantity_pow(const Quantity& q, int n) {
    return {ipow(q.magnitude, n), q.dim.pow(n)};
}

NaturalReduction natural_reduction(const Dimension& d) {
    // Pick hbar^a c^b k_B^k so mass, time and temperature cancel. The
    // system is triangular, so every integer dimension reduces.
    NaturalReduction r;
    r.kB_power = d.temperature;
    r.hbar_power = -d.mass - d.temperature;
    r.c_power = d.time + d.mass - d.temperature;
    r.length_power = d.length + d.time - d.mass - d.temperature;
    return r;
}

Quantity to_natural(const Quantity& q, const PhysicalConstants& k) {
    check_constants(k);
    const NaturalReduction r = natural_reduction(q.dim);
    const double factor =
        ipow(k.hbar, r.hbar_power) * ipow(k.c, r.c_power) * ipow(k.k_B, r.kB_power);
    return {q.magnitude * factor, Dimension{r.length_power, 0, 0, 0}};
}

Quantity from_natural(double natural_magnitude, const Dimension& d,
                      const PhysicalConstants& k) {
    check_constants(k);
    const NaturalReduction r = natural_reduction(d);
    const double factor =
        ipow(k.hbar, r.hbar_power) * ipow(k.c, r.c_power) * ipow(k.k_B, r.kB_power);
    return {natural_magnitude / factor, d};
}

Quantity beta_from_temperature(const Quantity& T, const PhysicalConstants& k) {
    check_constants(k);
    if (T.dim != dim::temperature)
        throw std::invalid_argument("beta_from_temperature: input must be a temperature");
    if (!(T.magnitude > 0.0))
        throw std::invalid_argument("beta_from_temperature: temperature must be positive");
    return {k.hbar * k.c / (k.k_B * T.magnitude), dim::length};
}

double beta_from_kelvin(double kelvin, const PhysicalConstants& k) {
    return beta_from_temperature({kelvin, dim::temperature}, k).magnitude;
}

}  // namespace casidual
