// casidual: Casimir plate quantities, photon-gas thermodynamics, and the
// duality map between them, in natural or SI units.

#include <cstdio>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "casidual/blackbody.hpp"
#include "casidual/casimir.hpp"
#include "casidual/duality.hpp"
#include "casidual/numerics.hpp"
#include "casidual/quantities.hpp"

using namespace casidual;
using nlohmann::json;

namespace {

enum class UnitsMode { automatic, natural, si };

struct OutputRecord {
    std::string quantity;
    std::string method;
    double value_natural = 0.0;
    double value_si = 0.0;
    std::string si_unit;
    std::optional<double> rel_residual;
    std::vector<std::pair<std::string, double>> parameters;
};

struct UnitEntry {
    double to_base;  // factor to the SI base unit of its dimension
    Dimension dim;
};

const std::map<std::string, UnitEntry>& unit_table() {
    static const std::map<std::string, UnitEntry> table = {
        {"m", {1.0, dim::length}},       {"mm", {1e-3, dim::length}},
        {"um", {1e-6, dim::length}},     {"nm", {1e-9, dim::length}},
        {"K", {1.0, dim::temperature}},  {"Pa", {1.0, dim::pressure}},
        {"J/m3", {1.0, dim::energy_density}},
        {"m2", {1.0, dim::area}},        {"cm2", {1e-4, dim::area}},
        {"mm2", {1e-6, dim::area}},      {"um2", {1e-12, dim::area}},
        {"nm2", {1e-18, dim::area}},
    };
    return table;
}

struct ParsedValue {
    double number = 0.0;
    bool has_unit = false;
    double si_magnitude = 0.0;  // in the SI base unit of dim
    Dimension dim;
};

ParsedValue parse_value(const std::string& text) {
    std::size_t pos = 0;
    double number = 0.0;
    try {
        number = std::stod(text, &pos);
    } catch (const std::exception&) {
        throw std::invalid_argument("cannot parse value '" + text + "'");
    }
    while (pos < text.size() && text[pos] == ' ') ++pos;
    const std::string suffix = text.substr(pos);
    ParsedValue v;
    v.number = number;
    if (suffix.empty()) return v;
    const auto it = unit_table().find(suffix);
    if (it == unit_table().end())
        throw std::invalid_argument("unknown unit '" + suffix + "' in '" + text + "'");
    v.has_unit = true;
    v.si_magnitude = number * it->second.to_base;
    v.dim = it->second.dim;
    return v;
}

UnitsMode parse_units_mode(const std::string& s) {
    if (s == "auto") return UnitsMode::automatic;
    if (s == "natural") return UnitsMode::natural;
    if (s == "si") return UnitsMode::si;
    throw std::invalid_argument("units must be one of auto|natural|si");
}

// Resolve an input of the expected dimension to a natural-unit magnitude
// (metre powers). Bare numbers are natural; suffixed numbers are SI; the
// explicit modes reject the other spelling.
double resolve_input(const std::string& text, const Dimension& expected,
                     UnitsMode mode) {
    const ParsedValue v = parse_value(text);
    if (v.has_unit) {
        if (mode == UnitsMode::natural)
            throw std::invalid_argument("'" + text + "' carries a unit but --units natural was given");
        if (v.dim != expected)
            throw std::invalid_argument("'" + text + "' has the wrong dimension here");
        return to_natural({v.si_magnitude, v.dim}).magnitude;
    }
    if (mode == UnitsMode::si)
        throw std::invalid_argument("'" + text + "' is a bare number but --units si was given");
    return v.number;
}

struct QuantityKind {
    Dimension dim;
    const char* si_unit;
};

QuantityKind kind_pressure() { return {dim::pressure, "Pa"}; }
QuantityKind kind_energy_density() { return {dim::energy_density, "J/m3"}; }
QuantityKind kind_entropy_density() { return {dim::entropy_density, "J/K/m3"}; }
QuantityKind kind_force() { return {dim::force, "N"}; }
QuantityKind kind_energy_per_area() { return {dim::energy_per_area, "J/m2"}; }

OutputRecord make_record(const std::string& quantity, const std::string& method,
                         double natural, const QuantityKind& kind,
                         std::optional<double> closed_reference,
                         std::vector<std::pair<std::string, double>> params) {
    OutputRecord rec;
    rec.quantity = quantity;
    rec.method = method;
    rec.value_natural = natural;
    rec.value_si = from_natural(natural, kind.dim).magnitude;
    rec.si_unit = kind.si_unit;
    if (closed_reference)
        rec.rel_residual =
            std::abs(natural - *closed_reference) / std::abs(*closed_reference);
    rec.parameters = std::move(params);
    return rec;
}

std::string fmt12(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.11e", v);
    return buf;
}

void print_table(const std::vector<OutputRecord>& records) {
    std::printf("%-28s %-14s %-20s %-20s %-8s %s\n", "quantity", "method",
                "value_natural", "value_si", "si_unit", "rel_residual");
    for (const auto& r : records) {
        std::printf("%-28s %-14s %-20s %-20s %-8s %s\n", r.quantity.c_str(),
                    r.method.c_str(), fmt12(r.value_natural).c_str(),
                    fmt12(r.value_si).c_str(), r.si_unit.c_str(),
                    r.rel_residual ? fmt12(*r.rel_residual).c_str() : "-");
    }
}

void print_csv(const std::vector<OutputRecord>& records) {
    std::printf("quantity,method,value_natural,value_si,si_unit,rel_residual\n");
    for (const auto& r : records) {
        std::printf("%s,%s,%s,%s,%s,%s\n", r.quantity.c_str(), r.method.c_str(),
                    fmt12(r.value_natural).c_str(), fmt12(r.value_si).c_str(),
                    r.si_unit.c_str(),
                    r.rel_residual ? fmt12(*r.rel_residual).c_str() : "");
    }
}

json record_to_json(const OutputRecord& r) {
    json j;
    j["quantity"] = r.quantity;
    j["method"] = r.method;
    j["value_natural"] = r.value_natural;
    j["value_si"] = r.value_si;
    j["si_unit"] = r.si_unit;
    if (r.rel_residual) j["rel_residual"] = *r.rel_residual;
    json params = json::object();
    for (const auto& [k, v] : r.parameters) params[k] = v;
    j["parameters"] = params;
    return j;
}

void print_json(const std::vector<OutputRecord>& records) {
    json arr = json::array();
    for (const auto& r : records) arr.push_back(record_to_json(r));
    std::printf("%s\n", arr.dump(2).c_str());
}

void emit(const std::vector<OutputRecord>& records, const std::string& format) {
    if (format == "table") print_table(records);
    else if (format == "csv") print_csv(records);
    else print_json(records);
}

struct CommonFlags {
    std::string units = "auto";
    std::string format = "table";
    double rel_tol = 1e-10;
    double abs_tol = 1e-14;
};

void add_common(CLI::App* cmd, CommonFlags& flags) {
    cmd->add_option("--units", flags.units, "auto|natural|si")
        ->check(CLI::IsMember({"auto", "natural", "si"}));
    cmd->add_option("--format", flags.format, "table|csv|json")
        ->check(CLI::IsMember({"table", "csv", "json"}));
    cmd->add_option("--rel-tol", flags.rel_tol, "quadrature relative tolerance");
    cmd->add_option("--abs-tol", flags.abs_tol, "quadrature absolute tolerance");
}

numerics::QuadratureConfig quad_config(const CommonFlags& flags) {
    numerics::QuadratureConfig cfg;
    cfg.rel_tol = flags.rel_tol;
    cfg.abs_tol = flags.abs_tol;
    return cfg;
}

int run_casimir(const std::string& gap_text, const std::string& area_text,
                const std::string& method, const CommonFlags& flags) {
    const UnitsMode mode = parse_units_mode(flags.units);
    const double gap = resolve_input(gap_text, dim::length, mode);
    if (!(gap > 0.0)) throw std::invalid_argument("gap must be positive");
    const auto cfg = quad_config(flags);

    std::vector<std::pair<std::string, double>> params = {{"gap", gap}};
    std::optional<double> area;
    if (!area_text.empty()) {
        area = resolve_input(area_text, dim::area, mode);
        if (!(*area >= 0.0)) throw std::invalid_argument("area must be >= 0");
        params.emplace_back("area", *area);
    }

    const double p_closed = casimir::pressure_closed_form(gap);
    const double u_closed = casimir::energy_density_closed_form(gap);

    double p, u;
    std::string p_method, u_method;
    std::optional<double> p_ref, u_ref;
    if (method == "closed_form") {
        p = p_closed;
        u = u_closed;
        p_method = u_method = "closed_form";
    } else if (method == "derivative") {
        p = casimir::pressure_via_derivative(gap, {}, cfg);
        u = casimir::energy_density(gap, cfg);
        p_method = "derivative";
        u_method = "quadrature";
        p_ref = p_closed;
        u_ref = u_closed;
    } else if (method == "abel_plana") {
        p = casimir::pressure(gap, cfg);
        u = casimir::energy_density_abel_plana(gap, cfg);
        p_method = "quadrature";
        u_method = "abel_plana";
        p_ref = p_closed;
        u_ref = u_closed;
    } else {  // quadrature
        p = casimir::pressure(gap, cfg);
        u = casimir::energy_density(gap, cfg);
        p_method = u_method = "quadrature";
        p_ref = p_closed;
        u_ref = u_closed;
    }

    std::vector<OutputRecord> records;
    records.push_back(
        make_record("casimir.pressure", p_method, p, kind_pressure(), p_ref, params));
    records.push_back(make_record("casimir.energy_density", u_method, u,
                                  kind_energy_density(), u_ref, params));
    if (area) {
        records.push_back(make_record("casimir.total_force", p_method, p * *area,
                                      kind_force(),
                                      p_ref ? std::optional<double>(p_closed * *area)
                                            : std::nullopt,
                                      params));
    }
    emit(records, flags.format);
    return 0;
}

int run_planck(const std::string& temperature_text, const std::string& beta_text,
               const std::string& method, const CommonFlags& flags) {
    if (temperature_text.empty() == beta_text.empty())
        throw std::invalid_argument("give exactly one of --temperature or --beta");
    const UnitsMode mode = parse_units_mode(flags.units);

    blackbody::ThermalState state{0.0, 0.0};
    std::vector<std::pair<std::string, double>> params;
    if (!beta_text.empty()) {
        const double beta = resolve_input(beta_text, dim::length, mode);
        if (!(beta > 0.0)) throw std::invalid_argument("beta must be positive");
        state = blackbody::ThermalState::from_beta(beta);
    } else {
        // temperatures in kelvin map to 1/beta in natural units
        const ParsedValue v = parse_value(temperature_text);
        if (v.has_unit) {
            if (mode == UnitsMode::natural)
                throw std::invalid_argument("temperature carries a unit under --units natural");
            if (v.dim != dim::temperature)
                throw std::invalid_argument("--temperature expects kelvin");
            if (!(v.si_magnitude > 0.0))
                throw std::invalid_argument("temperature must be positive");
            state = blackbody::ThermalState::from_temperature_quantity(
                {v.si_magnitude, dim::temperature});
        } else {
            if (mode == UnitsMode::si)
                throw std::invalid_argument("bare temperature under --units si");
            if (!(v.number > 0.0))
                throw std::invalid_argument("temperature must be positive");
            state = blackbody::ThermalState::from_temperature(v.number);
        }
    }
    params.emplace_back("beta", state.beta);

    const auto cfg = quad_config(flags);
    const double p_closed = blackbody::pressure_closed_form(state.beta);
    const double u_closed = blackbody::internal_energy_closed_form(state.beta);
    const double s_closed = blackbody::entropy_closed_form(state.beta);

    double p, u, s;
    std::string p_method, u_method, s_method;
    std::optional<double> p_ref, u_ref, s_ref;
    if (method == "closed_form") {
        p = p_closed;
        u = u_closed;
        s = s_closed;
        p_method = u_method = s_method = "closed_form";
    } else if (method == "derivative") {
        p = blackbody::pressure_bb(state, cfg);
        u = blackbody::internal_energy_via_derivative(state, {}, cfg);
        s = blackbody::entropy_via_derivative(state, {}, cfg);
        p_method = "quadrature";
        u_method = s_method = "derivative";
        p_ref = p_closed;
        u_ref = u_closed;
        s_ref = s_closed;
    } else {  // quadrature
        p = blackbody::pressure_bb(state, cfg);
        u = blackbody::internal_energy_bb(state, cfg);
        s = (p + u) / state.temperature;
        p_method = u_method = s_method = "quadrature";
        p_ref = p_closed;
        u_ref = u_closed;
        s_ref = s_closed;
    }

    std::vector<OutputRecord> records;
    records.push_back(
        make_record("planck.pressure", p_method, p, kind_pressure(), p_ref, params));
    records.push_back(make_record("planck.internal_energy", u_method, u,
                                  kind_energy_density(), u_ref, params));
    records.push_back(make_record("planck.free_energy", p_method, -p,
                                  kind_energy_density(),
                                  p_ref ? std::optional<double>(-p_closed)
                                        : std::nullopt,
                                  params));
    records.push_back(make_record("planck.entropy_density", s_method, s,
                                  kind_entropy_density(), s_ref, params));
    emit(records, flags.format);
    return 0;
}

int run_duality(const std::string& gap_text, bool json_flag, double swap_tol,
                double ratio_tol, const CommonFlags& flags) {
    const UnitsMode mode = parse_units_mode(flags.units);
    const double gap = resolve_input(gap_text, dim::length, mode);
    if (!(gap > 0.0)) throw std::invalid_argument("gap must be positive");

    const auto rep = duality::full_report(gap, {}, quad_config(flags));

    if (json_flag || flags.format == "json") {
        json j;
        j["l"] = rep.l;
        j["beta_dual"] = rep.beta_dual;
        j["residual_p_swap"] = rep.residual_p_swap;
        j["residual_u_swap"] = rep.residual_u_swap;
        j["ds_du_dual"] = rep.ds_du_dual;
        j["inconsistency_ratio"] = rep.inconsistency_ratio;
        std::printf("%s\n", j.dump(2).c_str());
    } else {
        std::printf("%-22s %s\n", "l", fmt12(rep.l).c_str());
        std::printf("%-22s %s\n", "beta_dual", fmt12(rep.beta_dual).c_str());
        std::printf("%-22s %s\n", "residual_p_swap", fmt12(rep.residual_p_swap).c_str());
        std::printf("%-22s %s\n", "residual_u_swap", fmt12(rep.residual_u_swap).c_str());
        std::printf("%-22s %s\n", "ds_du_dual", fmt12(rep.ds_du_dual).c_str());
        std::printf("%-22s %s\n", "inconsistency_ratio",
                    fmt12(rep.inconsistency_ratio).c_str());
    }

    const bool ok = rep.residual_p_swap <= swap_tol && rep.residual_u_swap <= swap_tol &&
                    std::abs(rep.inconsistency_ratio - 3.0) <= ratio_tol;
    if (!ok) {
        std::fprintf(stderr, "duality: residuals or inconsistency ratio out of tolerance\n");
        return 2;
    }
    return 0;
}

int run_sweep(const std::string& quantity, const std::string& gap_range,
              const std::string& beta_range, const std::string& temp_range,
              int points, const std::string& scale, const std::string& method,
              const CommonFlags& flags) {
    if (points < 2) throw std::invalid_argument("--points must be at least 2");
    const UnitsMode mode = parse_units_mode(flags.units);

    const bool casimir_family = quantity.rfind("casimir-", 0) == 0;
    std::string range_text;
    Dimension range_dim = dim::length;
    bool temperature_range = false;
    if (casimir_family) {
        if (gap_range.empty())
            throw std::invalid_argument("casimir sweeps need --gap min:max");
        range_text = gap_range;
    } else {
        if (beta_range.empty() == temp_range.empty())
            throw std::invalid_argument("planck sweeps need exactly one of --beta or --temperature");
        if (!beta_range.empty()) {
            range_text = beta_range;
        } else {
            range_text = temp_range;
            range_dim = dim::temperature;
            temperature_range = true;
        }
    }

    const auto colon = range_text.find(':');
    if (colon == std::string::npos)
        throw std::invalid_argument("range must be min:max");
    auto resolve_endpoint = [&](const std::string& part) {
        if (temperature_range) {
            const ParsedValue v = parse_value(part);
            if (v.has_unit) {
                if (mode == UnitsMode::natural)
                    throw std::invalid_argument("unit under --units natural");
                if (v.dim != dim::temperature)
                    throw std::invalid_argument("--temperature expects kelvin");
                return 1.0 / to_natural({v.si_magnitude, dim::temperature}).magnitude;
            }
            if (mode == UnitsMode::si)
                throw std::invalid_argument("bare number under --units si");
            return 1.0 / v.number;  // natural temperature -> beta
        }
        return resolve_input(part, range_dim, mode);
    };
    // for temperature ranges the parameter below is still beta
    double lo = resolve_endpoint(range_text.substr(0, colon));
    double hi = resolve_endpoint(range_text.substr(colon + 1));
    if (temperature_range && lo > hi) std::swap(lo, hi);  // T increasing = beta decreasing
    if (!(lo > 0.0) || !(hi > lo))
        throw std::invalid_argument("range must satisfy 0 < min < max");

    const auto cfg = quad_config(flags);
    const std::string param_name = casimir_family ? "gap" : "beta";

    struct Evaluator {
        QuantityKind kind;
        std::function<double(double)> closed;
        std::function<double(double)> quad;
    };
    std::map<std::string, Evaluator> table;
    table["casimir-pressure"] = {kind_pressure(),
                                 [](double l) { return casimir::pressure_closed_form(l); },
                                 [&cfg](double l) { return casimir::pressure(l, cfg); }};
    table["casimir-energy"] = {kind_energy_density(),
                               [](double l) { return casimir::energy_density_closed_form(l); },
                               [&cfg](double l) { return casimir::energy_density(l, cfg); }};
    table["planck-p"] = {kind_pressure(),
                         [](double b) { return blackbody::pressure_closed_form(b); },
                         [&cfg](double b) {
                             return blackbody::pressure_bb(
                                 blackbody::ThermalState::from_beta(b), cfg);
                         }};
    table["planck-u"] = {kind_energy_density(),
                         [](double b) { return blackbody::internal_energy_closed_form(b); },
                         [&cfg](double b) {
                             return blackbody::internal_energy_bb(
                                 blackbody::ThermalState::from_beta(b), cfg);
                         }};
    table["planck-s"] = {kind_entropy_density(),
                         [](double b) { return blackbody::entropy_closed_form(b); },
                         [&cfg](double b) {
                             return blackbody::entropy_density(
                                 blackbody::ThermalState::from_beta(b), cfg);
                         }};
    table["planck-f"] = {kind_energy_density(),
                         [](double b) { return -blackbody::pressure_closed_form(b); },
                         [&cfg](double b) {
                             return -blackbody::pressure_bb(
                                 blackbody::ThermalState::from_beta(b), cfg);
                         }};
    const auto it = table.find(quantity);
    if (it == table.end())
        throw std::invalid_argument("unknown sweep quantity '" + quantity + "'");
    const Evaluator& ev = it->second;

    std::vector<double> samples(points);
    for (int i = 0; i < points; ++i) {
        const double t = double(i) / double(points - 1);
        samples[i] = scale == "linear" ? lo + t * (hi - lo)
                                       : lo * std::pow(hi / lo, t);
    }

    std::vector<OutputRecord> records;
    for (double x : samples) {
        const bool closed = method == "closed_form";
        const double value = closed ? ev.closed(x) : ev.quad(x);
        records.push_back(make_record(
            quantity, closed ? "closed_form" : "quadrature", value, ev.kind,
            closed ? std::nullopt : std::optional<double>(ev.closed(x)),
            {{param_name, x}}));
    }

    if (flags.format == "csv") {
        std::printf("%s,value_natural,value_si\n", param_name.c_str());
        for (const auto& r : records)
            std::printf("%s,%s,%s\n", fmt12(r.parameters[0].second).c_str(),
                        fmt12(r.value_natural).c_str(), fmt12(r.value_si).c_str());
    } else if (flags.format == "json") {
        print_json(records);
    } else {
        std::printf("%-20s %-20s %-20s %s\n", param_name.c_str(), "value_natural",
                    "value_si", records.front().si_unit.c_str());
        for (const auto& r : records)
            std::printf("%-20s %-20s %-20s\n", fmt12(r.parameters[0].second).c_str(),
                        fmt12(r.value_natural).c_str(), fmt12(r.value_si).c_str());
    }
    return 0;
}

int run_modesum(const std::string& gap_text, const std::string& lambda_text,
                int order, const CommonFlags& flags) {
    const UnitsMode mode = parse_units_mode(flags.units);
    const double gap = resolve_input(gap_text, dim::length, mode);
    if (!(gap > 0.0)) throw std::invalid_argument("gap must be positive");

    casimir::RegulatorConfig reg;
    reg.extrapolation_order = order;
    if (!lambda_text.empty()) {
        std::string item;
        for (std::size_t i = 0; i <= lambda_text.size(); ++i) {
            if (i == lambda_text.size() || lambda_text[i] == ',') {
                if (!item.empty())
                    reg.lambda_sequence.push_back(resolve_input(item, dim::length, mode));
                item.clear();
            } else {
                item += lambda_text[i];
            }
        }
    }

    const auto res = casimir::regulated_finite_part(gap, reg, quad_config(flags));
    const double closed = casimir::energy_per_area_closed_form(gap);
    const double residual = std::abs(res.extrapolated - closed) / std::abs(closed);

    std::vector<OutputRecord> records;
    for (std::size_t i = 0; i < res.lambdas.size(); ++i) {
        records.push_back(make_record(
            "casimir.regulated_energy_per_area", "regulated_sum",
            res.energy_per_area[i], kind_energy_per_area(), std::nullopt,
            {{"gap", gap}, {"lambda", res.lambdas[i]}}));
    }
    records.push_back(make_record("casimir.energy_per_area", "regulated_sum",
                                  res.extrapolated, kind_energy_per_area(), closed,
                                  {{"gap", gap}, {"order", double(order)}}));

    if (flags.format == "json") {
        print_json(records);
    } else if (flags.format == "csv") {
        print_csv(records);
    } else {
        std::printf("%-20s %s\n", "lambda", "energy_per_area");
        for (std::size_t i = 0; i < res.lambdas.size(); ++i)
            std::printf("%-20s %s\n", fmt12(res.lambdas[i]).c_str(),
                        fmt12(res.energy_per_area[i]).c_str());
        std::printf("%-20s %s\n", "extrapolated", fmt12(res.extrapolated).c_str());
        std::printf("%-20s %s\n", "closed_form", fmt12(closed).c_str());
        std::printf("%-20s %s\n", "rel_residual", fmt12(residual).c_str());
    }

    if (residual > 1e-3) {
        std::fprintf(stderr, "modesum: extrapolation residual %.3e exceeds 1e-3\n",
                     residual);
        return 2;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Casimir plate quantities, photon-gas thermodynamics, and the "
                 "duality between them"};
    app.require_subcommand(1);

    // casimir
    auto* cas = app.add_subcommand("casimir", "pressure and energy density between plates");
    std::string cas_gap, cas_area, cas_method = "quadrature";
    CommonFlags cas_flags;
    cas->add_option("--gap", cas_gap, "plate separation (e.g. 1um, or bare for natural)")
        ->required();
    cas->add_option("--area", cas_area, "transverse plate area (e.g. 1cm2)");
    cas->add_option("--method", cas_method, "closed_form|quadrature|derivative|abel_plana")
        ->check(CLI::IsMember({"closed_form", "quadrature", "derivative", "abel_plana"}));
    add_common(cas, cas_flags);

    // planck
    auto* pla = app.add_subcommand("planck", "photon-gas p, u, s, f at a temperature");
    std::string pla_temp, pla_beta, pla_method = "quadrature";
    CommonFlags pla_flags;
    pla->add_option("--temperature", pla_temp, "temperature (e.g. 300K, or bare natural)");
    pla->add_option("--beta", pla_beta, "inverse temperature as a length");
    pla->add_option("--method", pla_method, "closed_form|quadrature|derivative")
        ->check(CLI::IsMember({"closed_form", "quadrature", "derivative"}));
    add_common(pla, pla_flags);

    // duality
    auto* dua = app.add_subcommand("duality", "2l <-> beta conversion report");
    std::string dua_gap;
    bool dua_json = false;
    double swap_tol = 1e-8, ratio_tol = 1e-6;
    CommonFlags dua_flags;
    dua->add_option("--gap", dua_gap, "plate separation")->required();
    dua->add_flag("--json", dua_json, "emit the report as JSON");
    dua->add_option("--swap-tol", swap_tol, "tolerance on the p <-> -u residuals");
    dua->add_option("--ratio-tol", ratio_tol, "tolerance on |ratio - 3|");
    add_common(dua, dua_flags);

    // sweep
    auto* swp = app.add_subcommand("sweep", "tabulate a quantity over a parameter range");
    std::string swp_quantity, swp_gap, swp_beta, swp_temp, swp_scale = "log",
                swp_method = "closed_form";
    int swp_points = 0;
    CommonFlags swp_flags;
    swp->add_option("quantity", swp_quantity,
                    "casimir-pressure|casimir-energy|planck-p|planck-u|planck-s|planck-f")
        ->required();
    swp->add_option("--gap", swp_gap, "gap range min:max");
    swp->add_option("--beta", swp_beta, "beta range min:max");
    swp->add_option("--temperature", swp_temp, "temperature range min:max");
    swp->add_option("--points", swp_points, "number of samples")->required();
    swp->add_option("--scale", swp_scale, "log|linear")
        ->check(CLI::IsMember({"log", "linear"}));
    swp->add_option("--method", swp_method, "closed_form|quadrature")
        ->check(CLI::IsMember({"closed_form", "quadrature"}));
    add_common(swp, swp_flags);

    // modesum
    auto* mod = app.add_subcommand("modesum", "regulated mode sum and its extrapolation");
    std::string mod_gap, mod_lambda;
    int mod_order = 3;
    CommonFlags mod_flags;
    mod->add_option("--gap", mod_gap, "plate separation")->required();
    mod->add_option("--lambda", mod_lambda, "comma-separated regulator lengths, decreasing");
    mod->add_option("--order", mod_order, "extrapolation order");
    add_common(mod, mod_flags);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::fprintf(stderr, "%s\n", e.what());
        return 1;
    }

    try {
        if (app.got_subcommand(cas))
            return run_casimir(cas_gap, cas_area, cas_method, cas_flags);
        if (app.got_subcommand(pla))
            return run_planck(pla_temp, pla_beta, pla_method, pla_flags);
        if (app.got_subcommand(dua))
            return run_duality(dua_gap, dua_json, swap_tol, ratio_tol, dua_flags);
        if (app.got_subcommand(swp))
            return run_sweep(swp_quantity, swp_gap, swp_beta, swp_temp, swp_points,
                             swp_scale, swp_method, swp_flags);
        if (app.got_subcommand(mod))
            return run_modesum(mod_gap, mod_lambda, mod_order, mod_flags);
    } catch (const ConvergenceError& e) {
        std::fprintf(stderr, "convergence failure: %s\n", e.what());
        return 2;
    } catch (const std::invalid_argument& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
    return 0;
}
