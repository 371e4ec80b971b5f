#include "fiberising/config.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace fiberising {

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return {};
    const auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

double parse_double(const std::string& key, const std::string& value) {
    std::size_t pos = 0;
    double v = 0.0;
    try {
        v = std::stod(value, &pos);
    } catch (const std::exception&) {
        throw std::invalid_argument("config: bad numeric value for '" + key + "': " + value);
    }
    if (pos != value.size()) {
        throw std::invalid_argument("config: trailing characters in value for '" + key + "'");
    }
    return v;
}

int parse_int(const std::string& key, const std::string& value) {
    std::size_t pos = 0;
    int v = 0;
    try {
        v = std::stoi(value, &pos);
    } catch (const std::exception&) {
        throw std::invalid_argument("config: bad integer value for '" + key + "': " + value);
    }
    if (pos != value.size()) {
        throw std::invalid_argument("config: trailing characters in value for '" + key + "'");
    }
    return v;
}

bool parse_bool(const std::string& key, const std::string& value) {
    std::string v = value;
    std::transform(v.begin(), v.end(), v.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    if (v == "true" || v == "1" || v == "yes") return true;
    if (v == "false" || v == "0" || v == "no") return false;
    throw std::invalid_argument("config: bad boolean value for '" + key + "': " + value);
}

}  // namespace

std::vector<double> AxisRange::expand() const {
    if (n < 1) throw std::invalid_argument("axis range: need at least one point");
    if (n > 1 && !(hi > lo)) {
        throw std::invalid_argument("axis range: upper bound must exceed lower bound");
    }
    std::vector<double> out(static_cast<std::size_t>(n));
    if (n == 1) {
        out[0] = lo;
        return out;
    }
    const double step = (hi - lo) / static_cast<double>(n - 1);
    for (int i = 0; i < n; ++i) out[static_cast<std::size_t>(i)] = lo + step * i;
    return out;
}

AxisRange AxisRange::parse(const std::string& text) {
    const auto c1 = text.find(':');
    const auto c2 = text.find(':', c1 == std::string::npos ? c1 : c1 + 1);
    if (c1 == std::string::npos || c2 == std::string::npos) {
        throw std::invalid_argument("axis range: expected a:b:n, got '" + text + "'");
    }
    AxisRange r;
    r.lo = parse_double("range", text.substr(0, c1));
    r.hi = parse_double("range", text.substr(c1 + 1, c2 - c1 - 1));
    r.n = parse_int("range", text.substr(c2 + 1));
    return r;
}

void RunConfig::check_single_mode() const {
    if (direct_mode() && physical_keys_present()) {
        throw std::invalid_argument(
            "config: direct couplings (j12/j23/j31) and physical parameters "
            "(delta/gamma0/eps*) are mutually exclusive");
    }
}

SystemParams RunConfig::system_params() const {
    SystemParams p;
    p.g = g;
    p.delta = delta.value_or(p.delta);
    p.gamma0 = gamma0.value_or(p.gamma0);
    p.eps = {eps1.value_or(p.eps[0]), eps2.value_or(p.eps[1]), eps3.value_or(p.eps[2])};
    p.phi12 = phi12;
    p.phi21 = phi21;
    p.phi23 = phi23;
    p.phi32 = phi32;
    p.gamma_local = {gamma_local1, gamma_local2, gamma_local3};
    p.nu = nu;
    p.l12 = l12;
    p.l23 = l23;
    p.literal_dissipation = literal_dissipation;
    p.pole_guard = pole_guard;
    p.detuning_threshold = detuning_threshold;
    p.adiabatic_threshold = adiabatic_threshold;
    p.validate();
    return p;
}

HamiltonianSpec RunConfig::hamiltonian_spec() const {
    HamiltonianSpec spec;
    spec.j12 = j12.value_or(0.0);
    spec.j23 = j23.value_or(0.0);
    spec.j31 = j31.value_or(0.0);
    spec.gamma = {gamma_local1, gamma_local2, gamma_local3};
    spec.validate();
    return spec;
}

void apply_key_value(RunConfig& cfg, const std::string& key, const std::string& value) {
    if (key == "g") cfg.g = parse_double(key, value);
    else if (key == "delta") cfg.delta = parse_double(key, value);
    else if (key == "gamma0") cfg.gamma0 = parse_double(key, value);
    else if (key == "eps0") cfg.eps1 = cfg.eps2 = cfg.eps3 = parse_double(key, value);
    else if (key == "eps1") cfg.eps1 = parse_double(key, value);
    else if (key == "eps2") cfg.eps2 = parse_double(key, value);
    else if (key == "eps3") cfg.eps3 = parse_double(key, value);
    else if (key == "phi12") cfg.phi12 = parse_double(key, value);
    else if (key == "phi21") cfg.phi21 = parse_double(key, value);
    else if (key == "phi23") cfg.phi23 = parse_double(key, value);
    else if (key == "phi32") cfg.phi32 = parse_double(key, value);
    else if (key == "gamma_local0") {
        cfg.gamma_local1 = cfg.gamma_local2 = cfg.gamma_local3 = parse_double(key, value);
    }
    else if (key == "gamma_local1") cfg.gamma_local1 = parse_double(key, value);
    else if (key == "gamma_local2") cfg.gamma_local2 = parse_double(key, value);
    else if (key == "gamma_local3") cfg.gamma_local3 = parse_double(key, value);
    else if (key == "nu") cfg.nu = parse_double(key, value);
    else if (key == "l12") cfg.l12 = parse_double(key, value);
    else if (key == "l23") cfg.l23 = parse_double(key, value);
    else if (key == "literal_dissipation") cfg.literal_dissipation = parse_bool(key, value);
    else if (key == "j12") cfg.j12 = parse_double(key, value);
    else if (key == "j23") cfg.j23 = parse_double(key, value);
    else if (key == "j31") cfg.j31 = parse_double(key, value);
    else if (key == "t_max") cfg.t_max = parse_double(key, value);
    else if (key == "dt") cfg.dt = parse_double(key, value);
    else if (key == "out") cfg.out = value;
    else if (key == "delta_range") cfg.delta_range = AxisRange::parse(value);
    else if (key == "gamma_range") cfg.gamma_range = AxisRange::parse(value);
    else if (key == "pole_guard") cfg.pole_guard = parse_double(key, value);
    else if (key == "detuning_threshold") cfg.detuning_threshold = parse_double(key, value);
    else if (key == "adiabatic_threshold") cfg.adiabatic_threshold = parse_double(key, value);
    else throw std::invalid_argument("config: unknown key '" + key + "'");
}

namespace {

RunConfig parse_json_config(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("config: JSON parse error: ") + e.what());
    }
    if (!doc.is_object()) throw std::invalid_argument("config: JSON root must be an object");

    RunConfig cfg;
    for (const auto& [key, val] : doc.items()) {
        std::string as_text;
        if (val.is_string()) {
            as_text = val.get<std::string>();
        } else if (val.is_boolean()) {
            as_text = val.get<bool>() ? "true" : "false";
        } else if (val.is_number()) {
            char buf[32];
            std::snprintf(buf, sizeof(buf), "%.17g", val.get<double>());
            as_text = buf;
        } else {
            throw std::invalid_argument("config: unsupported JSON value for key '" + key + "'");
        }
        apply_key_value(cfg, key, as_text);
    }
    return cfg;
}

RunConfig parse_kv_config(const std::string& text) {
    RunConfig cfg;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;

        std::string key, value;
        const auto eq = line.find('=');
        if (eq != std::string::npos) {
            key = trim(line.substr(0, eq));
            value = trim(line.substr(eq + 1));
        } else {
            const auto ws = line.find_first_of(" \t");
            if (ws == std::string::npos) {
                throw std::invalid_argument("config: line " + std::to_string(lineno) +
                                            " has no value: '" + line + "'");
            }
            key = trim(line.substr(0, ws));
            value = trim(line.substr(ws + 1));
        }
        if (key.empty() || value.empty()) {
            throw std::invalid_argument("config: malformed line " + std::to_string(lineno));
        }
        apply_key_value(cfg, key, value);
    }
    return cfg;
}

}  // namespace

RunConfig parse_config_text(const std::string& text) {
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{') return parse_json_config(text);
    return parse_kv_config(text);
}

RunConfig parse_config_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::invalid_argument("config: cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config_text(buf.str());
}

}  // namespace fiberising
