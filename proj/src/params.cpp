#include "breakup/params.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

namespace breakup {

DerivedParams derive(const SystemParams& p) {
    if (!(p.m1 > 0.0) || !(p.m2 > 0.0))
        throw std::invalid_argument("derive: masses must be positive");
    if (!(p.gamma > 0.0))
        throw std::invalid_argument("derive: gamma must be positive");
    if (!(p.dr_cm0 > 0.0))
        throw std::invalid_argument("derive: dr_cm0 must be positive");
    const double e_star = p.omega + p.e0;
    if (!(e_star > 0.0))
        throw std::domain_error("derive: omega + e0 must be positive (above-threshold breakup)");

    DerivedParams d;
    d.total_mass = p.m1 + p.m2;
    d.reduced_mass = p.m1 * p.m2 / d.total_mass;
    d.e_star = e_star;
    d.v = std::sqrt(2.0 * e_star / d.reduced_mass);
    d.k_star = d.reduced_mass * d.v;
    d.dr_rel0 = d.v / (2.0 * p.gamma);
    d.t_spr_cm = 2.0 * d.total_mass * p.dr_cm0 * p.dr_cm0;
    d.t_spr_rel = 2.0 * d.reduced_mass * d.dr_rel0 * d.dr_rel0;
    d.eta0 = p.dr_cm0 / d.dr_rel0;
    d.eta_star = std::sqrt(d.reduced_mass / d.total_mass);
    d.eta_inf = (d.reduced_mass / d.total_mass) / d.eta0;
    return d;
}

double golden_rule_rate(double dipole_coupling, bool probability_rate) {
    if (dipole_coupling < 0.0)
        throw std::invalid_argument("golden_rule_rate: coupling must be non-negative");
    const double gamma = M_PI * dipole_coupling * dipole_coupling;
    return probability_rate ? 2.0 * gamma : gamma;
}

std::string to_string(Mode m) {
    return m == Mode::Ionization ? "ionization" : "dissociation";
}

Mode mode_from_string(const std::string& s) {
    std::string t = s;
    std::transform(t.begin(), t.end(), t.begin(),
                   [](unsigned char c) { return std::tolower(c); });
    if (t == "ionization") return Mode::Ionization;
    if (t == "dissociation") return Mode::Dissociation;
    throw std::runtime_error("unknown mode '" + s + "' (expected ionization|dissociation)");
}

namespace {

std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

double parse_double(const std::string& key, const std::string& val) {
    std::size_t pos = 0;
    double x;
    try {
        x = std::stod(val, &pos);
    } catch (const std::exception&) {
        throw std::runtime_error("config: bad numeric value for '" + key + "': " + val);
    }
    if (pos != val.size())
        throw std::runtime_error("config: trailing characters in value for '" + key + "'");
    return x;
}

}  // namespace

SystemParams load_params(std::istream& in) {
    std::map<std::string, std::string> kv;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        auto eq = line.find('=');
        if (eq == std::string::npos)
            throw std::runtime_error("config: line " + std::to_string(lineno) +
                                     " is not 'key = value'");
        std::string key = trim(line.substr(0, eq));
        std::string val = trim(line.substr(eq + 1));
        if (key.empty() || val.empty())
            throw std::runtime_error("config: empty key or value on line " +
                                     std::to_string(lineno));
        if (!kv.emplace(key, val).second)
            throw std::runtime_error("config: duplicate key '" + key + "'");
    }

    static const char* known[] = {"m1", "m2", "omega", "e0", "gamma", "dr_cm0", "mode"};
    for (const auto& [key, val] : kv) {
        if (std::find_if(std::begin(known), std::end(known),
                         [&](const char* k) { return key == k; }) == std::end(known))
            throw std::runtime_error("config: unknown key '" + key + "'");
    }
    for (const char* k : {"m1", "m2", "omega", "e0", "gamma", "dr_cm0"})
        if (!kv.count(k)) throw std::runtime_error(std::string("config: missing key '") + k + "'");

    SystemParams p;
    p.m1 = parse_double("m1", kv["m1"]);
    p.m2 = parse_double("m2", kv["m2"]);
    p.omega = parse_double("omega", kv["omega"]);
    p.e0 = parse_double("e0", kv["e0"]);
    p.gamma = parse_double("gamma", kv["gamma"]);
    p.dr_cm0 = parse_double("dr_cm0", kv["dr_cm0"]);
    p.mode = kv.count("mode") ? mode_from_string(kv["mode"]) : Mode::Ionization;
    return p;
}

SystemParams load_params(const std::filesystem::path& file) {
    std::ifstream in(file);
    if (!in) throw std::runtime_error("cannot open config file: " + file.string());
    return load_params(in);
}

}  // namespace breakup
