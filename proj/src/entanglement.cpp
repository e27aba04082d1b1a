#include "breakup/entanglement.hpp"

#include <cmath>
#include <stdexcept>
#include <tuple>

namespace breakup {

namespace {

void check_eta_masses(double eta, double m1, double m2, const char* who) {
    if (!(eta > 0.0)) throw std::invalid_argument(std::string(who) + ": eta must be positive");
    if (!(m1 > 0.0) || !(m2 > 0.0))
        throw std::invalid_argument(std::string(who) + ": masses must be positive");
}

}  // namespace

double eta_ratio(double dr_cm, double dr_rel) {
    if (!(dr_cm > 0.0) || !(dr_rel > 0.0))
        throw std::invalid_argument("eta_ratio: widths must be positive");
    return dr_cm / dr_rel;
}

std::pair<double, double> single_widths(double eta, double m1, double m2) {
    check_eta_masses(eta, m1, m2, "single_widths");
    const double M = m1 + m2;
    return {std::hypot(eta, m2 / M), std::hypot(eta, m1 / M)};
}

std::pair<double, double> coincidence_widths(double eta, double m1, double m2) {
    check_eta_masses(eta, m1, m2, "coincidence_widths");
    const double M = m1 + m2;
    return {eta / std::hypot(eta, m1 / M), eta / std::hypot(eta, m2 / M)};
}

double entanglement_r(double eta, double m1, double m2) {
    check_eta_masses(eta, m1, m2, "entanglement_r");
    const double M = m1 + m2;
    const double a = m2 / M;  // m_i / M
    const double b = m1 / M;  // m_e / M
    return std::sqrt((eta + a * a / eta) * (eta + b * b / eta));
}

Regime classify_regime(double eta, double m1, double m2, double factor) {
    check_eta_masses(eta, m1, m2, "classify_regime");
    if (!(factor > 1.0))
        throw std::invalid_argument("classify_regime: factor must exceed 1");
    const double M = m1 + m2;
    const double b = m1 / M;  // m_e / M
    const double a = m2 / M;  // m_i / M
    if (eta < b / factor) return Regime::Region1;
    if (eta > factor * a) return Regime::Region3;
    if (eta > factor * b && eta < a / factor) return Regime::Region2;
    return Regime::Crossover;
}

WidthReport width_report(double eta, double m1, double m2) {
    WidthReport r;
    r.eta = eta;
    std::tie(r.s_e, r.s_i) = single_widths(eta, m1, m2);
    std::tie(r.c_e, r.c_i) = coincidence_widths(eta, m1, m2);
    r.r_e = r.s_e / r.c_e;
    r.r_i = r.s_i / r.c_i;
    r.regime = classify_regime(eta, m1, m2);
    return r;
}

std::string to_string(Regime r) {
    switch (r) {
        case Regime::Region1: return "Region1";
        case Regime::Region2: return "Region2";
        case Regime::Region3: return "Region3";
        case Regime::Crossover: return "Crossover";
    }
    return "Crossover";
}

}  // namespace breakup
