#ifndef BREAKUP_PARAMS_HPP_
#define BREAKUP_PARAMS_HPP_

#include <filesystem>
#include <iosfwd>
#include <string>

namespace breakup {

// Everything is in Hartree atomic units (hbar = m_e = e = 1).

enum class Mode { Ionization, Dissociation };

/// Physical inputs for a two-body breakup (photoionization or
/// photodissociation). The formulas are identical in both modes; the mode
/// only selects naming and presets.
struct SystemParams {
    double m1 = 1.0;        // electron mass m_e, or fragment mass M1
    double m2 = 1836.0;     // ion mass m_i, or fragment mass M2
    double omega = 1.0;     // photon energy
    double e0 = -0.5;       // bound-state energy (negative)
    double gamma = 1e-3;    // amplitude decay rate (half the golden-rule rate)
    double dr_cm0 = 10.0;   // initial cm rms width
    Mode mode = Mode::Ionization;
};

/// Quantities derived from SystemParams; see derive().
struct DerivedParams {
    double total_mass;    // M = m1 + m2
    double reduced_mass;  // mu = m1 m2 / M
    double e_star;        // E* = e0 + omega (energy release)
    double v;             // relative-motion velocity sqrt(2 E*/mu)
    double k_star;        // sqrt(2 mu E*) = mu v
    double dr_rel0;       // initial relative width v / (2 gamma)
    double t_spr_cm;      // 2 M dr_cm0^2
    double t_spr_rel;     // 2 mu dr_rel0^2 (same spreading-law prefactor as cm)
    double eta0;          // dr_cm0 / dr_rel0
    double eta_star;      // sqrt(mu/M), the stability point
    double eta_inf;       // (mu/M) / eta0, the long-time limit of eta(t)
};

/// Validates params and computes every derived quantity. Pure; throws
/// std::invalid_argument on non-positive masses/rates/widths and
/// std::domain_error when omega + e0 <= 0 (below-threshold breakup).
DerivedParams derive(const SystemParams& p);

/// Amplitude decay rate from the bound-free dipole coupling
/// |<E| d.E0/2 |0>| at E = e0 + omega (energy-normalized continuum states):
/// gamma = pi * coupling^2. With probability_rate set, returns 2*gamma,
/// the golden-rule ionization probability per unit time.
double golden_rule_rate(double dipole_coupling, bool probability_rate = false);

/// Reads a flat key-value config (keys m1, m2, omega, e0, gamma, dr_cm0,
/// mode; '#' comments allowed). Values are atomic units. Throws
/// std::runtime_error on unknown/duplicate/missing keys or bad values.
SystemParams load_params(std::istream& in);
SystemParams load_params(const std::filesystem::path& file);

std::string to_string(Mode m);
Mode mode_from_string(const std::string& s);

}  // namespace breakup

#endif
