#ifndef BREAKUP_ENTANGLEMENT_HPP_
#define BREAKUP_ENTANGLEMENT_HPP_

#include <string>
#include <utility>

namespace breakup {

// Single-particle and coincidence packet widths and the entanglement
// parameter R, all as functions of the sole control parameter
// eta = dr_cm(t) / dr_rel(t). Widths are normalized by dr_rel(t).

enum class Regime { Region1, Region2, Region3, Crossover };

struct WidthReport {
    double eta;
    double s_e, s_i;  // single-particle widths
    double c_e, c_i;  // coincidence widths
    double r_e, r_i;  // entanglement parameters (>= 1)
    Regime regime;
};

/// eta = dr_cm / dr_rel; both widths must be positive.
double eta_ratio(double dr_cm, double dr_rel);

/// Single-particle widths {delta r_e^(s), delta r_i^(s)} =
/// {sqrt(eta^2 + (m_i/M)^2), sqrt(eta^2 + (m_e/M)^2)}.
std::pair<double, double> single_widths(double eta, double m1, double m2);

/// Coincidence widths {delta r_e^(c), delta r_i^(c)} =
/// {eta/sqrt(eta^2 + (m_e/M)^2), eta/sqrt(eta^2 + (m_i/M)^2)}; both in (0, 1).
std::pair<double, double> coincidence_widths(double eta, double m1, double m2);

/// R = sqrt(eta + (m_i/M)^2/eta) * sqrt(eta + (m_e/M)^2/eta).
/// R >= 1 with equality exactly at eta = sqrt(mu/M), and
/// R((mu/M)/eta) = R(eta) identically.
double entanglement_r(double eta, double m1, double m2);

/// Region1: eta below (m_e/M)/factor; Region3: eta above factor*(m_i/M);
/// Region2: factor*(m_e/M) < eta < (m_i/M)/factor; Crossover otherwise.
/// The factor is the operational reading of the asymptotic inequalities.
Regime classify_regime(double eta, double m1, double m2, double factor = 10.0);

/// All of the above bundled for one eta.
WidthReport width_report(double eta, double m1, double m2);

std::string to_string(Regime r);

}  // namespace breakup

#endif
