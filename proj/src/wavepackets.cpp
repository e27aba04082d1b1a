#include "breakup/wavepackets.hpp"

#include <cmath>
#include <stdexcept>

#include "breakup/faddeeva.hpp"

namespace breakup {

double cm_width(double t, const CmPacket& p) {
    if (!(p.dr0 > 0.0) || !(p.mass > 0.0))
        throw std::invalid_argument("cm_width: dr0 and mass must be positive");
    return std::hypot(p.dr0, t / (2.0 * p.mass * p.dr0));
}

double cm_density(const std::array<double, 3>& r_cm, double t, const CmPacket& p) {
    const double w = cm_width(t, p);
    const double r2 = r_cm[0] * r_cm[0] + r_cm[1] * r_cm[1] + r_cm[2] * r_cm[2];
    const double norm = std::pow(2.0 * M_PI, -1.5) / (w * w * w);
    return norm * std::exp(-r2 / (2.0 * w * w));
}

double rel_density_sharp(double r, double theta, double t, const DerivedParams& d,
                         bool* early_time) {
    const double gamma = d.v / (2.0 * d.dr_rel0);
    if (early_time) *early_time = t < 3.0 / gamma;
    if (r <= 0.0) throw std::invalid_argument("rel_density_sharp: r must be positive");
    if (r > d.v * t) return 0.0;
    const double c = std::cos(theta);
    return (3.0 / (4.0 * M_PI)) * (2.0 * gamma / d.v) * (c * c / (r * r)) *
           std::exp(-2.0 * gamma * (t - r / d.v));
}

double rel_profile(double rho, double zeta) {
    if (!(zeta > 0.0)) throw std::invalid_argument("rel_profile: zeta must be positive");
    const double u = rho / std::sqrt(2.0 * zeta);
    const double s = std::sqrt(zeta) / (2.0 * std::sqrt(2.0));
    // W = e^{i pi/4} (u + i s)
    const double inv_sqrt2 = M_SQRT1_2;
    const std::complex<double> W((u - s) * inv_sqrt2, (u + s) * inv_sqrt2);
    const double w2 = std::norm(faddeeva(W));
    return w2;
}

double profile_zeta(double t, const DerivedParams& d) {
    return t / (d.reduced_mass * d.dr_rel0 * d.dr_rel0);
}

double rel_density(double r, double theta, double t, const DerivedParams& d) {
    if (r <= 0.0) throw std::invalid_argument("rel_density: r must be positive");
    if (!(t > 0.0)) throw std::invalid_argument("rel_density: t must be positive");
    const double rho = (r - d.v * t) / d.dr_rel0;
    const double zeta = profile_zeta(t, d);
    const double c = std::cos(theta);
    return 3.0 / (16.0 * M_PI * d.dr_rel0) * (c * c / (r * r)) * rel_profile(rho, zeta);
}

double rel_width(double t, const DerivedParams& d) {
    return std::hypot(d.dr_rel0, t / (2.0 * d.reduced_mass * d.dr_rel0));
}

RelProfile sample_profile(double zeta, const std::vector<double>& rho_grid) {
    RelProfile out;
    out.zeta = zeta;
    out.rho = rho_grid;
    out.density.reserve(rho_grid.size());
    for (double rho : rho_grid) out.density.push_back(rel_profile(rho, zeta));
    return out;
}

}  // namespace breakup
