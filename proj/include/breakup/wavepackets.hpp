#ifndef BREAKUP_WAVEPACKETS_HPP_
#define BREAKUP_WAVEPACKETS_HPP_

#include <array>
#include <vector>

#include "breakup/params.hpp"

namespace breakup {

/// Spreading Gaussian center-of-mass packet.
struct CmPacket {
    double dr0;   // initial rms width
    double mass;  // total mass M
};

/// Width of the cm packet at time t: sqrt(dr0^2 + (t / (2 M dr0))^2).
/// Monotone nondecreasing; spreading velocity 1/(2 M dr0) at late times.
double cm_width(double t, const CmPacket& p);

/// Isotropic Gaussian probability density |Psi_cm|^2 at position r_cm;
/// integrates to 1 over 3-space at every t.
double cm_density(const std::array<double, 3>& r_cm, double t, const CmPacket& p);

/// Relative-motion density in the no-dispersion (sharp-edge) regime:
/// (3/4pi) (2 gamma / v) (cos^2 theta / r^2) exp(-2 gamma (t - r/v))
/// for r < v t, zero beyond the edge. Normalized so the 3D integral is
/// exactly 1 - exp(-2 gamma t). Valid for t >> 1/gamma; when t < 3/gamma
/// the optional early_time flag is set.
double rel_density_sharp(double r, double theta, double t, const DerivedParams& d,
                         bool* early_time = nullptr);

/// Dimensionless relative-motion profile S(rho, zeta): the bracketed
/// shape of the dispersive density, with rho = (r - vt)/dr_rel0 and
/// zeta the time in units of the profile spreading time mu dr_rel0^2.
/// The dimensional density is (3 / (16 pi dr_rel0)) (cos^2 theta / r^2) S.
///
/// Internally S = |w(W)|^2 with W = e^{i pi/4} (rho/sqrt(2 zeta)
/// + i sqrt(zeta)/(2 sqrt 2)) and w the Faddeeva function; the naive
/// e^rho |1 - Erf(...)|^2 product overflows, this form never does.
/// Throws std::invalid_argument for zeta <= 0 and std::domain_error when
/// the kernel argument leaves its accuracy envelope.
double rel_profile(double rho, double zeta);

/// Time argument of the profile: zeta = t / (mu dr_rel0^2).
double profile_zeta(double t, const DerivedParams& d);

/// Dimensional dispersive relative-motion density at (r, theta) and time t.
double rel_density(double r, double theta, double t, const DerivedParams& d);

/// Smooth width law for the relative packet,
/// sqrt(dr_rel0^2 + (t / (2 mu dr_rel0))^2); shares the cm spreading-law
/// prefactor so that the eta fixed point and asymptote are exact.
double rel_width(double t, const DerivedParams& d);

/// Sampled profile at fixed zeta.
struct RelProfile {
    double zeta;
    std::vector<double> rho;
    std::vector<double> density;  // S(rho, zeta)
};

RelProfile sample_profile(double zeta, const std::vector<double>& rho_grid);

}  // namespace breakup

#endif
