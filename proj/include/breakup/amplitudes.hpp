#ifndef BREAKUP_AMPLITUDES_HPP_
#define BREAKUP_AMPLITUDES_HPP_

#include <complex>
#include <functional>

#include "breakup/params.hpp"

namespace breakup {

// Two-level-plus-continuum amplitude dynamics for a rectangular pulse in
// the rotating-wave approximation, with the continuum adiabatically
// eliminated (no level shift) and the dipole coupling frozen at E*.

/// Ground-state amplitude C0(t) = exp(-i e0 t - gamma t), t >= 0.
std::complex<double> ground_amplitude(double t, const SystemParams& p);

/// Amplitudes at a fixed time: the ground amplitude (|c0| = exp(-gamma t))
/// and the continuum amplitude density as a callable over E
/// (ce(E, 0) = 0 for all E).
struct AmplitudeState {
    double t;
    std::complex<double> c0;
    std::function<std::complex<double>(double)> ce;
};

AmplitudeState amplitude_state(double t, double coupling, const SystemParams& p);

/// Continuum amplitude density C_E(t) (units: amplitude per sqrt(energy));
/// coupling is the bound-free matrix element d_E0 . E0/2 at E = E*,
/// treated as constant across the resonance window:
///   C_E(t) = coupling / (E - E* + i gamma)
///            * [exp(-(i e0 + gamma) t) - exp(-i (E - omega) t)].
/// C_E(E, 0) = 0 for all E.
std::complex<double> continuum_amplitude(double energy, double t, double coupling,
                                         const SystemParams& p);

/// Total continuum population: integral over E in [0, inf) of |C_E(t)|^2
/// by adaptive quadrature (panels around the resonance plus tail maps).
/// With coupling^2 = gamma / pi this approaches 1 - exp(-2 gamma t) up to
/// pole-approximation corrections of order gamma/E*.
double continuum_norm(double t, double coupling, const SystemParams& p);

/// High-energy field-free Coulomb radial function for l = 1:
///   sqrt(2 mu / (pi k)) (1/r) cos(k r [+ (1/(k a0)) ln(2 k r) + delta_1]),
/// with k = sqrt(2 mu E) and a0 = 1/mu. The logarithmic term and the
/// Coulomb phase delta_1 are included only when include_coulomb_phase is
/// set; they are dropped in the residue evaluation of the packet integral.
double radial_high_energy(double r, double energy, double reduced_mass,
                          bool include_coulomb_phase = false);

}  // namespace breakup

#endif
