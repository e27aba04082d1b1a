#ifndef BREAKUP_DYNAMICS_HPP_
#define BREAKUP_DYNAMICS_HPP_

#include <vector>

#include "breakup/params.hpp"

namespace breakup {

/// The width pair and their ratio at one time.
struct PacketWidths {
    double t;
    double dr_cm;
    double dr_rel;
    double eta;
};

PacketWidths packet_widths(double t, const SystemParams& p);

/// Widths, eta, and entanglement parameter along a time grid.
struct EvolutionTrace {
    std::vector<double> times;
    std::vector<double> dr_cm;
    std::vector<double> dr_rel;
    std::vector<double> eta;
    std::vector<double> r_e;
    std::vector<double> r_i;
};

/// Evaluates cm/rel widths, eta(t) and R(t) on the given (sorted,
/// nonnegative, non-empty) time grid. eta is monotone: rising toward
/// eta_inf when eta0 < eta_star, falling when eta0 > eta_star, constant
/// at the stability point eta0 = eta_star.
EvolutionTrace evolve(const SystemParams& p, const std::vector<double>& t_grid);

/// Long-time limit of eta(t): (mu/M)/eta0.
double eta_asymptote(const SystemParams& p);

/// SystemParams for a dissociating diatomic: fragment masses M1, M2,
/// photon energy omega counted from the dissociation threshold (so the
/// energy release is omega itself), decay rate gamma_d and initial cm
/// width. The relative velocity follows exactly from the energy release.
SystemParams dissociation_preset(double M1, double M2, double omega, double gamma_d,
                                 double dr_cm0);

/// Log-spaced default grid over [1e-2, 1e4] times the larger spreading
/// time, with t = 0 prepended.
std::vector<double> default_time_grid(const DerivedParams& d, int n = 400);

}  // namespace breakup

#endif
