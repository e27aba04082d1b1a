#include "breakup/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "breakup/entanglement.hpp"
#include "breakup/wavepackets.hpp"

namespace breakup {

PacketWidths packet_widths(double t, const SystemParams& p) {
    if (t < 0.0) throw std::invalid_argument("packet_widths: t must be >= 0");
    const DerivedParams d = derive(p);
    const double wc = cm_width(t, CmPacket{p.dr_cm0, d.total_mass});
    const double wr = rel_width(t, d);
    return {t, wc, wr, wc / wr};
}

EvolutionTrace evolve(const SystemParams& p, const std::vector<double>& t_grid) {
    if (t_grid.empty()) throw std::invalid_argument("evolve: empty time grid");
    if (!std::is_sorted(t_grid.begin(), t_grid.end()))
        throw std::invalid_argument("evolve: time grid must be sorted");
    if (t_grid.front() < 0.0)
        throw std::invalid_argument("evolve: times must be nonnegative");

    const DerivedParams d = derive(p);
    const CmPacket cm{p.dr_cm0, d.total_mass};

    EvolutionTrace tr;
    tr.times = t_grid;
    const std::size_t n = t_grid.size();
    tr.dr_cm.reserve(n);
    tr.dr_rel.reserve(n);
    tr.eta.reserve(n);
    tr.r_e.reserve(n);
    tr.r_i.reserve(n);
    for (double t : t_grid) {
        const double wc = cm_width(t, cm);
        const double wr = rel_width(t, d);
        const double eta = wc / wr;
        tr.dr_cm.push_back(wc);
        tr.dr_rel.push_back(wr);
        tr.eta.push_back(eta);
        const WidthReport rep = width_report(eta, p.m1, p.m2);
        tr.r_e.push_back(rep.r_e);
        tr.r_i.push_back(rep.r_i);
    }
    return tr;
}

double eta_asymptote(const SystemParams& p) {
    const DerivedParams d = derive(p);
    return d.eta_inf;
}

SystemParams dissociation_preset(double M1, double M2, double omega, double gamma_d,
                                 double dr_cm0) {
    if (!(M1 > 0.0) || !(M2 > 0.0) || !(omega > 0.0) || !(gamma_d > 0.0) ||
        !(dr_cm0 > 0.0))
        throw std::invalid_argument("dissociation_preset: all inputs must be positive");
    SystemParams p;
    p.m1 = M1;
    p.m2 = M2;
    p.omega = omega;  // counted from threshold: E* = omega
    p.e0 = 0.0;
    p.gamma = gamma_d;
    p.dr_cm0 = dr_cm0;
    p.mode = Mode::Dissociation;
    return p;
}

std::vector<double> default_time_grid(const DerivedParams& d, int n) {
    if (n < 2) throw std::invalid_argument("default_time_grid: need at least 2 points");
    const double t_max_spr = std::max(d.t_spr_cm, d.t_spr_rel);
    const double lo = 1e-2 * t_max_spr;
    const double hi = 1e4 * t_max_spr;
    std::vector<double> grid;
    grid.reserve(n + 1);
    grid.push_back(0.0);
    const double step = std::log(hi / lo) / (n - 1);
    for (int i = 0; i < n; ++i) grid.push_back(lo * std::exp(step * i));
    return grid;
}

}  // namespace breakup
