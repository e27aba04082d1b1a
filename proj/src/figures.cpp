#include "breakup/figures.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "breakup/dynamics.hpp"
#include "breakup/entanglement.hpp"
#include "breakup/oracle.hpp"
#include "breakup/wavepackets.hpp"

namespace breakup {

namespace {

// Section density for the zone construction. Fig. 7 lives in the
// sharp-edge regime: the support is strictly bounded by the circle
// r = v t, the dipole lobes by the cos^2 factor. The 1/r^2 envelope of
// the high-energy radial function is meaningless for k r of order one,
// so the section is masked below k* r = 10; the physical shell sits at
// r ~ v t, far outside the mask for any t >> 1/gamma.
constexpr double kMinKr = 10.0;

double section_density(double x, double z, double t, const DerivedParams& d) {
    const double r = std::hypot(x, z);
    if (r <= kMinKr / d.k_star || r > d.v * t) return 0.0;
    const double gamma = d.v / (2.0 * d.dr_rel0);
    const double cos2 = (z * z) / (r * r);
    return (3.0 / (4.0 * M_PI)) * (2.0 * gamma / d.v) * (cos2 / (r * r)) *
           std::exp(-2.0 * gamma * (t - r / d.v));
}

}  // namespace

ZoneMap newmoon_zones(double t, const SystemParams& p, double level,
                      const std::vector<std::array<double, 2>>& dot_centers,
                      int resolution) {
    if (!(level > 0.0 && level < 1.0))
        throw std::invalid_argument("newmoon_zones: level must lie in (0, 1)");
    if (resolution < 16) throw std::invalid_argument("newmoon_zones: resolution too small");
    const DerivedParams d = derive(p);
    if (!(t > 0.0)) throw std::invalid_argument("newmoon_zones: t must be positive");

    const double rt = d.v * t;
    if (rt < 4.0 * kMinKr / d.k_star)
        throw std::invalid_argument(
            "newmoon_zones: edge radius v t inside the short-range mask; pick a later t");
    const double L = 1.02 * rt;
    const int n = resolution;
    const double h = 2.0 * L / (n - 1);
    auto coord = [&](int i) { return -L + i * h; };

    std::vector<double> field(std::size_t(n) * n);
    double dmax = 0.0;
    for (int ix = 0; ix < n; ++ix)
        for (int iz = 0; iz < n; ++iz) {
            const double v = section_density(coord(ix), coord(iz), t, d);
            field[std::size_t(ix) * n + iz] = v;
            dmax = std::max(dmax, v);
        }

    ZoneMap zm;
    zm.level = level;
    zm.edge_radius = rt;
    zm.max_density = dmax;
    const double target = level * dmax;

    // Marching-style level-set extraction on cell edges, skipping cells cut
    // by the r = v t discontinuity; each crossing is tightened by bisection
    // so the reported points sit on the level to ~1e-5 of the maximum.
    auto refine = [&](double xa, double za, double xb, double zb) {
        double fa = section_density(xa, za, t, d) - target;
        for (int it = 0; it < 40; ++it) {
            const double xm = 0.5 * (xa + xb), zm2 = 0.5 * (za + zb);
            const double fm = section_density(xm, zm2, t, d) - target;
            if ((fa < 0.0) == (fm < 0.0)) {
                xa = xm;
                za = zm2;
                fa = fm;
            } else {
                xb = xm;
                zb = zm2;
            }
        }
        return std::array<double, 2>{0.5 * (xa + xb), 0.5 * (za + zb)};
    };

    for (int ix = 0; ix + 1 < n; ++ix) {
        for (int iz = 0; iz + 1 < n; ++iz) {
            const double x0 = coord(ix), x1 = coord(ix + 1);
            const double z0 = coord(iz), z1 = coord(iz + 1);
            // cells touching the edge circle are boundary, not level set
            auto min_abs = [](double a, double b) {
                return (a <= 0.0 && b >= 0.0) ? 0.0 : std::min(std::fabs(a), std::fabs(b));
            };
            const double rmin = std::hypot(min_abs(x0, x1), min_abs(z0, z1));
            const double rmax = std::hypot(std::max(std::fabs(x0), std::fabs(x1)),
                                           std::max(std::fabs(z0), std::fabs(z1)));
            if (rmin <= rt && rt <= rmax) continue;
            const double rmask = kMinKr / d.k_star;
            if (rmin <= rmask && rmask <= rmax) continue;
            const double f00 = field[std::size_t(ix) * n + iz] - target;
            const double f10 = field[std::size_t(ix + 1) * n + iz] - target;
            const double f01 = field[std::size_t(ix) * n + iz + 1] - target;
            if ((f00 < 0.0) != (f10 < 0.0))
                zm.contour.push_back(refine(x0, z0, x1, z0));
            if ((f00 < 0.0) != (f01 < 0.0))
                zm.contour.push_back(refine(x0, z0, x0, z1));
        }
    }

    const double dot_radius = cm_width(t, CmPacket{p.dr_cm0, d.total_mass});
    auto in_zone = [&](double x, double z) {
        return section_density(x, z, t, d) >= target;
    };
    for (const auto& c : dot_centers) {
        int inside = 0, total = 0;
        for (int ring = 0; ring <= 4; ++ring) {
            const double rr = dot_radius * ring / 4.0;
            const int nang = ring == 0 ? 1 : 16;
            for (int k = 0; k < nang; ++k) {
                const double ang = 2.0 * M_PI * k / nang;
                ++total;
                if (in_zone(c[0] + rr * std::cos(ang), c[1] + rr * std::sin(ang))) ++inside;
            }
        }
        Overlap ov = inside == total ? Overlap::Inside
                     : inside == 0   ? Overlap::Outside
                                     : Overlap::Edge;
        zm.dots.push_back({c, dot_radius, ov});
    }
    return zm;
}

FigureId figure_from_string(const std::string& s) {
    if (s == "fig1a") return FigureId::Fig1a;
    if (s == "fig1b") return FigureId::Fig1b;
    if (s == "fig2") return FigureId::Fig2;
    if (s == "fig3") return FigureId::Fig3;
    if (s == "fig4") return FigureId::Fig4;
    if (s == "fig5") return FigureId::Fig5;
    if (s == "fig6") return FigureId::Fig6;
    if (s == "fig8") return FigureId::Fig8;
    throw std::invalid_argument("unknown figure id: " + s);
}

std::string to_string(Overlap o) {
    switch (o) {
        case Overlap::Inside: return "Inside";
        case Overlap::Edge: return "Edge";
        case Overlap::Outside: return "Outside";
    }
    return "Outside";
}

namespace {

Table profile_table(double zeta, double lo, double hi, double step) {
    Table t;
    t.columns = {"rho", "zeta", "density"};
    for (double rho = lo; rho <= hi + 0.5 * step; rho += step)
        t.add_row({rho, zeta, rel_profile(rho, zeta)});
    return t;
}

std::vector<double> log_grid(double lo, double hi, int n) {
    std::vector<double> g(n);
    const double step = std::log(hi / lo) / (n - 1);
    for (int i = 0; i < n; ++i) g[i] = lo * std::exp(step * i);
    return g;
}

// Widths-vs-eta tables for one particle: (eta, single, coincidence).
Table widths_table(double m1, double m2, bool electron) {
    Table t;
    t.columns = {"eta", electron ? "s_e" : "s_i", electron ? "c_e" : "c_i"};
    for (double eta : log_grid(1e-3, 1e3, 301)) {
        const WidthReport r = width_report(eta, m1, m2);
        t.add_row({eta, electron ? r.s_e : r.s_i, electron ? r.c_e : r.c_i});
    }
    return t;
}

Table r_table(double m1, double m2, double lo = 1e-3, double hi = 1e3, int n = 301) {
    Table t;
    t.columns = {"eta", "ln_eta", "r"};
    for (double eta : log_grid(lo, hi, n))
        t.add_row({eta, std::log(eta), entanglement_r(eta, m1, m2)});
    return t;
}

// Concrete parameter set realizing given eta0 at m_e/M = 0.1 (only the
// dimensionless combinations matter for the plotted curves).
SystemParams trace_params(double eta0) {
    SystemParams p;
    p.m1 = 1.0;
    p.m2 = 9.0;
    p.omega = 1.5;
    p.e0 = -0.5;
    p.gamma = 0.05;
    const DerivedParams d0 = derive(p);
    p.dr_cm0 = eta0 * d0.dr_rel0;
    return p;
}

Table trace_table(double eta0) {
    const SystemParams p = trace_params(eta0);
    const DerivedParams d = derive(p);
    const EvolutionTrace tr = evolve(p, default_time_grid(d));
    Table t;
    t.columns = {"t", "t_over_tspr", "dr_cm_over_dr_rel0", "dr_rel_over_dr_rel0",
                 "eta", "r_e", "r_i"};
    const double tspr = std::max(d.t_spr_cm, d.t_spr_rel);
    for (std::size_t i = 0; i < tr.times.size(); ++i)
        t.add_row({tr.times[i], tr.times[i] / tspr, tr.dr_cm[i] / d.dr_rel0,
                   tr.dr_rel[i] / d.dr_rel0, tr.eta[i], tr.r_e[i], tr.r_i[i]});
    return t;
}

Table grid_table(const JointDensityGrid& g) {
    Table t;
    t.columns = {"x_e", "x_i", "density"};
    for (std::size_t ie = 0; ie < g.xe.size(); ++ie)
        for (std::size_t ii = 0; ii < g.xi.size(); ++ii)
            t.add_row({g.xe[ie], g.xi[ii], g.at(ie, ii)});
    return t;
}

}  // namespace

FigureData fig_profiles(FigureId which) {
    FigureData out;
    switch (which) {
        case FigureId::Fig1a:
            out.series.emplace_back("profile", profile_table(0.01, -10.0, 3.0, 0.01));
            break;
        case FigureId::Fig1b:
            out.series.emplace_back("profile", profile_table(20.0, -60.0, 60.0, 0.1));
            break;
        case FigureId::Fig2: {
            // m_e/m_i = 0.2, eta = 0.5, gamma t = 4
            const JointDensityGrid g =
                build_grid(GridModel::GaussianExponential, 0.5, 1.0, 5.0, 4.0, 128);
            out.series.emplace_back("joint_density", grid_table(g));
            break;
        }
        case FigureId::Fig3:
            out.series.emplace_back("electron", widths_table(1.0, 10.0, true));
            out.series.emplace_back("ion", widths_table(1.0, 10.0, false));
            break;
        case FigureId::Fig4:
            out.series.emplace_back("entanglement", r_table(1.0, 10.0));
            break;
        case FigureId::Fig5:
            out.series.emplace_back("trace", trace_table(0.05));
            break;
        case FigureId::Fig6:
            out.series.emplace_back("trace", trace_table(0.5));
            break;
        case FigureId::Fig8:
            out.series.emplace_back("molecular", r_table(1.0, 1.0, 1e-8, 1e8, 200));
            out.series.emplace_back("ionization", r_table(1.0, 1e4, 1e-8, 1e8, 200));
            break;
    }
    return out;
}

}  // namespace breakup
