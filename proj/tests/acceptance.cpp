// Acceptance suite: runs every criterion at its stated tolerance and
// prints one PASS/FAIL line per criterion. Exit status is the number of
// failing criteria. An optional argument restricts the run to a single
// criterion number.

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "breakup/amplitudes.hpp"
#include "breakup/cli.hpp"
#include "breakup/dynamics.hpp"
#include "breakup/entanglement.hpp"
#include "breakup/figures.hpp"
#include "breakup/oracle.hpp"
#include "breakup/params.hpp"
#include "breakup/quadrature.hpp"
#include "breakup/wavepackets.hpp"

using namespace breakup;
namespace fs = std::filesystem;

namespace {

struct Outcome {
    bool pass;
    std::string detail;
};

std::vector<double> log_grid(double lo, double hi, int n) {
    std::vector<double> g(n);
    const double step = std::log(hi / lo) / (n - 1);
    for (int i = 0; i < n; ++i) g[i] = lo * std::exp(step * i);
    return g;
}

std::string fmt(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3g", x);
    return buf;
}

const std::vector<double> kMassRatios = {1e-4, 0.1, 0.2, 1.0};

// ---- criterion 1: R(eta_star) = 1 to 1e-12 --------------------------------

Outcome c1_r_minimum() {
    double worst = 0.0;
    for (double ratio : kMassRatios) {
        const double m1 = 1.0, m2 = 1.0 / ratio;
        const double eta_star = std::sqrt(m1 * m2) / (m1 + m2);
        worst = std::max(worst, std::fabs(entanglement_r(eta_star, m1, m2) - 1.0));
    }
    return {worst <= 1e-12, "max |R(eta*) - 1| = " + fmt(worst)};
}

// ---- criterion 2: duality R((mu/M)/eta) = R(eta) to 1e-12 -----------------

Outcome c2_duality() {
    // read as relative deviation: R grows to ~1e8 on this grid, where a
    // 1e-12 absolute match is below double resolution
    double worst = 0.0;
    for (double ratio : kMassRatios) {
        const double m1 = 1.0, m2 = 1.0 / ratio;
        const double mu_over_m = m1 * m2 / ((m1 + m2) * (m1 + m2));
        for (double eta : log_grid(1e-8, 1e8, 200)) {
            const double a = entanglement_r(eta, m1, m2);
            const double b = entanglement_r(mu_over_m / eta, m1, m2);
            worst = std::max(worst, std::fabs(a - b) / a);
        }
    }
    return {worst <= 1e-12, "max relative |R(dual) - R| = " + fmt(worst)};
}

// ---- criterion 3: asymptotic slopes and plateau ----------------------------

Outcome c3_slopes() {
    const double m1 = 1.0, m2 = 1e4;
    auto slope = [&](double lo, double hi) {
        const auto etas = log_grid(lo, hi, 60);
        double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
        for (double eta : etas) {
            const double x = std::log(eta), y = std::log(entanglement_r(eta, m1, m2));
            sx += x;
            sy += y;
            sxx += x * x;
            sxy += x * y;
        }
        const double n = double(etas.size());
        return (sxy - sx * sy / n) / (sxx - sx * sx / n);
    };
    const double s_lo = slope(1e-8, 1e-6);
    const double s_hi = slope(1e2, 1e4);
    double plateau_max = 0.0;
    bool plateau_ok = true;
    for (double eta : log_grid(1e-2, 1e-1, 50)) {
        const double r = entanglement_r(eta, m1, m2);
        plateau_max = std::max(plateau_max, r);
        plateau_ok = plateau_ok && r >= 1.0 && r <= 1.01;
    }
    const bool pass = std::fabs(s_lo + 1.0) <= 0.01 && std::fabs(s_hi - 1.0) <= 0.01 &&
                      plateau_ok;
    return {pass, "slopes " + fmt(s_lo) + " / " + fmt(s_hi) +
                      ", plateau max R = " + fmt(plateau_max)};
}

// ---- criterion 4: closed form vs quadrature oracle -------------------------

SystemParams pole_params(double gamma) {
    SystemParams p;
    p.m1 = 1.0;
    p.m2 = 1836.0;
    p.omega = 1.5;
    p.e0 = -0.5;
    p.gamma = gamma;
    p.dr_cm0 = 1.0;
    return p;
}

Outcome c4_quadrature_oracle() {
    const SystemParams p = pole_params(1e-4);
    std::vector<double> rho;
    for (double r = -10.0; r <= 3.0 + 1e-9; r += 0.1) rho.push_back(r);
    double worst = 0.0;
    for (double zeta : {0.01, 0.3, 1.0, 5.0, 20.0}) {
        const std::vector<double> oracle = quad_rel_packet(rho, zeta, p);
        double peak = 0.0;
        for (double v : oracle) peak = std::max(peak, v);
        for (std::size_t i = 0; i < rho.size(); ++i)
            worst = std::max(worst,
                             std::fabs(rel_profile(rho[i], zeta) - oracle[i]) / peak);
    }
    return {worst <= 1e-5, "max |closed - quad| / peak = " + fmt(worst)};
}

// ---- criterion 5: regime limits at zeta = 0.01 and 20 ----------------------

Outcome c5_regime_limits() {
    // small-zeta wing vs the pure exponential
    double dev_exp = 0.0;
    for (double rho = -5.0; rho <= -0.5 + 1e-12; rho += 0.01)
        dev_exp = std::max(dev_exp,
                           std::fabs(rel_profile(rho, 0.01) / (4.0 * std::exp(rho)) - 1.0));
    // large-zeta center vs the Lorentzian over +-3 half-widths
    double dev_lor = 0.0;
    const double zeta = 20.0;
    for (int i = -60; i <= 60; ++i) {
        const double rho = i * zeta / 40.0;
        const double lor = (2.0 / M_PI) * zeta / (rho * rho + zeta * zeta / 4.0);
        dev_lor = std::max(dev_lor, std::fabs(rel_profile(rho, zeta) / lor - 1.0));
    }
    const bool pass = dev_exp <= 0.02 && dev_lor <= 0.03;
    return {pass, "exp-wing dev = " + fmt(dev_exp) + " (limit 0.02), Lorentzian dev = " +
                      fmt(dev_lor) + " (limit 0.03)"};
}

// ---- criterion 6: Gaussian-oracle exactness --------------------------------

Outcome c6_gaussian_oracle() {
    double worst = 0.0;
    std::string at;
    for (double eta : {1e-3, 1e-2, 1e-1, 1.0, 1e1, 1e2, 1e3}) {
        for (double ratio : kMassRatios) {
            const double m1 = 1.0, m2 = 1.0 / ratio;
            const int res = recommended_resolution(GridModel::GaussianGaussian, eta, m1, m2);
            const JointDensityGrid g =
                build_grid(GridModel::GaussianGaussian, eta, m1, m2, 0.0, res);
            const GridWidths w = grid_widths(g, 0.0, 0.0);
            const WidthReport r = width_report(eta, m1, m2);
            for (auto [grid, formula] : {std::pair{w.s_e, r.s_e},
                                         std::pair{w.s_i, r.s_i},
                                         std::pair{w.c_e, r.c_e},
                                         std::pair{w.c_i, r.c_i}}) {
                const double dev = std::fabs(grid - formula) / formula;
                if (dev > worst) {
                    worst = dev;
                    at = "eta=" + fmt(eta) + " ratio=" + fmt(ratio);
                }
            }
        }
    }
    return {worst <= 1e-4, "max relative width deviation = " + fmt(worst) + " at " + at};
}

// ---- criterion 7: evolution fixed point and return --------------------------

SystemParams trace_params(double eta0) {
    SystemParams p;
    p.m1 = 1.0;
    p.m2 = 9.0;  // m_e/M = 0.1
    p.omega = 1.5;
    p.e0 = -0.5;
    p.gamma = 0.05;
    p.dr_cm0 = 1.0;
    const DerivedParams d = derive(p);
    p.dr_cm0 = eta0 * d.dr_rel0;
    return p;
}

Outcome c7_evolution() {
    std::string detail;
    bool pass = true;

    // fixed point
    {
        SystemParams p = trace_params(1.0);
        const DerivedParams d0 = derive(p);
        p.dr_cm0 = d0.eta_star * d0.dr_rel0;
        const DerivedParams d = derive(p);
        std::vector<double> grid{0.0};
        const double t_spr = std::max(d.t_spr_cm, d.t_spr_rel);
        for (double t : log_grid(1e-2 * t_spr, 1e4 * t_spr, 400)) grid.push_back(t);
        const EvolutionTrace tr = evolve(p, grid);
        double dev_eta = 0.0, dev_r = 0.0;
        for (std::size_t i = 0; i < tr.eta.size(); ++i) {
            dev_eta = std::max(dev_eta, std::fabs(tr.eta[i] - d.eta_star));
            dev_r = std::max(dev_r, std::fabs(tr.r_e[i] - 1.0));
        }
        pass = pass && dev_eta <= 1e-12 && dev_r <= 1e-12;
        detail += "fixed point |eta-eta*| = " + fmt(dev_eta) + ", |R-1| = " + fmt(dev_r);
    }

    // monotone approach and entanglement return for eta0 = 0.05, 0.5
    for (double eta0 : {0.05, 0.5}) {
        const SystemParams p = trace_params(eta0);
        const DerivedParams d = derive(p);
        const double t_spr = std::max(d.t_spr_cm, d.t_spr_rel);
        std::vector<double> grid{0.0};
        for (double t : log_grid(1e-2 * t_spr, 1.0 * t_spr, 100)) grid.push_back(t);
        for (double t : log_grid(1.001 * t_spr, 1e4 * t_spr, 300)) grid.push_back(t);
        const EvolutionTrace tr = evolve(p, grid);
        bool monotone = true;
        const bool rising = eta0 < d.eta_star;
        for (std::size_t i = 1; i < tr.eta.size(); ++i) {
            if (rising ? tr.eta[i] < tr.eta[i - 1] : tr.eta[i] > tr.eta[i - 1])
                monotone = false;
        }
        const double eta_end_err =
            std::fabs(tr.eta.back() - (d.reduced_mass / d.total_mass) / eta0);
        const double r_return =
            std::fabs(tr.r_e.back() - tr.r_e.front()) / tr.r_e.front();
        pass = pass && monotone && eta_end_err <= 1e-3 && r_return <= 1e-3;
        detail += "; eta0=" + fmt(eta0) + (monotone ? " monotone" : " NOT monotone") +
                  ", |eta(end)-eta_inf| = " + fmt(eta_end_err) +
                  ", |R(end)-R(0)|/R(0) = " + fmt(r_return);
    }
    return {pass, detail};
}

// ---- criterion 8: photodissociation -----------------------------------------

Outcome c8_dissociation() {
    const SystemParams p = dissociation_preset(2000.0, 2000.0, 0.05, 1e-5, 10.0);
    const DerivedParams d = derive(p);
    const bool star_exact = d.eta_star == 0.5;

    const FigureData f8 = fig_profiles(FigureId::Fig8);
    const Table& mol = f8.series[0].second;
    bool all_ge_1 = true, away_large = true;
    double rmin = 1e300, eta_min = 0.0;
    for (const auto& row : mol.rows) {
        const double eta = std::get<double>(row[0]);
        const double r = std::get<double>(row[2]);
        if (r < 1.0 - 1e-14) all_ge_1 = false;
        if (r < rmin) {
            rmin = r;
            eta_min = eta;
        }
        // equality only at eta = 1/2: R = cosh(ln(eta/0.5) ...) grows away
        if (std::fabs(std::log(eta / 0.5)) > 0.25 && r < 1.0 + 0.03) away_large = false;
    }
    const bool min_at_half = std::fabs(std::log(eta_min / 0.5)) < 0.1;
    const bool pass = star_exact && all_ge_1 && away_large && min_at_half;
    return {pass, std::string("eta* == 1/2 ") + (star_exact ? "exactly" : "VIOLATED") +
                      ", min R = " + fmt(rmin) + " at eta = " + fmt(eta_min)};
}

// ---- criterion 9: normalization ---------------------------------------------

Outcome c9_normalization() {
    bool pass = true;
    std::string detail;

    // dispersive density: full 3D integral via angular and radial quadrature
    for (double zeta : {0.01, 1.0, 20.0}) {
        const double ratio = std::min(1e4, 8000.0 / std::sqrt(zeta / 2.0));
        SystemParams p = pole_params(1.0);
        p.gamma = (p.e0 + p.omega) / ratio;
        const DerivedParams d = derive(p);
        const double t = zeta * d.reduced_mass * d.dr_rel0 * d.dr_rel0;

        const auto angular = integrate<double>(
            [](double th) { return 2.0 * M_PI * std::sin(th) * std::cos(th) * std::cos(th); },
            0.0, M_PI, 1e-12, 1e-12);

        // radial integral in rho units: r = v t + rho dr_rel0
        const double rho_min = -d.v * t / d.dr_rel0;
        auto fr = [&](double rho) {
            const double r = d.v * t + rho * d.dr_rel0;
            return r * r * rel_density(r, 0.0, t, d) * d.dr_rel0;
        };
        const double lo = std::max(rho_min, -(40.0 * zeta + 40.0));
        const double hi = 10.0 + 5.0 * zeta;
        auto core = integrate_segmented<double>(
            fr, {lo, std::min(-2.0 * zeta, -1.0), 0.0, hi}, 1e-11, 1e-11);
        double radial = core.value;
        if (lo > rho_min) {
            std::vector<double> cuts = {rho_min};
            for (double x = 0.5 * rho_min; x < lo; x *= 0.5) cuts.push_back(x);
            cuts.push_back(lo);
            radial += integrate_segmented<double>(fr, cuts, 1e-11, 1e-11).value;
        }
        radial += integrate_to_infinity<double>(fr, hi, 1e-11, 1e-11).value;

        const double total = angular.value * radial;
        const double err = std::fabs(total - 1.0);
        pass = pass && err <= 1e-4;
        detail += "zeta=" + fmt(zeta) + ": |I-1| = " + fmt(err) + "; ";
    }

    // sharp-edge density: integral equals 1 - exp(-2 gamma t) to 1e-9
    {
        const SystemParams p = pole_params(1e-4);
        const DerivedParams d = derive(p);
        const double gamma = p.gamma;
        double worst = 0.0;
        for (double tk : {2.0, 10.0}) {
            const double t = tk / gamma;
            const double rt = d.v * t;
            auto fr = [&](double r) {
                return (4.0 * M_PI / 3.0) * r * r * rel_density_sharp(r, 0.0, t, d);
            };
            auto q = integrate_segmented<double>(fr, {1e-12, rt / 2, rt}, 1e-13, 1e-13);
            worst = std::max(worst,
                             std::fabs(q.value - (1.0 - std::exp(-2.0 * gamma * t))));
        }
        pass = pass && worst <= 1e-9;
        detail += "sharp-edge |I - (1-e^{-2gt})| = " + fmt(worst);
    }
    return {pass, detail};
}

// ---- criterion 10: amplitude unitarity ---------------------------------------

Outcome c10_unitarity() {
    const SystemParams p = pole_params(1e-4);  // gamma/E* = 1e-4
    const double coupling = std::sqrt(p.gamma / M_PI);
    double worst = 0.0;
    for (double tk : {0.0, 1.0, 10.0}) {
        const double t = tk / p.gamma;
        const double total = std::norm(ground_amplitude(t, p)) +
                             (t == 0.0 ? 0.0 : continuum_norm(t, coupling, p));
        worst = std::max(worst, std::fabs(total - 1.0));
    }
    return {worst <= 1e-3, "max |1 - norm| = " + fmt(worst)};
}

// ---- criterion 11: determinism ------------------------------------------------

std::string slurp(const fs::path& f) {
    std::ifstream in(f, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Outcome c11_determinism() {
    const fs::path base = fs::temp_directory_path() / "breakup_acceptance_det";
    fs::remove_all(base);
    RunConfig a;
    a.command = "figure";
    a.figure_id = "fig4";
    a.out_dir = base / "a";
    RunConfig b = a;
    b.out_dir = base / "b";
    if (run(a) != 0 || run(b) != 0) return {false, "figure run failed"};
    bool same = slurp(a.out_dir / "fig4_entanglement.csv") ==
                slurp(b.out_dir / "fig4_entanglement.csv");

    // through the installed binary as well, when its location is known
    std::string how = "in-process";
    if (const char* exe = std::getenv("BREAKUP_CLI")) {
        const fs::path ca = base / "cli_a", cb = base / "cli_b";
        const std::string cmd1 = std::string(exe) + " figure --id fig4 --out " + ca.string();
        const std::string cmd2 = std::string(exe) + " figure --id fig4 --out " + cb.string();
        if (std::system(cmd1.c_str()) != 0 || std::system(cmd2.c_str()) != 0)
            return {false, "cli figure run failed"};
        same = same && slurp(ca / "fig4_entanglement.csv") ==
                           slurp(cb / "fig4_entanglement.csv") &&
               slurp(ca / "manifest.json") == slurp(cb / "manifest.json");
        how = "in-process and cli binary";
    }
    fs::remove_all(base);
    return {same, std::string("byte-identical outputs (") + how + ")"};
}

}  // namespace

int main(int argc, char** argv) {
    struct Criterion {
        int id;
        const char* label;
        std::function<Outcome()> fn;
    };
    const std::vector<Criterion> criteria = {
        {1, "R-minimum at the stability point", c1_r_minimum},
        {2, "duality R((mu/M)/eta) = R(eta)", c2_duality},
        {3, "asymptotic slopes and plateau of R(eta)", c3_slopes},
        {4, "closed form vs quadrature oracle", c4_quadrature_oracle},
        {5, "regime limits at zeta = 0.01 and zeta = 20", c5_regime_limits},
        {6, "Gaussian-oracle exactness of the width formulas", c6_gaussian_oracle},
        {7, "evolution fixed point and entanglement return", c7_evolution},
        {8, "photodissociation stability point and molecular curve", c8_dissociation},
        {9, "density normalization (dispersive and sharp-edge)", c9_normalization},
        {10, "amplitude unitarity", c10_unitarity},
        {11, "deterministic figure output", c11_determinism},
    };

    int only = 0;
    if (argc > 1) only = std::atoi(argv[1]);

    int failed = 0;
    for (const auto& c : criteria) {
        if (only != 0 && c.id != only) continue;
        Outcome o;
        try {
            o = c.fn();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        std::printf("%s  criterion %2d: %s (%s)\n", o.pass ? "PASS" : "FAIL", c.id,
                    c.label, o.detail.c_str());
        std::fflush(stdout);
        if (!o.pass) ++failed;
    }
    return failed;
}
