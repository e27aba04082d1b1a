#include "breakup/cli.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <stdexcept>

#include <json.hpp>

#include "breakup/amplitudes.hpp"
#include "breakup/dynamics.hpp"
#include "breakup/entanglement.hpp"
#include "breakup/figures.hpp"
#include "breakup/oracle.hpp"
#include "breakup/quadrature.hpp"
#include "breakup/tabular.hpp"
#include "breakup/wavepackets.hpp"

namespace breakup {

std::vector<double> GridSpec::points() const {
    if (n < 2) throw std::runtime_error("grid spec: need at least 2 points");
    std::vector<double> g(n);
    if (logarithmic) {
        if (!(lo > 0.0) || !(hi > lo)) throw std::runtime_error("grid spec: bad log range");
        const double step = std::log(hi / lo) / (n - 1);
        for (int i = 0; i < n; ++i) g[i] = lo * std::exp(step * i);
    } else {
        if (!(hi > lo)) throw std::runtime_error("grid spec: bad range");
        const double step = (hi - lo) / (n - 1);
        for (int i = 0; i < n; ++i) g[i] = lo + step * i;
    }
    return g;
}

GridSpec parse_grid_spec(const std::string& s) {
    GridSpec g;
    char kind[8];
    double lo, hi;
    int n;
    if (std::sscanf(s.c_str(), "%7[a-z]:%lf:%lf:%d", kind, &lo, &hi, &n) != 4)
        throw std::runtime_error("bad grid spec '" + s + "' (expected lin|log:lo:hi:n)");
    const std::string k = kind;
    if (k == "log")
        g.logarithmic = true;
    else if (k == "lin")
        g.logarithmic = false;
    else
        throw std::runtime_error("bad grid kind '" + k + "' (expected lin|log)");
    g.lo = lo;
    g.hi = hi;
    g.n = n;
    return g;
}

namespace {

using nlohmann::json;

std::string num_token(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%g", x);
    return buf;
}

json params_json(const SystemParams& p) {
    return {{"m1", format_double(p.m1)},       {"m2", format_double(p.m2)},
            {"omega", format_double(p.omega)}, {"e0", format_double(p.e0)},
            {"gamma", format_double(p.gamma)}, {"dr_cm0", format_double(p.dr_cm0)},
            {"mode", to_string(p.mode)}};
}

json grid_json(const GridSpec& g) {
    return {{"kind", g.logarithmic ? "log" : "lin"},
            {"lo", format_double(g.lo)},
            {"hi", format_double(g.hi)},
            {"n", g.n}};
}

struct Manifest {
    json j;
    std::vector<std::string> outputs;

    // echo everything needed to reproduce the run
    Manifest(const RunConfig& cfg) {
        j["tool"] = "breakup";
        j["version"] = kVersion;
        j["command"] = cfg.command;
        j["format"] = cfg.format;
        if (cfg.params) j["params"] = params_json(*cfg.params);
        json opts;
        if (cfg.command == "widths") {
            json ts = json::array();
            for (double t : cfg.times) ts.push_back(format_double(t));
            opts["times"] = ts;
        } else if (cfg.command == "profile") {
            json zs = json::array();
            for (double z : cfg.zetas) zs.push_back(format_double(z));
            opts["zeta"] = zs;
            opts["rho_grid"] = grid_json(cfg.rho_grid);
        } else if (cfg.command == "entanglement") {
            opts["m1"] = format_double(cfg.m1);
            opts["m2"] = format_double(cfg.m2);
            opts["eta_grid"] = grid_json(cfg.eta_grid);
        } else if (cfg.command == "evolve") {
            opts["t_grid"] = cfg.t_grid ? grid_json(*cfg.t_grid) : json("default");
        } else if (cfg.command == "oracle") {
            opts["suite"] = cfg.suite;
            opts["tolerance_scale"] = format_double(cfg.tolerance_scale);
        } else if (cfg.command == "figure") {
            opts["id"] = cfg.figure_id;
            if (cfg.figure_id == "fig7") opts["level"] = format_double(cfg.zone_level);
        }
        j["options"] = opts;
        j["status"] = "ok";
    }
    void write(const std::filesystem::path& dir) {
        j["outputs"] = outputs;
        std::ofstream out(dir / "manifest.json", std::ios::binary);
        if (!out) throw std::runtime_error("cannot write manifest");
        out << j.dump(2) << '\n';
    }
};

void emit(Manifest& m, const RunConfig& cfg, const std::string& stem, const Table& t) {
    const std::string name = stem + (cfg.format == "json" ? ".json" : ".csv");
    write_table(t, cfg.out_dir / name, cfg.format);
    m.outputs.push_back(name);
}

int run_widths(const RunConfig& cfg, Manifest& m) {
    if (!cfg.params) throw UsageError("widths: --config is required");
    if (cfg.times.empty()) throw UsageError("widths: --times is required");
    Table t;
    t.columns = {"t", "dr_cm", "dr_rel", "eta"};
    for (double time : cfg.times) {
        const PacketWidths w = packet_widths(time, *cfg.params);
        t.add_row({w.t, w.dr_cm, w.dr_rel, w.eta});
    }
    emit(m, cfg, "widths", t);
    return kExitOk;
}

int run_profile(const RunConfig& cfg, Manifest& m) {
    if (cfg.zetas.empty()) throw UsageError("profile: --zeta is required");
    const std::vector<double> rho = cfg.rho_grid.points();
    for (double zeta : cfg.zetas) {
        Table t;
        t.columns = {"rho", "zeta", "density"};
        for (double r : rho) t.add_row({r, zeta, rel_profile(r, zeta)});
        emit(m, cfg, "profile_zeta_" + num_token(zeta), t);
    }
    return kExitOk;
}

int run_entanglement(const RunConfig& cfg, Manifest& m) {
    Table t;
    t.columns = {"eta", "s_e", "c_e", "s_i", "c_i", "r_e", "r_i", "regime"};
    for (double eta : cfg.eta_grid.points()) {
        const WidthReport r = width_report(eta, cfg.m1, cfg.m2);
        t.add_row({eta, r.s_e, r.c_e, r.s_i, r.c_i, r.r_e, r.r_i, to_string(r.regime)});
    }
    emit(m, cfg, "entanglement", t);
    return kExitOk;
}

int run_evolve(const RunConfig& cfg, Manifest& m) {
    if (!cfg.params) throw UsageError("evolve: --config is required");
    const DerivedParams d = derive(*cfg.params);
    std::vector<double> grid =
        cfg.t_grid ? cfg.t_grid->points() : default_time_grid(d);
    const EvolutionTrace tr = evolve(*cfg.params, grid);
    Table t;
    t.columns = {"t", "dr_cm", "dr_rel", "eta", "r_e", "r_i"};
    for (std::size_t i = 0; i < tr.times.size(); ++i)
        t.add_row({tr.times[i], tr.dr_cm[i], tr.dr_rel[i], tr.eta[i], tr.r_e[i], tr.r_i[i]});
    emit(m, cfg, "evolve", t);
    return kExitOk;
}

int run_figure(const RunConfig& cfg, Manifest& m) {
    if (cfg.figure_id.empty()) throw UsageError("figure: --id is required");
    json columns_doc;
    if (cfg.figure_id == "fig7") {
        // Sharp-edge zone map for a mildly spread packet; dots illustrate an
        // inside, an edge and an outside detector placement.
        SystemParams p;
        p.m1 = 1.0;
        p.m2 = 10.0;
        p.omega = 1.5;
        p.e0 = -0.5;
        p.gamma = 0.1;
        const DerivedParams d0 = derive(p);
        p.dr_cm0 = 0.2 * d0.dr_rel0;
        const double t = 5.0 / p.gamma;
        const DerivedParams d = derive(p);
        const double rt = d.v * t;
        // a dot inside the high-probability rim, one straddling the sharp
        // edge, and one at the equatorial node
        const std::vector<std::array<double, 2>> dots = {
            {0.0, rt - 0.75 * d.dr_rel0}, {0.0, rt}, {0.6 * rt, 0.0}};
        const ZoneMap zm = newmoon_zones(t, p, cfg.zone_level, dots);

        Table tc;
        tc.columns = {"x", "z"};
        for (const auto& pt : zm.contour) tc.add_row({pt[0], pt[1]});
        emit(m, cfg, "fig7_contour", tc);

        Table td;
        td.columns = {"x", "z", "radius", "overlap"};
        for (const auto& dot : zm.dots)
            td.add_row({dot.center[0], dot.center[1], dot.radius, to_string(dot.overlap)});
        emit(m, cfg, "fig7_dots", td);

        m.j["figure"] = {{"id", "fig7"},
                         {"level", format_double(zm.level)},
                         {"edge_radius", format_double(zm.edge_radius)},
                         {"max_density", format_double(zm.max_density)},
                         {"params", params_json(p)}};
        columns_doc["fig7_contour"] = {"x", "z"};
        columns_doc["fig7_dots"] = {"x", "z", "radius", "overlap"};
    } else {
        FigureId id;
        try {
            id = figure_from_string(cfg.figure_id);
        } catch (const std::invalid_argument& e) {
            throw UsageError(e.what());
        }
        const FigureData data = fig_profiles(id);
        for (const auto& [name, table] : data.series) {
            emit(m, cfg, cfg.figure_id + "_" + name, table);
            columns_doc[cfg.figure_id + "_" + name] = table.columns;
        }
    }
    m.j["figure_columns"] = columns_doc;
    return kExitOk;
}

struct OracleCase {
    std::string id;
    double closed_form;
    double oracle;
    double deviation;  // relative
    double tolerance;
    bool pass;
};

// Internal parameter set in the deep pole regime (E*/gamma = 1e4).
SystemParams oracle_params() {
    SystemParams p;
    p.m1 = 1.0;
    p.m2 = 1836.0;
    p.omega = 1.5;
    p.e0 = -0.5;
    p.gamma = 1e-4;
    p.dr_cm0 = 1.0;
    return p;
}

// Steepest admissible pole-regime ratio E*/gamma for a given zeta: the
// physical domain edge rho = -zeta E*/gamma must stay inside the faddeeva
// kernel envelope (|rho|/sqrt(2 zeta) <= 1e4, with margin).
double norm_pole_ratio(double zeta) {
    return std::min(1e4, 8000.0 / std::sqrt(zeta / 2.0));
}

// Normalization of the dimensional dispersive density over the physical
// domain (r > 0), evaluated as (1/4) integral of S over rho. The result
// falls short of 1 by the below-threshold Lorentzian tail, about
// (1/2pi) gamma/E*, which is what the 1e-4 allowance is for.
double profile_norm(double zeta, const SystemParams& p) {
    const DerivedParams d = derive(p);
    const double rho_min = -zeta * d.e_star / p.gamma;  // rho at r = 0
    auto f = [&](double rho) { return rel_profile(rho, zeta); };
    const double lo = std::max(rho_min, -(40.0 * zeta + 40.0));
    const double hi = 10.0 + 5.0 * zeta;
    auto core = integrate_segmented<double>(
        f, {lo, std::min(-2.0 * zeta, -1.0), 0.0, hi}, 1e-10, 1e-10);
    double total = core.value;
    if (lo > rho_min) {
        // smooth algebraic tail; halve the distance to the integration core
        std::vector<double> cuts = {rho_min};
        for (double x = 0.5 * rho_min; x < lo; x *= 0.5) cuts.push_back(x);
        cuts.push_back(lo);
        auto far_left = integrate_segmented<double>(f, cuts, 1e-10, 1e-10);
        total += far_left.value;
    }
    auto tail = integrate_to_infinity<double>(f, hi, 1e-10, 1e-10);
    total += tail.value;
    return total / 4.0;
}

std::vector<OracleCase> oracle_suite(const std::string& suite, double tol_scale) {
    std::vector<OracleCase> cases;
    const bool fast = suite == "fast";
    const SystemParams p = oracle_params();

    auto add = [&](const std::string& id, double cf, double orc, double dev, double tol) {
        cases.push_back({id, cf, orc, dev, tol, dev <= tol * tol_scale});
    };

    // closed-form profile vs direct quadrature of the energy integral
    const std::vector<double> zetas = fast ? std::vector<double>{0.3, 5.0}
                                           : std::vector<double>{0.01, 0.3, 1.0, 5.0, 20.0};
    std::vector<double> rho;
    for (double r = -10.0; r <= 3.0 + 1e-9; r += 0.25) rho.push_back(r);
    for (double zeta : zetas) {
        const std::vector<double> oracle = quad_rel_packet(rho, zeta, p);
        double peak = 0.0;
        for (double v : oracle) peak = std::max(peak, v);
        double worst = 0.0;
        std::size_t at = 0;
        for (std::size_t i = 0; i < rho.size(); ++i) {
            const double dev = std::fabs(rel_profile(rho[i], zeta) - oracle[i]) / peak;
            if (dev > worst) {
                worst = dev;
                at = i;
            }
        }
        add("profile_quad_zeta_" + num_token(zeta), rel_profile(rho[at], zeta), oracle[at],
            worst, 1e-5);
    }

    // linear k(E) truncation reproduces the sharp-edge shape
    {
        std::vector<double> rneg;
        for (double r = -6.0; r <= -0.5 + 1e-9; r += 0.25) rneg.push_back(r);
        const std::vector<double> oracle = quad_rel_packet(rneg, 1.0, p, false);
        double worst = 0.0;
        std::size_t at = 0;
        for (std::size_t i = 0; i < rneg.size(); ++i) {
            const double sharp = 4.0 * std::exp(rneg[i]);
            const double dev = std::fabs(sharp - oracle[i]) / sharp;
            if (dev > worst) {
                worst = dev;
                at = i;
            }
        }
        add("sharp_edge_linear_k", 4.0 * std::exp(rneg[at]), oracle[at], worst, 1e-8);
    }

    // Gaussian-model grid moments vs closed-form widths
    for (double eta : fast ? std::vector<double>{1.0} : std::vector<double>{1e-2, 1.0, 1e2}) {
        for (double ratio : {0.1, 1.0}) {
            const double m1 = 1.0, m2 = 1.0 / ratio;
            const int res = recommended_resolution(GridModel::GaussianGaussian, eta, m1, m2);
            const JointDensityGrid g =
                build_grid(GridModel::GaussianGaussian, eta, m1, m2, 0.0, res);
            const GridWidths gw = grid_widths(g, 0.0, 0.0);
            const WidthReport r = width_report(eta, m1, m2);
            double worst = 0.0;
            double cf = r.s_e, orc = gw.s_e;
            auto upd = [&](double formula, double grid) {
                const double dev = std::fabs(grid - formula) / formula;
                if (dev > worst) {
                    worst = dev;
                    cf = formula;
                    orc = grid;
                }
            };
            upd(r.s_e, gw.s_e);
            upd(r.s_i, gw.s_i);
            upd(r.c_e, gw.c_e);
            upd(r.c_i, gw.c_i);
            add("gauss_widths_eta_" + num_token(eta) + "_ratio_" + num_token(ratio), cf, orc,
                worst, 1e-4);
        }
    }

    // exponential-model width ratio stays near the Gaussian prediction at
    // extreme eta (slice on the shell, two decay lengths inside the edge)
    if (!fast) {
        for (double eta : {1e-2, 1e2}) {
            const double m1 = 1.0, m2 = 5.0, gamma_t = 4.0;
            const int res =
                recommended_resolution(GridModel::GaussianExponential, eta, m1, m2, gamma_t);
            const JointDensityGrid g =
                build_grid(GridModel::GaussianExponential, eta, m1, m2, gamma_t, res);
            const double xrel_slice = 2.0 * gamma_t - 2.0;
            const GridWidths w =
                grid_widths(g, -(m1 / (m1 + m2)) * xrel_slice, (m2 / (m1 + m2)) * xrel_slice);
            const double r_formula = entanglement_r(eta, m1, m2);
            add("exp_model_r_eta_" + num_token(eta), r_formula, w.s_e / w.c_e,
                std::fabs((w.s_e / w.c_e) / r_formula - 1.0), 0.15);
        }
    }

    // normalization of the dispersive density over the physical domain
    for (double zeta : fast ? std::vector<double>{1.0} : std::vector<double>{0.01, 1.0, 20.0}) {
        SystemParams pn = p;
        pn.gamma = (pn.e0 + pn.omega) / norm_pole_ratio(zeta);
        const double I = profile_norm(zeta, pn);
        add("profile_norm_zeta_" + num_token(zeta), 1.0, I, std::fabs(I - 1.0), 1e-4);
    }

    // amplitude unitarity at coupling^2 = gamma/pi
    {
        const double coupling = std::sqrt(p.gamma / M_PI);
        for (double tk : {0.0, 1.0, 10.0}) {
            const double t = tk / p.gamma;
            const double total = std::norm(ground_amplitude(t, p)) +
                                 (t == 0.0 ? 0.0 : continuum_norm(t, coupling, p));
            add("unitarity_t_" + num_token(tk) + "_over_gamma", 1.0, total,
                std::fabs(total - 1.0), 1e-3);
        }
    }
    return cases;
}

int run_oracle(const RunConfig& cfg, Manifest& m) {
    if (cfg.suite != "all" && cfg.suite != "fast")
        throw UsageError("oracle: unknown suite '" + cfg.suite + "'");
    const std::vector<OracleCase> cases = oracle_suite(cfg.suite, cfg.tolerance_scale);
    Table t;
    t.columns = {"case", "closed_form", "oracle", "relative_deviation", "tolerance", "status"};
    int failed = 0;
    json failures = json::array();
    for (const auto& c : cases) {
        t.add_row({c.id, c.closed_form, c.oracle, c.deviation, c.tolerance * cfg.tolerance_scale,
                   std::string(c.pass ? "pass" : "fail")});
        if (!c.pass) {
            ++failed;
            failures.push_back(c.id);
        }
    }
    emit(m, cfg, "oracle_report", t);
    m.j["oracle"] = {{"cases", cases.size()},
                     {"passed", cases.size() - failed},
                     {"failed", failed},
                     {"failing_cases", failures}};
    if (failed > 0) {
        m.j["status"] = "failed";
        return kExitNumeric;
    }
    return kExitOk;
}

void write_error(const std::filesystem::path& dir, const std::string& message, int code) {
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    std::ofstream out(dir / "error.json", std::ios::binary);
    if (out) {
        json j = {{"error", message}, {"exit_code", code}};
        out << j.dump(2) << '\n';
    }
}

}  // namespace

int run(const RunConfig& cfg) {
    try {
        std::filesystem::create_directories(cfg.out_dir);
        Manifest m(cfg);
        int rc;
        if (cfg.command == "widths")
            rc = run_widths(cfg, m);
        else if (cfg.command == "profile")
            rc = run_profile(cfg, m);
        else if (cfg.command == "entanglement")
            rc = run_entanglement(cfg, m);
        else if (cfg.command == "evolve")
            rc = run_evolve(cfg, m);
        else if (cfg.command == "oracle")
            rc = run_oracle(cfg, m);
        else if (cfg.command == "figure")
            rc = run_figure(cfg, m);
        else {
            write_error(cfg.out_dir, "unknown command: " + cfg.command, kExitConfig);
            return kExitConfig;
        }
        m.write(cfg.out_dir);
        if (rc != kExitOk)
            write_error(cfg.out_dir, "oracle suite reported failing cases", rc);
        return rc;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        write_error(cfg.out_dir, e.what(), kExitConfig);
        return kExitConfig;
    } catch (const std::exception& e) {
        // numeric and validation failures (range violations, oracle errors)
        std::cerr << "error: " << e.what() << '\n';
        write_error(cfg.out_dir, e.what(), kExitNumeric);
        return kExitNumeric;
    }
}

}  // namespace breakup
