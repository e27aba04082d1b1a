#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "breakup/cli.hpp"

int main(int argc, char** argv) {
    CLI::App app{"two-body breakup wave-packet widths and entanglement"};
    app.set_version_flag("--version", breakup::kVersion);
    app.require_subcommand(1);
    app.fallthrough();  // global flags may follow the subcommand name

    breakup::RunConfig cfg;
    std::string config_path;
    std::string rho_spec, eta_spec, t_spec;
    double mass_ratio = 0.0;

    app.add_option("--config", config_path, "flat key-value parameter file (atomic units)");
    app.add_option("--out", cfg.out_dir, "output directory (default: current)");
    app.add_option("--format", cfg.format, "output format: csv|json")
        ->check(CLI::IsMember({"csv", "json"}));

    auto* widths = app.add_subcommand("widths", "packet widths and eta at given times");
    widths->add_option("--times", cfg.times, "times (atomic units)")->delimiter(',');

    auto* profile = app.add_subcommand("profile", "relative-motion density profile S(rho, zeta)");
    profile->add_option("--zeta", cfg.zetas, "zeta values (time over spreading time)")
        ->delimiter(',');
    profile->add_option("--rho-grid", rho_spec,
                        "rho grid, lin|log:lo:hi:n (default lin:-10:3:261)");

    auto* ent = app.add_subcommand("entanglement", "widths and R over an eta grid");
    ent->add_option("--mass-ratio", mass_ratio, "m1/m2 (overrides --m1/--m2)");
    ent->add_option("--m1", cfg.m1, "first mass (default 1)");
    ent->add_option("--m2", cfg.m2, "second mass (default 10)");
    ent->add_option("--eta-grid", eta_spec,
                    "eta grid, lin|log:lo:hi:n (default log:1e-3:1e3:301)");

    auto* evolve = app.add_subcommand("evolve", "time evolution of widths, eta and R");
    evolve->add_option("--t-grid", t_spec,
                       "time grid, lin|log:lo:hi:n (default log around the spreading times)");

    auto* oracle = app.add_subcommand("oracle", "brute-force verification suite");
    oracle->add_option("--suite", cfg.suite, "all|fast (default all)");
    oracle->add_option("--tolerance-scale", cfg.tolerance_scale,
                       "multiply every case tolerance (testing aid)");

    auto* figure = app.add_subcommand("figure", "figure datasets (fig1a..fig8)");
    figure->add_option("--id", cfg.figure_id,
                       "fig1a|fig1b|fig2|fig3|fig4|fig5|fig6|fig7|fig8");
    figure->add_option("--level", cfg.zone_level, "iso-density level for fig7 (default 1/3)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help / --version
        app.exit(e);
        return breakup::kExitConfig;
    }

    try {
        cfg.command = app.get_subcommands().front()->get_name();
        if (!config_path.empty()) cfg.params = breakup::load_params(config_path);
        if (!rho_spec.empty()) cfg.rho_grid = breakup::parse_grid_spec(rho_spec);
        if (!eta_spec.empty()) cfg.eta_grid = breakup::parse_grid_spec(eta_spec);
        if (!t_spec.empty()) cfg.t_grid = breakup::parse_grid_spec(t_spec);
        if (mass_ratio != 0.0) {
            if (!(mass_ratio > 0.0)) throw std::runtime_error("--mass-ratio must be positive");
            cfg.m1 = 1.0;
            cfg.m2 = 1.0 / mass_ratio;
        }
        // validate grid specs eagerly so bad ranges are config errors
        (void)cfg.rho_grid.points();
        (void)cfg.eta_grid.points();
        if (cfg.t_grid) (void)cfg.t_grid->points();
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return breakup::kExitConfig;
    }

    return breakup::run(cfg);
}
