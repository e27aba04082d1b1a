#ifndef BREAKUP_CLI_HPP_
#define BREAKUP_CLI_HPP_

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "breakup/params.hpp"

namespace breakup {

inline constexpr const char* kVersion = "0.1.0";

// Exit codes: 0 ok, 2 config error, 3 numeric/validation failure.
inline constexpr int kExitOk = 0;
inline constexpr int kExitConfig = 2;
inline constexpr int kExitNumeric = 3;

/// Bad flags/config: maps to exit code 2. Everything else thrown from the
/// compute layer (range violations, non-convergent quadrature, failing
/// oracle cases) maps to exit code 3.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Grid request parsed from "lin:lo:hi:n" / "log:lo:hi:n".
struct GridSpec {
    bool logarithmic = true;
    double lo = 1e-3;
    double hi = 1e3;
    int n = 301;
    std::vector<double> points() const;
};

GridSpec parse_grid_spec(const std::string& s);

/// One fully parsed invocation; run() performs it and writes the artifact
/// files plus a run manifest under out_dir.
struct RunConfig {
    std::string command;  // widths|profile|entanglement|evolve|oracle|figure
    std::optional<SystemParams> params;
    std::filesystem::path out_dir = ".";
    std::string format = "csv";  // csv|json

    std::vector<double> times;               // widths
    std::vector<double> zetas;               // profile
    GridSpec rho_grid{false, -10.0, 3.0, 261};
    double m1 = 1.0, m2 = 10.0;              // entanglement
    GridSpec eta_grid{true, 1e-3, 1e3, 301};
    std::optional<GridSpec> t_grid;          // evolve (absolute atomic units)
    std::string suite = "all";               // oracle: all|fast
    double tolerance_scale = 1.0;            // oracle threshold override
    std::string figure_id;                   // figure
    double zone_level = 1.0 / 3.0;           // fig7
};

int run(const RunConfig& cfg);

}  // namespace breakup

#endif
