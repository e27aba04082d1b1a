#ifndef BREAKUP_FIGURES_HPP_
#define BREAKUP_FIGURES_HPP_

#include <array>
#include <string>
#include <vector>

#include "breakup/params.hpp"
#include "breakup/tabular.hpp"

namespace breakup {

// Plot-ready datasets: profile curves, width/entanglement curves,
// evolution traces and the iso-density detector zones.

enum class Overlap { Inside, Edge, Outside };

struct ZoneDot {
    std::array<double, 2> center;  // (x, z), polarization axis vertical
    double radius;                 // cm-packet width at the chosen time
    Overlap overlap;
};

/// Level set |Psi_rel|^2 = level * max in a plane through the polarization
/// axis, with the ion at the origin.
struct ZoneMap {
    double level;
    double edge_radius;   // v t; no density beyond this circle
    double max_density;
    std::vector<std::array<double, 2>> contour;  // interpolated level-set points
    std::vector<ZoneDot> dots;
};

/// Extracts the iso-density contour (cell-edge interpolation on a
/// resolution^2 section grid) and classifies the supplied cm-packet dot
/// positions, each of radius dr_cm(t), as Inside/Edge/Outside the zone.
/// Requires 0 < level < 1.
ZoneMap newmoon_zones(double t, const SystemParams& p, double level = 1.0 / 3.0,
                      const std::vector<std::array<double, 2>>& dot_centers = {},
                      int resolution = 512);

enum class FigureId { Fig1a, Fig1b, Fig2, Fig3, Fig4, Fig5, Fig6, Fig8 };

FigureId figure_from_string(const std::string& s);

/// Named data series for one figure, using the captioned parameter values.
struct FigureData {
    std::vector<std::pair<std::string, Table>> series;  // (name, table)
};

FigureData fig_profiles(FigureId which);

std::string to_string(Overlap o);

}  // namespace breakup

#endif
