#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "breakup/figures.hpp"
#include "breakup/wavepackets.hpp"
#include "test_util.hpp"

using namespace breakup;

namespace {

SystemParams zone_params() {
    SystemParams p;
    p.m1 = 1.0;
    p.m2 = 10.0;
    p.omega = 1.5;
    p.e0 = -0.5;
    p.gamma = 0.1;
    const DerivedParams d = derive(p);
    p.dr_cm0 = 0.2 * d.dr_rel0;
    return p;
}

double zone_density(double x, double z, double t, const DerivedParams& d) {
    const double r = std::hypot(x, z);
    if (r <= 0.0 || r > d.v * t) return 0.0;
    return rel_density_sharp(r, std::atan2(x, z), t, d);
}

}  // namespace

TEST_CASE("newmoon zones: contour sits on the level, inside the edge circle") {
    const SystemParams p = zone_params();
    const DerivedParams d = derive(p);
    const double t = 5.0 / p.gamma;
    const ZoneMap zm = newmoon_zones(t, p);

    CHECK(zm.level == doctest::Approx(1.0 / 3.0));
    CHECK(zm.edge_radius == doctest::Approx(d.v * t).epsilon(1e-12));
    CHECK(zm.max_density > 0.0);
    REQUIRE(zm.contour.size() > 100);

    const double target = zm.level * zm.max_density;
    for (const auto& pt : zm.contour) {
        const double dens = zone_density(pt[0], pt[1], t, d);
        CHECK(std::fabs(dens - target) <= 1e-3 * zm.max_density);
        CHECK(std::hypot(pt[0], pt[1]) <= zm.edge_radius * (1.0 + 1e-9));
    }
}

TEST_CASE("newmoon zones: empty at the equator, symmetric lobes") {
    const SystemParams p = zone_params();
    const DerivedParams d = derive(p);
    const double t = 5.0 / p.gamma;
    const ZoneMap zm = newmoon_zones(t, p);

    // equatorial plane carries essentially no density (cos^2 node)
    for (double x : {0.1, 0.4, 0.8}) {
        CHECK(zone_density(x * zm.edge_radius, 0.0, t, d) < 1e-30 * zm.max_density);
    }
    // reflection symmetry through the polarization axis and the equator:
    // every contour point has mirror partners on the contour
    auto has_near = [&](double x, double z) {
        const double tol = 2.5 * (2.04 * zm.edge_radius) / 511.0;
        for (const auto& q : zm.contour)
            if (std::hypot(q[0] - x, q[1] - z) < tol) return true;
        return false;
    };
    for (std::size_t i = 0; i < zm.contour.size(); i += 37) {
        const auto& pt = zm.contour[i];
        CHECK(has_near(-pt[0], pt[1]));
        CHECK(has_near(pt[0], -pt[1]));
    }
}

TEST_CASE("newmoon zones: dot classification") {
    const SystemParams p = zone_params();
    const DerivedParams d = derive(p);
    const double t = 5.0 / p.gamma;
    const double rt = d.v * t;
    const std::vector<std::array<double, 2>> dots = {
        {0.0, rt - 0.75 * d.dr_rel0},  // inside the high-probability rim
        {0.0, rt},                     // straddles the sharp edge
        {0.6 * rt, 0.0},               // equatorial, outside everything
    };
    const ZoneMap zm = newmoon_zones(t, p, 1.0 / 3.0, dots);
    REQUIRE(zm.dots.size() == 3);
    CHECK(zm.dots[0].overlap == Overlap::Inside);
    CHECK(zm.dots[1].overlap == Overlap::Edge);
    CHECK(zm.dots[2].overlap == Overlap::Outside);
    // outside placement means vanishing joint density at the detector
    CHECK(zone_density(0.6 * rt, 0.0, t, d) < 1e-30 * zm.max_density);
    const double radius = zm.dots[0].radius;
    CHECK(radius == doctest::Approx(cm_width(t, CmPacket{p.dr_cm0, d.total_mass})));
}

TEST_CASE("newmoon zones: contour converges as the grid is refined") {
    const SystemParams p = zone_params();
    const double t = 5.0 / p.gamma;
    const ZoneMap coarse = newmoon_zones(t, p, 1.0 / 3.0, {}, 256);
    const ZoneMap fine = newmoon_zones(t, p, 1.0 / 3.0, {}, 512);
    const double cell = 2.0 * 1.02 * coarse.edge_radius / 255.0;
    for (std::size_t i = 0; i < coarse.contour.size(); i += 11) {
        double best = 1e300;
        for (const auto& q : fine.contour)
            best = std::min(best, std::hypot(coarse.contour[i][0] - q[0],
                                             coarse.contour[i][1] - q[1]));
        CHECK(best < cell);
    }
}

TEST_CASE("newmoon zones: level validation") {
    const SystemParams p = zone_params();
    CHECK_THROWS_AS(newmoon_zones(10.0, p, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(newmoon_zones(10.0, p, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(newmoon_zones(-1.0, p, 0.5), std::invalid_argument);
}

TEST_CASE("figure datasets: ids and columns") {
    CHECK(figure_from_string("fig1a") == FigureId::Fig1a);
    CHECK(figure_from_string("fig8") == FigureId::Fig8);
    CHECK_THROWS_AS(figure_from_string("fig9"), std::invalid_argument);

    const FigureData f1 = fig_profiles(FigureId::Fig1a);
    REQUIRE(f1.series.size() == 1);
    CHECK(f1.series[0].second.columns ==
          std::vector<std::string>{"rho", "zeta", "density"});
    const FigureData f3 = fig_profiles(FigureId::Fig3);
    REQUIRE(f3.series.size() == 2);
    CHECK(f3.series[0].first == "electron");
    CHECK(f3.series[1].first == "ion");
}

TEST_CASE("figure fig1a: nonnegative profile peaking just inside the edge") {
    const FigureData f1 = fig_profiles(FigureId::Fig1a);
    const Table& t = f1.series[0].second;
    double best_rho = 0.0, best = -1.0;
    for (const auto& row : t.rows) {
        const double rho = std::get<double>(row[0]);
        const double dens = std::get<double>(row[2]);
        CHECK(dens >= 0.0);
        if (dens > best) {
            best = dens;
            best_rho = rho;
        }
    }
    CHECK(best_rho < 0.0);
    CHECK(best_rho > -1.0);
}

TEST_CASE("figure fig4: minimum R = 1 at the stability point") {
    const FigureData f4 = fig_profiles(FigureId::Fig4);
    const Table& t = f4.series[0].second;
    double best_eta = 0.0, best = 1e300;
    for (const auto& row : t.rows) {
        const double eta = std::get<double>(row[0]);
        const double r = std::get<double>(row[2]);
        CHECK(r >= 1.0 - 1e-14);
        if (r < best) {
            best = r;
            best_eta = eta;
        }
    }
    CHECK(best == doctest::Approx(1.0).epsilon(1e-3));
    CHECK(std::fabs(std::log(best_eta / (std::sqrt(10.0) / 11.0))) < 0.05);
}

TEST_CASE("figure fig8: molecular curve large everywhere except eta = 1/2") {
    const FigureData f8 = fig_profiles(FigureId::Fig8);
    REQUIRE(f8.series.size() == 2);
    const Table& mol = f8.series[0].second;
    double rmin = 1e300, eta_min = 0.0;
    for (const auto& row : mol.rows) {
        const double eta = std::get<double>(row[0]);
        const double r = std::get<double>(row[2]);
        CHECK(r >= 1.0 - 1e-14);
        if (r < rmin) {
            rmin = r;
            eta_min = eta;
        }
        // away from the stability point the molecular curve is large
        if (std::fabs(std::log(eta / 0.5)) > std::log(10.0)) CHECK(r > 5.0);
    }
    CHECK(std::fabs(std::log(eta_min / 0.5)) < 0.1);
    CHECK(rmin == doctest::Approx(1.0).epsilon(1e-2));
}

TEST_CASE("figure fig5/fig6 traces: monotone control parameter") {
    const FigureData f5 = fig_profiles(FigureId::Fig5);
    const Table& t5 = f5.series[0].second;
    double prev = 0.0;
    bool first = true;
    for (const auto& row : t5.rows) {
        const double eta = std::get<double>(row[4]);
        if (!first) CHECK(eta >= prev - 1e-15);
        prev = eta;
        first = false;
    }
    const FigureData f6 = fig_profiles(FigureId::Fig6);
    const Table& t6 = f6.series[0].second;
    first = true;
    for (const auto& row : t6.rows) {
        const double eta = std::get<double>(row[4]);
        if (!first) CHECK(eta <= prev + 1e-15);
        prev = eta;
        first = false;
    }
}
