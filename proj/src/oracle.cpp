#include "breakup/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <stdexcept>

#include "breakup/quadrature.hpp"

namespace breakup {

double JointDensityGrid::cell_area() const {
    return (xe[1] - xe[0]) * (xi[1] - xi[0]);
}

double JointDensityGrid::at(std::size_t ie, std::size_t ii) const {
    return density[ie * xi.size() + ii];
}

namespace {

std::vector<double> axis(double lo, double hi, int n) {
    // cell-centered nodes
    std::vector<double> x(n);
    const double h = (hi - lo) / n;
    for (int i = 0; i < n; ++i) x[i] = lo + (i + 0.5) * h;
    return x;
}

}  // namespace

JointDensityGrid build_grid(GridModel model, double eta, double m1, double m2,
                            double gamma_t, int resolution) {
    if (resolution < 64) throw std::invalid_argument("build_grid: resolution must be >= 64");
    if (!(eta > 0.0)) throw std::invalid_argument("build_grid: eta must be positive");
    if (!(m1 > 0.0) || !(m2 > 0.0))
        throw std::invalid_argument("build_grid: masses must be positive");
    if (model == GridModel::GaussianExponential && !(gamma_t > 0.0))
        throw std::invalid_argument("build_grid: gamma_t must be positive");

    const double M = m1 + m2;
    const double be = m1 / M;  // m_e/M
    const double bi = m2 / M;  // m_i/M
    const double scm = eta;    // sigma_cm in units of the rel width

    // Support intervals in (x_cm, x_rel); both capture > 1 - 1e-9 of mass.
    double rel_lo, rel_hi, edge = 0.0;
    if (model == GridModel::GaussianGaussian) {
        rel_lo = -8.0;
        rel_hi = 8.0;
    } else {
        edge = 2.0 * gamma_t;  // x_rel = v t in units of the decay length
        rel_lo = edge - 24.0;
        rel_hi = edge + 2.0;
    }
    const double cm_half = 8.0 * scm;

    // Map the (x_cm, x_rel) box to per-axis extents:
    //   x_e = x_cm + bi x_rel,  x_i = x_cm - be x_rel.
    const double xe_lo = -cm_half + bi * rel_lo;
    const double xe_hi = cm_half + bi * rel_hi;
    const double xi_lo = -cm_half - be * rel_hi;
    const double xi_hi = cm_half - be * rel_lo;

    JointDensityGrid g;
    g.model = model;
    g.xe = axis(xe_lo, xe_hi, resolution);
    g.xi = axis(xi_lo, xi_hi, resolution);
    g.density.resize(std::size_t(resolution) * resolution);

    double sum = 0.0;
    for (int ie = 0; ie < resolution; ++ie) {
        const double xe = g.xe[ie];
        for (int ii = 0; ii < resolution; ++ii) {
            const double xi = g.xi[ii];
            const double xcm = be * xe + bi * xi;
            const double xrel = xe - xi;
            double rho;
            if (model == GridModel::GaussianGaussian) {
                rho = std::exp(-0.5 * (xcm / scm) * (xcm / scm) - 0.5 * xrel * xrel);
            } else {
                rho = xrel <= edge
                          ? std::exp(-0.5 * (xcm / scm) * (xcm / scm) + (xrel - edge))
                          : 0.0;
            }
            g.density[std::size_t(ie) * resolution + ii] = rho;
            sum += rho;
        }
    }
    const double norm = 1.0 / (sum * g.cell_area());
    for (double& d : g.density) d *= norm;
    return g;
}

namespace {

struct Moments {
    double mean, rms;
};

Moments axis_moments(const std::vector<double>& x, const std::vector<double>& w) {
    double tot = 0.0, m1 = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        tot += w[i];
        m1 += w[i] * x[i];
    }
    m1 /= tot;
    double m2 = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double d = x[i] - m1;
        m2 += w[i] * d * d;
    }
    return {m1, std::sqrt(m2 / tot)};
}

std::size_t nearest_index(const std::vector<double>& x, double target) {
    std::size_t best = 0;
    double dist = std::fabs(x[0] - target);
    for (std::size_t i = 1; i < x.size(); ++i) {
        const double d = std::fabs(x[i] - target);
        if (d < dist) {
            dist = d;
            best = i;
        }
    }
    return best;
}

}  // namespace

GridWidths grid_widths(const JointDensityGrid& grid, std::optional<double> conditional_at_xi,
                       std::optional<double> conditional_at_xe) {
    const std::size_t ne = grid.xe.size();
    const std::size_t ni = grid.xi.size();
    if (ne < 64 || ni < 64) throw std::invalid_argument("grid_widths: grid too coarse");

    std::vector<double> pe(ne, 0.0), pi(ni, 0.0);
    for (std::size_t ie = 0; ie < ne; ++ie) {
        const double* row = grid.density.data() + ie * ni;
        double acc = 0.0;
        for (std::size_t ii = 0; ii < ni; ++ii) {
            acc += row[ii];
            pi[ii] += row[ii];
        }
        pe[ie] = acc;
    }

    GridWidths out;
    out.s_e = axis_moments(grid.xe, pe).rms;
    out.s_i = axis_moments(grid.xi, pi).rms;
    out.c_e = std::numeric_limits<double>::quiet_NaN();
    out.c_i = std::numeric_limits<double>::quiet_NaN();

    if (conditional_at_xi) {
        const std::size_t ii = nearest_index(grid.xi, *conditional_at_xi);
        std::vector<double> col(ne);
        for (std::size_t ie = 0; ie < ne; ++ie) col[ie] = grid.at(ie, ii);
        out.c_e = axis_moments(grid.xe, col).rms;
    }
    if (conditional_at_xe) {
        const std::size_t ie = nearest_index(grid.xe, *conditional_at_xe);
        std::vector<double> row(grid.density.begin() + ie * ni,
                                grid.density.begin() + (ie + 1) * ni);
        out.c_i = axis_moments(grid.xi, row).rms;
    }
    return out;
}

int recommended_resolution(GridModel model, double eta, double m1, double m2,
                           double gamma_t) {
    const double M = m1 + m2;
    const double be = m1 / M;
    const double bi = m2 / M;
    const double scm = eta;

    double rel_lo = -8.0, rel_hi = 8.0;
    if (model == GridModel::GaussianExponential) {
        const double edge = 2.0 * gamma_t;
        rel_lo = edge - 24.0;
        rel_hi = edge + 2.0;
    }
    const double span_e = 16.0 * scm + bi * (rel_hi - rel_lo);
    const double span_i = 16.0 * scm + be * (rel_hi - rel_lo);

    double feat_e, feat_i;
    if (model == GridModel::GaussianGaussian) {
        feat_e = 1.0 / std::sqrt(1.0 + be * be / (scm * scm));
        feat_i = 1.0 / std::sqrt(1.0 + bi * bi / (scm * scm));
    } else {
        feat_e = std::min(1.0, scm / be);
        feat_i = std::min(1.0, scm / bi);
    }
    const double n = std::max(0.85 * span_e / feat_e, 0.85 * span_i / feat_i);
    return int(std::clamp(std::ceil(n), 256.0, 14000.0));
}

namespace {

// The packet integral reduced to dimensionless form:
//   J(a, b) = int e^{i (a x - b x^2)} / (x + i) dx  over the real line,
// with a = gamma * (r/v - t) and b = gamma^2 * r / (2 mu v^3) evaluated at
// r = v t. The profile is |J|^2 / pi^2.
struct PacketIntegral {
    std::complex<double> value;
    double error;
};

PacketIntegral packet_integral(double a, double b) {
    using cd = std::complex<double>;
    const cd i(0.0, 1.0);
    auto f = [&](cd x) { return std::exp(i * (a * x - b * x * x)) / (x + i); };

    PacketIntegral out{0.0, 0.0};
    const double abs_tol = 1e-12;

    if (b > 0.0) {
        const double xs = a / (2.0 * b);  // stationary-phase point
        const double margin = std::max(20.0, 3.0 / std::sqrt(b));
        const double xl = std::min(xs, 0.0) - margin;
        const double xr = std::max(xs, 0.0) + margin;

        // Breakpoints with ~pi phase increments around the stationary point,
        // plus the pole-bump scale around the origin.
        std::vector<double> cuts = {xl, xr, xs, -1.0, 0.0, 1.0};
        for (int k = 1;; ++k) {
            const double step = std::sqrt(k * M_PI / b);
            bool any = false;
            if (xs + step < xr) {
                cuts.push_back(xs + step);
                any = true;
            }
            if (xs - step > xl) {
                cuts.push_back(xs - step);
                any = true;
            }
            if (!any) break;
        }
        std::sort(cuts.begin(), cuts.end());
        cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
        cuts.erase(std::remove_if(cuts.begin(), cuts.end(),
                                  [&](double x) { return x < xl || x > xr; }),
                   cuts.end());

        auto central = integrate_segmented<cd>([&](double x) { return f(cd(x, 0.0)); },
                                               cuts, abs_tol, 1e-13);
        out.value += central.value;
        out.error += central.error;

        // Rotated tails: the quadratic phase decays like exp(-b r^2) along
        // e^{-i pi/4} (right) and e^{i 3 pi/4} (left); neither ray sweeps the
        // pole at -i since xl < min(xs,0) and xr > max(xs,0).
        const cd dr = std::exp(-i * M_PI / 4.0);
        const cd dl = std::exp(i * 3.0 * M_PI / 4.0);
        auto right = integrate_to_infinity<cd>(
            [&](double r) { return f(cd(xr, 0.0) + dr * r) * dr; }, 0.0, abs_tol, 1e-13);
        auto left = integrate_to_infinity<cd>(
            [&](double r) { return f(cd(xl, 0.0) + dl * r) * dl; }, 0.0, abs_tol, 1e-13);
        out.value += right.value - left.value;
        out.error += right.error + left.error;
    } else {
        // Linear truncation of k(E): pure e^{iax}/(x+i), tails rotate
        // vertically toward the decaying half-plane.
        if (a == 0.0)
            throw std::invalid_argument("packet_integral: a = b = 0 is not integrable");
        const double xl = -30.0, xr = 30.0;
        auto central = integrate<cd>([&](double x) { return f(cd(x, 0.0)); }, xl, xr,
                                     abs_tol, 1e-13);
        const cd dir = a > 0.0 ? cd(0.0, 1.0) : cd(0.0, -1.0);
        auto right = integrate_to_infinity<cd>(
            [&](double r) { return f(cd(xr, 0.0) + dir * r) * dir; }, 0.0, abs_tol, 1e-13);
        auto left = integrate_to_infinity<cd>(
            [&](double r) { return f(cd(xl, 0.0) + dir * r) * dir; }, 0.0, abs_tol, 1e-13);
        out.value += central.value + right.value - left.value;
        out.error += central.error + right.error + left.error;
    }
    return out;
}

}  // namespace

std::vector<double> quad_rel_packet(const std::vector<double>& rho_grid, double zeta,
                                    const SystemParams& p, bool quadratic_dispersion) {
    if (!(zeta > 0.0)) throw std::invalid_argument("quad_rel_packet: zeta must be positive");
    if (rho_grid.empty()) return {};
    const DerivedParams d = derive(p);

    // Same approximation chain as the closed form: prefactors frozen at E*,
    // k(E) expanded about E* (to second order unless truncated), r set to
    // v t inside the dispersion coefficient.
    const double t = zeta * d.reduced_mass * d.dr_rel0 * d.dr_rel0;
    const double r = d.v * t;
    const double beta = quadratic_dispersion ? r / (2.0 * d.reduced_mass * d.v * d.v * d.v) : 0.0;
    const double b = beta * p.gamma * p.gamma;

    std::vector<double> values(rho_grid.size());
    std::vector<double> errors(rho_grid.size());
    for (std::size_t k = 0; k < rho_grid.size(); ++k) {
        const double tau = rho_grid[k] * d.dr_rel0 / d.v;
        const double a = p.gamma * tau;
        const PacketIntegral J = packet_integral(a, b);
        values[k] = std::norm(J.value) / (M_PI * M_PI);
        errors[k] = 2.0 * std::abs(J.value) * J.error / (M_PI * M_PI);
    }

    const double peak = *std::max_element(values.begin(), values.end());
    for (std::size_t k = 0; k < rho_grid.size(); ++k) {
        if (errors[k] > 1e-8 * std::max(peak, 1e-300))
            throw std::runtime_error(
                "quad_rel_packet: quadrature error above 1e-8 of the profile peak at rho = " +
                std::to_string(rho_grid[k]));
    }
    return values;
}

}  // namespace breakup
