#ifndef BREAKUP_QUADRATURE_HPP_
#define BREAKUP_QUADRATURE_HPP_

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <vector>

namespace breakup {

template <typename T>
struct QuadResult {
    T value{};
    double error = 0.0;     // accumulated error estimate
    bool converged = false;
    std::size_t evaluations = 0;
};

namespace detail {

// Gauss 7 / Kronrod 15 node-weight table on [-1, 1]: {abscissa, gauss w, kronrod w}
inline constexpr double kGk15[8][3] = {
    {0.000000000000000, 0.417959183673469, 0.209482141084728},
    {0.405845151377397, 0.381830050505119, 0.190350578064785},
    {0.741531185599394, 0.279705391489277, 0.140653259715525},
    {0.949107912342759, 0.129484966168870, 0.063092092629979},
    {0.207784955007898, 0.0,               0.204432940075298},
    {0.586087235467691, 0.0,               0.169004726639267},
    {0.864864423359769, 0.0,               0.104790010322250},
    {0.991455371120813, 0.0,               0.022935322010529},
};

template <typename F, typename T>
T gk15_panel(const F& f, double a, double b, double& err, std::size_t& evals) {
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    T y0 = f(mid);
    T g7 = kGk15[0][1] * y0;
    T k15 = kGk15[0][2] * y0;
    evals += 1;
    for (int i = 1; i < 8; ++i) {
        const double dx = half * kGk15[i][0];
        T yi = f(mid + dx);
        yi += f(mid - dx);
        evals += 2;
        g7 += kGk15[i][1] * yi;
        k15 += kGk15[i][2] * yi;
    }
    g7 *= half;
    k15 *= half;
    double d = std::abs(g7 - k15);
    err = 200.0 * d;
    err *= std::sqrt(err);  // QUADPACK-style (200|G-K|)^{3/2} estimate
    err = std::min(err, d * 200.0);
    return k15;
}

}  // namespace detail

/// Adaptive Gauss-Kronrod integration of f over [a, b] by interval bisection.
/// T may be double or std::complex<double>. Panels are processed in a fixed
/// order so the summation is deterministic.
template <typename T = double, typename F>
QuadResult<T> integrate(const F& f, double a, double b, double abs_tol = 1e-12,
                        double rel_tol = 1e-12, std::size_t max_panels = 200000) {
    struct Seg { double a, b, err; T val; };
    QuadResult<T> out;
    if (a == b) {
        out.converged = true;
        return out;
    }
    if (a > b) {
        out = integrate<T>(f, b, a, abs_tol, rel_tol, max_panels);
        out.value = -out.value;
        return out;
    }

    std::vector<Seg> work;
    double e0;
    T v0 = detail::gk15_panel<F, T>(f, a, b, e0, out.evaluations);
    work.push_back({a, b, e0, v0});

    std::vector<Seg> done;
    std::size_t panels = 1;
    while (!work.empty()) {
        Seg s = work.back();
        work.pop_back();
        const double budget =
            std::max(abs_tol, rel_tol * std::abs(s.val)) * (s.b - s.a) / (b - a);
        if (s.err <= std::max(budget, 1e-300) || panels >= max_panels ||
            (s.b - s.a) < 1e-14 * (std::fabs(s.a) + std::fabs(s.b) + 1.0)) {
            done.push_back(s);
            continue;
        }
        const double mid = 0.5 * (s.a + s.b);
        double e1, e2;
        T v1 = detail::gk15_panel<F, T>(f, s.a, mid, e1, out.evaluations);
        T v2 = detail::gk15_panel<F, T>(f, mid, s.b, e2, out.evaluations);
        panels += 1;
        work.push_back({mid, s.b, e2, v2});
        work.push_back({s.a, mid, e1, v1});
    }

    // Deterministic left-to-right summation.
    std::sort(done.begin(), done.end(), [](const Seg& l, const Seg& r) { return l.a < r.a; });
    T total{};
    double err = 0.0;
    for (const Seg& s : done) {
        total += s.val;
        err += s.err;
    }
    out.value = total;
    out.error = err;
    out.converged = panels < max_panels &&
                    err <= 2.0 * std::max(abs_tol, rel_tol * std::abs(total));
    return out;
}

/// Integrate f over [a, b] with user-supplied interior breakpoints.
template <typename T = double, typename F>
QuadResult<T> integrate_segmented(const F& f, const std::vector<double>& breakpoints,
                                  double abs_tol = 1e-12, double rel_tol = 1e-12,
                                  std::size_t max_panels = 200000) {
    QuadResult<T> out;
    out.converged = true;
    for (std::size_t i = 0; i + 1 < breakpoints.size(); ++i) {
        auto r = integrate<T>(f, breakpoints[i], breakpoints[i + 1], abs_tol, rel_tol,
                              max_panels);
        out.value += r.value;
        out.error += r.error;
        out.evaluations += r.evaluations;
        out.converged = out.converged && r.converged;
    }
    return out;
}

/// Integrate f over [a, +inf) via the algebraic map x = a + u/(1-u), u in [0,1).
template <typename T = double, typename F>
QuadResult<T> integrate_to_infinity(const F& f, double a, double abs_tol = 1e-12,
                                    double rel_tol = 1e-12,
                                    std::size_t max_panels = 200000) {
    auto g = [&](double u) -> T {
        const double om = 1.0 - u;
        const double x = a + u / om;
        return f(x) * (1.0 / (om * om));
    };
    return integrate<T>(g, 0.0, 1.0 - 1e-12, abs_tol, rel_tol, max_panels);
}

}  // namespace breakup

#endif
