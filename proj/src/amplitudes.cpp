#include "breakup/amplitudes.hpp"

#include <cmath>
#include <stdexcept>

#include "breakup/quadrature.hpp"

namespace breakup {

std::complex<double> ground_amplitude(double t, const SystemParams& p) {
    if (t < 0.0) throw std::invalid_argument("ground_amplitude: t must be >= 0");
    return std::exp(std::complex<double>(-p.gamma * t, -p.e0 * t));
}

AmplitudeState amplitude_state(double t, double coupling, const SystemParams& p) {
    AmplitudeState st;
    st.t = t;
    st.c0 = ground_amplitude(t, p);
    st.ce = [t, coupling, p](double energy) {
        return continuum_amplitude(energy, t, coupling, p);
    };
    return st;
}

std::complex<double> continuum_amplitude(double energy, double t, double coupling,
                                         const SystemParams& p) {
    if (t < 0.0) throw std::invalid_argument("continuum_amplitude: t must be >= 0");
    const double e_star = p.e0 + p.omega;
    const std::complex<double> denom(energy - e_star, p.gamma);
    const std::complex<double> decayed =
        std::exp(std::complex<double>(-p.gamma * t, -p.e0 * t));
    const std::complex<double> driven =
        std::exp(std::complex<double>(0.0, -(energy - p.omega) * t));
    return coupling / denom * (decayed - driven);
}

double continuum_norm(double t, double coupling, const SystemParams& p) {
    if (t < 0.0) throw std::invalid_argument("continuum_norm: t must be >= 0");
    if (t == 0.0) return 0.0;
    const double e_star = p.e0 + p.omega;
    auto f = [&](double e) {
        return std::norm(continuum_amplitude(e, t, coupling, p));
    };

    // Resonance window wide enough for both the Lorentzian core and the
    // finite-time sinc structure; the Lorentzian tails decay only like
    // 1/E^2, so the rest of [0, inf) is covered by an algebraic map.
    const double width = 50.0 * std::max(p.gamma, 1.0 / t);
    const double lo = std::max(0.0, e_star - width);
    const double hi = e_star + width;
    const double scale = coupling * coupling / p.gamma;  // ~ peak * gamma
    const double abs_tol = 1e-11 * std::max(scale, 1e-30);

    std::vector<double> cut = {lo, e_star - p.gamma, e_star, e_star + p.gamma, hi};
    std::sort(cut.begin(), cut.end());
    cut.erase(std::unique(cut.begin(), cut.end()), cut.end());
    cut.erase(std::remove_if(cut.begin(), cut.end(), [&](double x) { return x < lo; }),
              cut.end());
    auto core = integrate_segmented<double>(f, cut, abs_tol, 1e-11);

    double total = core.value;
    double err = core.error;
    if (lo > 0.0) {
        auto below = integrate<double>(f, 0.0, lo, abs_tol, 1e-11);
        total += below.value;
        err += below.error;
    }
    // The finite-time cosine ripple compresses toward the far end of the
    // algebraic map and cannot be resolved panel by panel; its 1/E^2
    // envelope self-cancels, so cap the refinement and keep the honest
    // error estimate instead.
    auto tail = integrate_to_infinity<double>(f, hi, abs_tol, 1e-11, 4000);
    total += tail.value;
    err += tail.error;
    if (err > 1e-4 * std::max(total, scale))
        throw std::runtime_error("continuum_norm: quadrature error above 1e-4");
    return total;
}

namespace {

// log Gamma(z) for Re z > 0 (Lanczos, g = 7, 9 terms).
std::complex<double> log_gamma(std::complex<double> z) {
    static const double c[9] = {0.99999999999980993,   676.5203681218851,
                                -1259.1392167224028,   771.32342877765313,
                                -176.61502916214059,   12.507343278686905,
                                -0.13857109526572012,  9.9843695780195716e-6,
                                1.5056327351493116e-7};
    std::complex<double> a = c[0];
    for (int k = 1; k < 9; ++k) a += c[k] / (z - 1.0 + double(k));
    const std::complex<double> t = z + 6.5;
    return 0.5 * std::log(2.0 * M_PI) + (z - 0.5) * std::log(t) - t + std::log(a);
}

}  // namespace

double radial_high_energy(double r, double energy, double reduced_mass,
                          bool include_coulomb_phase) {
    if (!(r > 0.0)) throw std::invalid_argument("radial_high_energy: r must be positive");
    if (!(energy > 0.0))
        throw std::invalid_argument("radial_high_energy: energy must be positive");
    const double k = std::sqrt(2.0 * reduced_mass * energy);
    double arg = k * r;
    if (include_coulomb_phase) {
        const double inv_ka0 = reduced_mass / k;  // 1/(k a0), a0 = 1/mu
        arg += inv_ka0 * std::log(2.0 * k * r);
        // Coulomb phase for l = 1 in the attractive field:
        // delta_1 = arg Gamma(2 - i/(k a0)).
        arg += log_gamma(std::complex<double>(2.0, -inv_ka0)).imag();
    }
    return std::sqrt(2.0 * reduced_mass / (M_PI * k)) * std::cos(arg) / r;
}

}  // namespace breakup
