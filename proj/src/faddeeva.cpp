#include "breakup/faddeeva.hpp"

#include <cmath>
#include <stdexcept>

namespace breakup {

// Two-region rational/continued-fraction evaluation (Poppe & Wijers style):
// a 36-step downward recurrence feeding a Taylor re-summation near the
// origin, a 9-step Laplace continued fraction elsewhere. Both are computed
// in the first quadrant; the other quadrants follow from
// w(-conj z) = conj w(z) and w(-z) = 2 exp(-z^2) - w(z).
std::complex<double> faddeeva(std::complex<double> z) {
    const double x = z.real();
    const double y = z.imag();
    const double xa = std::fabs(x);
    const double ya = std::fabs(y);
    if (xa > 1e4 || ya > 1e4)
        throw std::domain_error("faddeeva: argument outside |Re z|,|Im z| <= 1e4");

    constexpr double two_over_sqrt_pi = 1.1283791670955126;
    std::complex<double> v;

    if (ya < 7.4 && xa < 8.3) {
        // zh = i*conj(z) shifted off the real axis; recurrence depth 36.
        const std::complex<double> zh(ya + 1.6, xa);
        std::complex<double> r[38];
        r[37] = 0.0;
        for (int n = 36; n >= 1; --n) {
            const std::complex<double> t = zh + double(n) * std::conj(r[n + 1]);
            r[n] = 0.5 * t / std::norm(t);
        }
        double xl = std::pow(3.2, 33);
        std::complex<double> s = 0.0;
        for (int n = 33; n >= 1; --n) {
            xl *= 0.3125;
            s = r[n] * (s + xl);
        }
        v = two_over_sqrt_pi * s;
    } else {
        const std::complex<double> zh(ya, xa);
        std::complex<double> r1 = 0.0;
        for (int n = 9; n >= 1; --n) {
            const std::complex<double> t = zh + double(n) * std::conj(r1);
            r1 = 0.5 * t / std::norm(t);
        }
        v = two_over_sqrt_pi * r1;
    }

    if (ya == 0.0) v = std::complex<double>(std::exp(-xa * xa), v.imag());

    if (y < 0.0) {
        const std::complex<double> za(xa, ya);
        v = 2.0 * std::exp(-za * za) - v;
        if (x > 0.0) v = std::conj(v);
    } else {
        if (x < 0.0) v = std::conj(v);
    }
    return v;
}

std::complex<double> erfc_complex(std::complex<double> z) {
    const std::complex<double> i(0.0, 1.0);
    return std::exp(-z * z) * faddeeva(i * z);
}

}  // namespace breakup
