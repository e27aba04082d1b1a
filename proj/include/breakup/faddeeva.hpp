#ifndef BREAKUP_FADDEEVA_HPP_
#define BREAKUP_FADDEEVA_HPP_

#include <complex>

namespace breakup {

/// Faddeeva function w(z) = exp(-z^2) erfc(-iz).
///
/// Valid for |Re z| <= 1e4 and |Im z| <= 1e4 (rejected with std::domain_error
/// outside that box); relative accuracy ~1e-13 inside it. In the lower
/// half-plane w grows like 2 exp(-z^2) and may overflow to inf where the true
/// value exceeds the double range.
std::complex<double> faddeeva(std::complex<double> z);

/// erfc(z) for complex argument, via w: erfc(z) = exp(-z^2) w(iz).
std::complex<double> erfc_complex(std::complex<double> z);

}  // namespace breakup

#endif
