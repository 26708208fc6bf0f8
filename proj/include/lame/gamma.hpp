#pragma once

#include <complex>

namespace lame {

/// Gamma function of a complex argument. Lanczos approximation with
/// g = 607/128 and 15 coefficients for Re z >= 1/2, reflection formula
/// otherwise. Relative error below 1e-12 for |Im z| <= 50.
///
/// Throws PoleAtNonpositiveInteger at z = 0, -1, -2, ...
std::complex<double> complex_gamma(std::complex<double> z);

} // namespace lame
