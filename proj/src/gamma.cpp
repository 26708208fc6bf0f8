#include "lame/gamma.hpp"

#include <cmath>
#include <numbers>

#include "lame/errors.hpp"

namespace lame {

namespace {

// Lanczos g = 607/128, 15 coefficients (Godfrey's set).
constexpr double kLanczosG = 607.0 / 128.0;
constexpr double kLanczos[15] = {
    0.99999999999999709182,
    57.156235665862923517,
    -59.597960355475491248,
    14.136097974741747174,
    -0.49191381609762019978,
    0.33994649984811888699e-4,
    0.46523628927048575665e-4,
    -0.98374475304879564677e-4,
    0.15808870322491248884e-3,
    -0.21026444172410488319e-3,
    0.21743961811521264320e-3,
    -0.16431810653676389022e-3,
    0.84418223983852743293e-4,
    -0.26190838401581408670e-4,
    0.36899182659531622704e-5,
};

std::complex<double> lanczos_half_plane(std::complex<double> z) {
    // valid for Re z >= 1/2
    std::complex<double> series = kLanczos[0];
    for (int i = 1; i < 15; ++i)
        series += kLanczos[i] / (z - 1.0 + static_cast<double>(i));
    const std::complex<double> t = z + (kLanczosG - 0.5);
    const double sqrt2pi = 2.50662827463100050242;
    return sqrt2pi * std::exp((z - 0.5) * std::log(t) - t) * series;
}

} // namespace

std::complex<double> complex_gamma(std::complex<double> z) {
    if (z.imag() == 0.0 && z.real() <= 0.0 && z.real() == std::floor(z.real()))
        throw PoleAtNonpositiveInteger("Gamma pole at nonpositive integer argument");

    if (z.real() >= 0.5)
        return lanczos_half_plane(z);

    // reflection: Gamma(z) = pi / (sin(pi z) Gamma(1 - z))
    const std::complex<double> s = std::sin(std::numbers::pi * z);
    return std::numbers::pi / (s * lanczos_half_plane(1.0 - z));
}

} // namespace lame
