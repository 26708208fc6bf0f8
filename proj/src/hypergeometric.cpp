#include "lame/hypergeometric.hpp"

#include <cmath>

#include "lame/errors.hpp"

namespace lame {

namespace {

constexpr long kMaxTerms = 5000000;
constexpr double kSeriesTol = 1e-13;

bool nonpositive_integer(std::complex<double> z) {
    return z.imag() == 0.0 && z.real() <= 0.0 && z.real() == std::floor(z.real());
}

} // namespace

std::complex<double> gauss_2f1(std::complex<double> a, std::complex<double> b,
                               std::complex<double> c, double x) {
    if (!(x >= 0.0 && x < 1.0))
        throw PreconditionViolated("gauss_2f1 requires 0 <= x < 1");
    if (nonpositive_integer(c))
        throw PreconditionViolated("gauss_2f1: c is a nonpositive integer");

    std::complex<double> term = 1.0;
    std::complex<double> sum = 1.0;
    // geometric tail majorant |t_n| x/(1-x); require it small twice in a row
    // so an early ratio dip (large parameters) cannot end the series.
    const double tail_factor = x / (1.0 - x);
    int calm = 0;
    for (long n = 0; n < kMaxTerms; ++n) {
        const double dn = static_cast<double>(n);
        term *= (a + dn) * (b + dn) / ((c + dn) * (dn + 1.0)) * x;
        sum += term;
        const double tol = kSeriesTol * std::max(1.0, std::abs(sum));
        if (std::abs(term) * (1.0 + tail_factor) <= tol) {
            if (++calm >= 2 && n >= 4)
                return sum;
        } else {
            calm = 0;
        }
    }
    throw SeriesDivergence("gauss_2f1: series cap reached; x too close to 1 for tolerance");
}

} // namespace lame
