#pragma once

#include <complex>

namespace lame {

/// Gauss hypergeometric function F(a, b; c; x) for real x in [0, 1),
/// evaluated by direct power series.
///
/// Termination: the series stops once the term-ratio tail estimate
/// |t_n| * x / (1 - x) (the geometric majorant of the remaining sum, valid
/// once the term ratios have settled near x) falls below 1e-13 on two
/// consecutive terms. Absolute error below 1e-11 for x <= 0.9999; a cap of
/// five million terms guards arguments too close to 1, raising
/// SeriesDivergence when hit.
std::complex<double> gauss_2f1(std::complex<double> a, std::complex<double> b,
                               std::complex<double> c, double x);

} // namespace lame
