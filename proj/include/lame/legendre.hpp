#pragma once

#include <complex>

namespace lame {

// The k = 1 limit of the Lame equation,
//   w'' + (h - nu(nu+1) tanh^2 t) w = 0,
// solved by hypergeometric functions. w1, w2 are the solutions with
// w1(0) = w2'(0) = 1, w1'(0) = w2(0) = 0; their large-t behaviour is the
// sinusoid z_j(t) = Re(A_j e^{i omega t}).
//
// Derivatives are formed analytically through the contiguous relation
// F'(a,b;c;x) = (ab/c) F(a+1,b+1;c+1;x), not by differencing.
//
// All of these require h > nu(nu+1); series evaluation is reliable for
// t <= 6 (beyond that the hypergeometric argument tanh^2 t is too close
// to 1 and SeriesDivergence propagates).

double w1(double t, double h, double nu);
double w2(double t, double h, double nu);
double w1_prime(double t, double h, double nu);
double w2_prime(double t, double h, double nu);

struct ConnectionConstants {
    std::complex<double> A1;
    std::complex<double> A2;
    double omega;
};

/// Gamma-ratio constants A1, A2 connecting w_j to the oscillatory limit.
/// Satisfies omega * A1 * conj(A2) = -sin(nu pi)/sinh(omega pi) + i and
/// i omega A1 A2 = B.
ConnectionConstants connection_constants(double h, double nu);

/// z_j(t) = Re(A_j e^{i omega t}), j in {1, 2}.
double z_osc(double t, const ConnectionConstants& c, int j);
double z_osc_prime(double t, const ConnectionConstants& c, int j);

enum class Theorem2Target { w1, w2_prime };

/// Decay envelope of |w1 - z1| (resp. |w2' - z2'|):
///   omega^-1 C1 |nu|(nu+1) (1 - tanh t)   resp.
///   C2 |nu|(nu+1) (1 - tanh t),
/// with C1, C2 formed at k = 1. Requires h > 0, h > nu(nu+1), t >= 0.
double theorem2_bound(double t, double h, double nu, Theorem2Target which);

} // namespace lame
