#pragma once

#include "lame/modulus.hpp"

namespace lame {

/// The explicit solution-bound constants
///   H = sqrt(h - nu(nu+1) k^2)
/// and, split at the sign of nu,
///   nu >= 0:  C1 = sqrt(h)/H, C1' = sqrt(h), C2 = 1/H,       C2' = 1
///   nu <  0:  C1 = 1,         C1' = H,       C2 = 1/sqrt(h), C2' = H/sqrt(h).
/// They bound |y1|, |y1'|, |y2|, |y2'| for 0 <= s <= t <= K.
struct BoundConstants {
    double H;
    double C1;
    double C1p;
    double C2;
    double C2p;
};

/// Constants at k = 1 (the form entering the theorem-level bounds).
BoundConstants bound_constants(double h, double nu);

/// Constants at the modulus of m.
/// Requires h > 0 and h > nu(nu+1) k^2.
BoundConstants bound_constants(double h, double nu, const Modulus& m);

enum class Theorem1Target { y1, y2_prime };

/// Bound on the distance between the k-modulus solution and its k = 1
/// limit at t = K:
///   |y1(K;k)  - w1(K)|  <= C1 C2  |nu|(nu+1) (E(k) - tanh K(k)),
///   |y2'(K;k) - w2'(K)| <= C2 C2' |nu|(nu+1) (E(k) - tanh K(k)),
/// with the C formed at k = 1. Requires h > 0, h > nu(nu+1).
double theorem1_bound(double h, double nu, const Modulus& m, Theorem1Target which);

enum class Monotonicity { nondecreasing, nonincreasing };

/// Sup-norm envelopes of y1, y1', y2, y2' over an interval on which the
/// coefficient is monotone with range [q_min, q_max]:
///   nondecreasing: (1, sqrt(M), 1/sqrt(m), sqrt(M/m))
///   nonincreasing: (sqrt(M/m), sqrt(M), 1/sqrt(m), 1).
/// Requires 0 < q_min <= q_max.
struct SolutionEnvelope {
    double y1;
    double y1p;
    double y2;
    double y2p;
};

SolutionEnvelope lemma2_envelope(double q_min, double q_max, Monotonicity dir);

} // namespace lame
