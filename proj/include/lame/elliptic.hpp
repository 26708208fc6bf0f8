#pragma once

#include "lame/modulus.hpp"

namespace lame {

/// Complete elliptic integral of the first kind K(k), computed by the AGM
/// iteration on (1, k'). Quadratic convergence; relative error below 1e-14
/// for k' >= 1e-8.
double ellip_K(const Modulus& m);

/// Complete elliptic integral of the second kind E(k), computed alongside
/// the same AGM via the companion sum E = K * (1 - sum_n 2^{n-1} c_n^2).
/// Relative error below 1e-13.
double ellip_E(const Modulus& m);

struct JacobiTriple {
    double sn;
    double cn;
    double dn;
};

/// Jacobi elliptic functions sn, cn, dn at (t, k) by Bulirsch's descending
/// Landen recursion. Absolute error below 1e-12 for |t| <= 4 K(k) away from
/// the extreme corner k' < 1e-3.
JacobiTriple jacobi_sn_cn_dn(double t, const Modulus& m);

} // namespace lame
