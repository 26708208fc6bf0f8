#include "lame/bounds.hpp"

#include <cmath>

#include "lame/elliptic.hpp"
#include "lame/errors.hpp"

namespace lame {

namespace {

BoundConstants make_constants(double h, double nu, double ksq) {
    if (nu < -0.5) nu = -1.0 - nu;
    if (!(h > 0.0) || !(h - nu * (nu + 1.0) * ksq > 0.0))
        throw PreconditionViolated(
            "bound_constants: requires h > 0 and h > nu(nu+1) k^2");
    const double H = std::sqrt(h - nu * (nu + 1.0) * ksq);
    const double sqrt_h = std::sqrt(h);
    if (nu >= 0.0)
        return {H, sqrt_h / H, sqrt_h, 1.0 / H, 1.0};
    return {H, 1.0, H, 1.0 / sqrt_h, H / sqrt_h};
}

} // namespace

BoundConstants bound_constants(double h, double nu) {
    return make_constants(h, nu, 1.0);
}

BoundConstants bound_constants(double h, double nu, const Modulus& m) {
    return make_constants(h, nu, m.ksq());
}

double theorem1_bound(double h, double nu, const Modulus& m, Theorem1Target which) {
    if (nu < -0.5) nu = -1.0 - nu;
    if (!(h > 0.0) || !(h > nu * (nu + 1.0)))
        throw PreconditionViolated("theorem1_bound: requires h > 0 and h > nu(nu+1)");
    const BoundConstants c = bound_constants(h, nu); // k = 1
    const double K = ellip_K(m);
    const double E = ellip_E(m);
    // E - tanh K = (E - 1) + (1 - tanh K), both addends nonnegative
    const double factor = (E - 1.0) + 2.0 / (std::exp(2.0 * K) + 1.0);
    const double common = std::abs(nu) * (nu + 1.0) * factor;
    return which == Theorem1Target::y1 ? c.C1 * c.C2 * common : c.C2 * c.C2p * common;
}

SolutionEnvelope lemma2_envelope(double q_min, double q_max, Monotonicity dir) {
    if (!(q_min > 0.0) || !(q_min <= q_max))
        throw PreconditionViolated("lemma2_envelope: requires 0 < q_min <= q_max");
    const double sqrt_M = std::sqrt(q_max);
    const double inv_sqrt_m = 1.0 / std::sqrt(q_min);
    const double ratio = std::sqrt(q_max / q_min);
    if (dir == Monotonicity::nondecreasing)
        return {1.0, sqrt_M, inv_sqrt_m, ratio};
    return {ratio, sqrt_M, inv_sqrt_m, 1.0};
}

} // namespace lame
