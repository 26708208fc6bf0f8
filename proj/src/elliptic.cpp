#include "lame/elliptic.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "lame/errors.hpp"

namespace lame {

namespace {

constexpr int kMaxIter = 64;
constexpr double kEps = std::numeric_limits<double>::epsilon();

} // namespace

double ellip_K(const Modulus& m) {
    double a = 1.0;
    double b = m.kprime();
    for (int i = 0; i < kMaxIter; ++i) {
        if (std::abs(a - b) <= 2.0 * kEps * a)
            return std::numbers::pi / (a + b);
        const double an = 0.5 * (a + b);
        b = std::sqrt(a * b);
        a = an;
    }
    throw NonConvergence("AGM for K(k) failed to contract (invalid modulus?)");
}

double ellip_E(const Modulus& m) {
    double a = 1.0;
    double b = m.kprime();
    double c = m.k();
    double sum = 0.5 * c * c; // 2^{-1} c_0^2
    double pow2 = 0.5;
    for (int i = 0; i < kMaxIter; ++i) {
        if (std::abs(a - b) <= 2.0 * kEps * a) {
            const double K = std::numbers::pi / (a + b);
            return K * (1.0 - sum);
        }
        c = 0.5 * (a - b);
        const double an = 0.5 * (a + b);
        b = std::sqrt(a * b);
        a = an;
        pow2 *= 2.0;
        sum += pow2 * c * c;
    }
    throw NonConvergence("AGM for E(k) failed to contract (invalid modulus?)");
}

JacobiTriple jacobi_sn_cn_dn(double t, const Modulus& m) {
    // Bulirsch's sncndn: descend on the complementary parameter, then
    // back-substitute. dn is carried through its own recursion, which stays
    // regular at t = K where the phase form cos(phi0)/cos(phi1 - phi0)
    // degenerates to 0/0.
    if (m.k() <= 4.0 * kEps) {
        // circular limit; error is O(k^2)
        return {std::sin(t), std::cos(t), 1.0};
    }

    constexpr double kLandenTol = 1.0e-8; // residual error ~ tol^2
    double emc = m.kprime_sq();
    double a = 1.0;
    double dn = 1.0;
    double em[kMaxIter];
    double en[kMaxIter];
    int l = 0;
    for (int i = 0; i < kMaxIter; ++i) {
        l = i;
        em[i] = a;
        emc = std::sqrt(emc);
        en[i] = emc;
        const double c = 0.5 * (a + emc);
        if (std::abs(a - emc) <= kLandenTol * a) {
            a = c;
            break;
        }
        if (i + 1 == kMaxIter)
            throw NonConvergence("Landen descent for sn,cn,dn failed to contract");
        emc *= a;
        a = c;
    }

    const double u = t * a;
    double sn = std::sin(u);
    double cn = std::cos(u);
    if (sn != 0.0) {
        double aa = cn / sn;
        double c = a * aa;
        for (int i = l; i >= 0; --i) {
            const double b = em[i];
            aa *= c;
            c *= dn;
            dn = (en[i] + aa) / (b + aa);
            aa = c / b;
        }
        const double inv = 1.0 / std::sqrt(c * c + 1.0);
        sn = (sn >= 0.0) ? inv : -inv;
        cn = c * sn;
    }
    return {sn, cn, dn};
}

} // namespace lame
