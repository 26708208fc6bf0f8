#include "lame/legendre.hpp"

#include <cmath>
#include <numbers>

#include "lame/bounds.hpp"
#include "lame/errors.hpp"
#include "lame/gamma.hpp"
#include "lame/hypergeometric.hpp"

namespace lame {

namespace {

using cplx = std::complex<double>;

struct Frame {
    cplx mu;        // i omega
    double omega;
    double th;      // tanh t
    double s;       // tanh^2 t
    double sech2;   // 1/cosh^2 t
    cplx cosh_mu;   // cosh^mu t = e^{i omega ln cosh t}
};

Frame make_frame(double t, double h, double nu) {
    if (!(t >= 0.0))
        throw PreconditionViolated("k=1 solutions are evaluated for t >= 0");
    const double omega_sq = h - nu * (nu + 1.0);
    if (!(omega_sq > 0.0))
        throw OmegaUndefined("k=1 solutions require h > nu(nu+1)");
    const double omega = std::sqrt(omega_sq);
    const double ch = std::cosh(t);
    const double th = std::tanh(t);
    const double lc = std::log(ch);
    return {cplx(0.0, omega), omega,          th,
            th * th,         1.0 / (ch * ch), cplx(std::cos(omega * lc), std::sin(omega * lc))};
}

double fold(double nu) { return nu < -0.5 ? -1.0 - nu : nu; }

} // namespace

double w1(double t, double h, double nu) {
    nu = fold(nu);
    const Frame f = make_frame(t, h, nu);
    const cplx a = -0.5 * (f.mu + nu);
    const cplx b = 0.5 * (1.0 - f.mu + nu);
    const cplx F = gauss_2f1(a, b, 0.5, f.s);
    return (f.cosh_mu * F).real();
}

double w1_prime(double t, double h, double nu) {
    nu = fold(nu);
    const Frame f = make_frame(t, h, nu);
    const cplx a = -0.5 * (f.mu + nu);
    const cplx b = 0.5 * (1.0 - f.mu + nu);
    const cplx c = 0.5;
    const cplx F = gauss_2f1(a, b, c, f.s);
    const cplx Fd = gauss_2f1(a + 1.0, b + 1.0, c + 1.0, f.s);
    const cplx inner = f.mu * F + 2.0 * f.sech2 * (a * b / c) * Fd;
    return (f.cosh_mu * f.th * inner).real();
}

double w2(double t, double h, double nu) {
    nu = fold(nu);
    const Frame f = make_frame(t, h, nu);
    const cplx a = 0.5 * (1.0 - f.mu - nu);
    const cplx b = 0.5 * (2.0 - f.mu + nu);
    const cplx G = gauss_2f1(a, b, 1.5, f.s);
    return (f.th * f.cosh_mu * G).real();
}

double w2_prime(double t, double h, double nu) {
    nu = fold(nu);
    const Frame f = make_frame(t, h, nu);
    const cplx a = 0.5 * (1.0 - f.mu - nu);
    const cplx b = 0.5 * (2.0 - f.mu + nu);
    const cplx c = 1.5;
    const cplx G = gauss_2f1(a, b, c, f.s);
    const cplx Gd = gauss_2f1(a + 1.0, b + 1.0, c + 1.0, f.s);
    const cplx inner = f.sech2 * G + f.mu * f.s * G + 2.0 * f.s * f.sech2 * (a * b / c) * Gd;
    return (f.cosh_mu * inner).real();
}

ConnectionConstants connection_constants(double h, double nu) {
    nu = fold(nu);
    const double omega_sq = h - nu * (nu + 1.0);
    if (!(omega_sq > 0.0))
        throw OmegaUndefined("connection_constants: requires h > nu(nu+1)");
    const double omega = std::sqrt(omega_sq);
    const cplx mu(0.0, omega);
    const double sqrt_pi = std::sqrt(std::numbers::pi);
    const cplx two_pow_minus_mu = std::exp(-mu * std::numbers::ln2);
    const cplx gmu = complex_gamma(mu);

    const cplx A1 = 2.0 * two_pow_minus_mu * sqrt_pi * gmu /
                    (complex_gamma(0.5 * (1.0 + mu + nu)) *
                     complex_gamma(0.5 * (mu - nu)));
    const cplx A2 = two_pow_minus_mu * sqrt_pi * gmu /
                    (complex_gamma(0.5 * (2.0 + mu + nu)) *
                     complex_gamma(0.5 * (1.0 + mu - nu)));
    return {A1, A2, omega};
}

double z_osc(double t, const ConnectionConstants& c, int j) {
    if (j != 1 && j != 2)
        throw PreconditionViolated("z_osc: j must be 1 or 2");
    const cplx rot(std::cos(c.omega * t), std::sin(c.omega * t));
    return ((j == 1 ? c.A1 : c.A2) * rot).real();
}

double z_osc_prime(double t, const ConnectionConstants& c, int j) {
    if (j != 1 && j != 2)
        throw PreconditionViolated("z_osc_prime: j must be 1 or 2");
    const cplx rot(std::cos(c.omega * t), std::sin(c.omega * t));
    return ((j == 1 ? c.A1 : c.A2) * cplx(0.0, c.omega) * rot).real();
}

double theorem2_bound(double t, double h, double nu, Theorem2Target which) {
    nu = fold(nu);
    if (!(t >= 0.0))
        throw PreconditionViolated("theorem2_bound: requires t >= 0");
    if (!(h > 0.0) || !(h > nu * (nu + 1.0)))
        throw PreconditionViolated("theorem2_bound: requires h > 0 and h > nu(nu+1)");
    const BoundConstants c = bound_constants(h, nu); // k = 1
    const double omega = std::sqrt(h - nu * (nu + 1.0));
    const double one_minus_tanh = 2.0 / (std::exp(2.0 * t) + 1.0);
    const double common = std::abs(nu) * (nu + 1.0) * one_minus_tanh;
    return which == Theorem2Target::w1 ? c.C1 / omega * common : c.C2 * common;
}

} // namespace lame
