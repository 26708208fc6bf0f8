#include "lame/discriminant.hpp"

#include <cmath>
#include <numbers>

#include "lame/elliptic.hpp"
#include "lame/errors.hpp"
#include "lame/gamma.hpp"

namespace lame {

LameParams::LameParams(double h, double nu, Modulus m)
    : h_(h), nu_(nu), m_(m) {
    if (std::isnan(h) || std::isnan(nu))
        throw PreconditionViolated("LameParams: h and nu must be numbers");
    if (nu_ < -0.5)
        nu_ = -1.0 - nu_; // nu(nu+1) is invariant under the fold
}

double q_lame(double t, const LameParams& p) {
    const double sn = jacobi_sn_cn_dn(t, p.modulus()).sn;
    return p.h() - p.nu() * (p.nu() + 1.0) * p.modulus().ksq() * sn * sn;
}

AsymptoticConstants asymptotic_constants(double h, double nu) {
    if (nu < -0.5) nu = -1.0 - nu;
    const double omega_sq = h - nu * (nu + 1.0);
    if (!(omega_sq > 0.0))
        throw OmegaUndefined("asymptotic_constants: requires h > nu(nu+1)");
    const double omega = std::sqrt(omega_sq);

    std::complex<double> B;
    if (nu == 0.0) {
        B = 1.0; // the gamma ratio cancels identically
    } else {
        const std::complex<double> mu(0.0, omega);
        B = complex_gamma(1.0 + mu) * complex_gamma(mu) /
            (complex_gamma(1.0 + mu + nu) * complex_gamma(mu - nu));
    }
    double phase = std::arg(B);
    if (phase == -std::numbers::pi) phase = std::numbers::pi;
    return {omega, B, 2.0 * std::abs(B), phase};
}

double discriminant(const LameParams& p, const IntegrationConfig& cfg) {
    const double K = ellip_K(p.modulus());
    const double nn = p.nu() * (p.nu() + 1.0) * p.modulus().ksq();
    const double h = p.h();
    const Modulus m = p.modulus();
    const auto q = [h, nn, m](double t) {
        const double sn = jacobi_sn_cn_dn(t, m).sn;
        return h - nn * sn * sn;
    };
    const FundamentalMatrix fm = fundamental_matrix(q, 0.0, K, cfg);

    const double reduced = 2.0 * (2.0 * fm.y1 * fm.y2p - 1.0);
    const double symmetric = 2.0 * (fm.y1 * fm.y2p + fm.y1p * fm.y2);
    if (std::abs(reduced - symmetric) > 10.0 * cfg.rel_tol)
        throw ToleranceUnachievable(
            "discriminant: reduced and symmetric forms disagree beyond 10 * rel_tol");
    return reduced;
}

double approx_discriminant(const LameParams& p) {
    if (!(p.h() > 0.0))
        throw PreconditionViolated("approx_discriminant: requires h > 0");
    const AsymptoticConstants ac = asymptotic_constants(p.h(), p.nu());
    const double K = ellip_K(p.modulus());
    const std::complex<double> rot(std::cos(2.0 * ac.omega * K),
                                   std::sin(2.0 * ac.omega * K));
    return 2.0 * (ac.B * rot).real();
}

double error_bound(const LameParams& p) {
    const double h = p.h();
    const double nu = p.nu();
    const double K = ellip_K(p.modulus());
    const double E = ellip_E(p.modulus());
    // 1 - tanh K = 2/(e^{2K}+1), kept in that form for large K
    const double one_minus_tanh = 2.0 / (std::exp(2.0 * K) + 1.0);
    const double factor = (E - 1.0) + 2.0 * one_minus_tanh; // E + 1 - 2 tanh K

    if (nu >= 0.0) {
        const double omega_sq = h - nu * (nu + 1.0);
        if (!(h > 0.0) || !(omega_sq > 0.0))
            throw PreconditionViolated(
                "error_bound: branch nu >= 0 requires h > nu(nu+1) > 0");
        return 8.0 * std::sqrt(h) / omega_sq * nu * (nu + 1.0) * factor;
    }
    if (!(h > 0.0))
        throw PreconditionViolated("error_bound: branch nu < 0 requires h > 0");
    const double omega = std::sqrt(h - nu * (nu + 1.0));
    return 8.0 * omega / h * std::abs(nu) * (nu + 1.0) * factor;
}

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::ProvablyStable: return "ProvablyStable";
        case Verdict::ProvablyUnstable: return "ProvablyUnstable";
        case Verdict::NumericallyStable: return "NumericallyStable";
        case Verdict::NumericallyUnstable: return "NumericallyUnstable";
        case Verdict::Undetermined: return "Undetermined";
    }
    return "Undetermined";
}

std::optional<Verdict> verdict_from_string(std::string_view s) {
    if (s == "ProvablyStable") return Verdict::ProvablyStable;
    if (s == "ProvablyUnstable") return Verdict::ProvablyUnstable;
    if (s == "NumericallyStable") return Verdict::NumericallyStable;
    if (s == "NumericallyUnstable") return Verdict::NumericallyUnstable;
    if (s == "Undetermined") return Verdict::Undetermined;
    return std::nullopt;
}

DiscriminantReport classify(const LameParams& p, const IntegrationConfig& cfg) {
    DiscriminantReport rep;
    rep.D = discriminant(p, cfg);

    const bool theorem_applies =
        p.h() > 0.0 && p.h() > p.nu() * (p.nu() + 1.0);
    if (theorem_applies) {
        rep.approx = approx_discriminant(p);
        rep.bound = error_bound(p);
        if (std::abs(*rep.approx) + *rep.bound < 2.0) {
            rep.verdict = Verdict::ProvablyStable;
            return rep;
        }
        if (std::abs(*rep.approx) - *rep.bound > 2.0) {
            rep.verdict = Verdict::ProvablyUnstable;
            return rep;
        }
    }

    const double margin = 100.0 * cfg.rel_tol;
    if (std::abs(rep.D) < 2.0 - margin)
        rep.verdict = Verdict::NumericallyStable;
    else if (std::abs(rep.D) > 2.0 + margin)
        rep.verdict = Verdict::NumericallyUnstable;
    else
        rep.verdict = Verdict::Undetermined;
    return rep;
}

LameParams map_pendulum(double gamma, double energy) {
    if (!(energy > 0.0))
        throw InvalidEnergy("map_pendulum: energy must be positive");
    const double ksq = 2.0 / (energy + 2.0);
    // k'^2 = energy/(energy+2), exact complement of ksq
    const Modulus m = Modulus::from_kprime(std::sqrt(energy / (energy + 2.0)));
    return LameParams(ksq * (2.0 * gamma + 1.0), 1.0, m);
}

} // namespace lame
