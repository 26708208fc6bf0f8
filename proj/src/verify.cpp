#include "lame/verify.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <complex>
#include <functional>
#include <limits>
#include <numbers>
#include <random>
#include <sstream>
#include <thread>
#include <vector>

#include "lame/bounds.hpp"
#include "lame/discriminant.hpp"
#include "lame/elliptic.hpp"
#include "lame/errors.hpp"
#include "lame/gamma.hpp"
#include "lame/legendre.hpp"
#include "lame/ode.hpp"
#include "lame/sweep.hpp"

namespace lame {

namespace {

using cplx = std::complex<double>;

// Numerical-evaluation slack for inclusion checks whose analytic bound is
// exactly 0 on nu = 0 grid rows (the integration itself carries ~1e-10
// error, so a literal <= 0 is unsatisfiable). Matches the tolerance the
// nu = 0 exactness check uses.
constexpr double kInclusionSlack = 1e-8;

// Worst-margin accumulator: every check pushes (value - allowance); a
// property passes when the maximum stays <= 0.
struct MarginTracker {
    double worst = -std::numeric_limits<double>::infinity();
    std::string where;

    void check(double value, double allowance, const std::string& label) {
        const double margin = value - allowance;
        if (margin > worst) {
            worst = margin;
            where = label;
        }
    }
};

PropertyResult finish(const std::string& name, const MarginTracker& m) {
    return {name, m.worst <= 0.0, m.worst, m.where};
}

PropertyResult failed(const std::string& name, const std::string& why) {
    return {name, false, std::numeric_limits<double>::infinity(), why};
}

std::string fmt_point(double h, double nu, double tau) {
    std::ostringstream os;
    os << "h=" << h << " nu=" << nu << " tau=" << tau;
    return os.str();
}

const std::vector<double> kNuGrid = {0.0, 0.25, 0.5, 1.0, 2.0};

std::vector<std::pair<double, double>> standard_hnu_grid() {
    std::vector<std::pair<double, double>> g;
    for (double nu : kNuGrid)
        for (int j = 1; j <= 10; ++j)
            g.emplace_back(nu * (nu + 1.0) + j, nu);
    return g;
}

// ---- special_functions ----------------------------------------------------

PropertyResult prop_elliptic_inequalities(int density) {
    MarginTracker m;
    const int n = 40 * density;
    for (int i = 0; i <= n; ++i) {
        // log-spaced k' from 1e-6 to 1
        const double kp = std::pow(10.0, -6.0 + 6.0 * i / n);
        const Modulus mod = Modulus::from_kprime(std::min(kp, 1.0));
        const double K = ellip_K(mod);
        const double E = ellip_E(mod);
        m.check(E - std::tanh(K), mod.kprime_sq() * K + 1e-15,
                "E-tanhK<=k'^2*K at k'=" + format_sig15(kp));
        m.check(K, std::numbers::pi / 2 - std::log(mod.kprime()) + 1e-12,
                "K<=pi/2-ln k' at k'=" + format_sig15(kp));
    }
    return finish("elliptic_inequalities", m);
}

PropertyResult prop_elliptic_K_log_asymptote(int density) {
    MarginTracker m;
    const int n = 30 * density;
    for (int i = 0; i <= n; ++i) {
        const double kp = std::pow(10.0, -6.0 + 4.0 * i / n); // [1e-6, 1e-2]
        const Modulus mod = Modulus::from_kprime(kp);
        const double K = ellip_K(mod);
        m.check(std::abs(K - std::log(4.0 / kp)),
                10.0 * kp * kp * std::abs(std::log(kp)),
                "K-ln(4/k') at k'=" + format_sig15(kp));
    }
    return finish("elliptic_K_log_asymptote", m);
}

PropertyResult prop_jacobi_identities(std::mt19937_64& rng, int density) {
    MarginTracker m;
    std::uniform_real_distribution<double> uk(0.05, 0.999);
    for (int s = 0; s < 25 * density; ++s) {
        const double k = uk(rng);
        const Modulus mod = Modulus::from_k(k);
        const double K = ellip_K(mod);
        std::uniform_real_distribution<double> ut(-2.0 * K, 4.0 * K);
        const double t = ut(rng);
        const auto [sn, cn, dn] = jacobi_sn_cn_dn(t, mod);
        const std::string at = "k=" + format_sig15(k) + " t=" + format_sig15(t);
        m.check(std::abs(sn * sn + cn * cn - 1.0), 1e-11, "sn^2+cn^2 " + at);
        m.check(std::abs(dn * dn - mod.ksq() * cn * cn - mod.kprime_sq()), 1e-11,
                "dn^2-k^2cn^2 " + at);
    }
    return finish("jacobi_pythagorean_identities", m);
}

PropertyResult prop_jacobi_quasi_periodicity(std::mt19937_64& rng, int density) {
    MarginTracker m;
    std::uniform_real_distribution<double> uk(0.05, 0.995);
    for (int s = 0; s < 20 * density; ++s) {
        const double k = uk(rng);
        const Modulus mod = Modulus::from_k(k);
        const double K = ellip_K(mod);
        std::uniform_real_distribution<double> ut(0.0, 2.0 * K);
        const double t = ut(rng);
        const double lhs = jacobi_sn_cn_dn(t + 2.0 * K, mod).sn;
        const double rhs = -jacobi_sn_cn_dn(t, mod).sn;
        m.check(std::abs(lhs - rhs), 1e-10,
                "sn(t+2K)=-sn(t) at k=" + format_sig15(k));
    }
    return finish("jacobi_quasi_periodicity", m);
}

PropertyResult prop_jacobi_tanh_sandwich(int density) {
    MarginTracker m;
    for (double k : {0.5, 0.9, 0.99}) {
        const Modulus mod = Modulus::from_k(k);
        const double K = ellip_K(mod);
        const int n = 60 * density;
        for (int i = 0; i <= n; ++i) {
            const double t = K * i / n;
            const double sn = jacobi_sn_cn_dn(t, mod).sn;
            const double th = std::tanh(t);
            const std::string at = "k=" + format_sig15(k) + " t=" + format_sig15(t);
            m.check(k * sn - th, 1e-12, "k*sn<=tanh " + at);
            m.check(th - sn, 1e-12, "tanh<=sn " + at);
        }
    }
    return finish("jacobi_tanh_sandwich", m);
}

PropertyResult prop_gamma_identities(std::mt19937_64& rng, int density) {
    MarginTracker m;
    std::uniform_real_distribution<double> ure(-9.7, 9.7);
    std::uniform_real_distribution<double> uim(-20.0, 20.0);
    for (int s = 0; s < 40 * density; ++s) {
        cplx z(ure(rng), uim(rng));
        if (std::abs(z.imag()) < 1e-3) z += cplx(0.0, 0.5); // stay off the poles
        const cplx refl =
            complex_gamma(z) * complex_gamma(1.0 - z) * std::sin(std::numbers::pi * z) /
            std::numbers::pi;
        m.check(std::abs(refl - 1.0), 1e-11,
                "reflection at z=" + format_sig15(z.real()) + "+" +
                    format_sig15(z.imag()) + "i");

        const cplx x(std::abs(ure(rng)) + 0.1, uim(rng) * 0.5);
        const cplx dup = std::exp((x - 1.0) * std::numbers::ln2) *
                         complex_gamma(0.5 * x) * complex_gamma(0.5 * (x + 1.0));
        const cplx rhs = std::sqrt(std::numbers::pi) * complex_gamma(x);
        m.check(std::abs(dup / rhs - 1.0), 1e-11,
                "duplication at x=" + format_sig15(x.real()) + "+" +
                    format_sig15(x.imag()) + "i");
    }
    return finish("gamma_reflection_duplication", m);
}

// ---- ode_floquet ------------------------------------------------------------

PropertyResult prop_wronskian(std::mt19937_64& rng, int density, bool corrupt) {
    MarginTracker m;
    IntegrationConfig cfg; // nominal
    const double threshold = 10.0 * cfg.rel_tol;
    if (corrupt) { // hook: loosen the integration, keep the nominal bar
        cfg.rel_tol = 1e-3;
        cfg.abs_tol = 1e-5;
    }

    const auto drift = [&](const Coefficient& q, double b,
                           const std::string& label) {
        try {
            const FundamentalMatrix fm = fundamental_matrix(q, 0.0, b, cfg);
            m.check(std::abs(fm.det() - 1.0), threshold, label);
        } catch (const Error& e) {
            m.check(1.0, 0.0, label + ": " + e.what());
        }
    };

    std::uniform_real_distribution<double> ua(0.5, 9.0);
    for (int s = 0; s < 8 * density; ++s) {
        const double w2 = ua(rng);
        const double amp = ua(rng) * 0.3;
        const double freq = ua(rng);
        drift([w2, amp, freq](double t) { return w2 + amp * std::sin(freq * t); },
              3.0, "sinusoidal q, w2=" + format_sig15(w2));
    }
    for (double tau : {1.0, 5.0, 8.0}) {
        const LameParams p(6.0, 0.5, Modulus::from_tau(tau));
        const double K = ellip_K(p.modulus());
        drift([p](double t) { return q_lame(t, p); }, K, fmt_point(6.0, 0.5, tau));
    }
    return finish("wronskian_conservation", m);
}

PropertyResult prop_self_convergence(int) {
    MarginTracker m;
    for (double tau : {2.0, 5.0}) {
        const LameParams p(6.0, 0.5, Modulus::from_tau(tau));
        IntegrationConfig coarse;
        IntegrationConfig fine;
        fine.rel_tol = coarse.rel_tol / 2;
        fine.abs_tol = coarse.abs_tol / 2;
        const double d1 = discriminant(p, coarse);
        const double d2 = discriminant(p, fine);
        m.check(std::abs(d1 - d2), coarse.rel_tol,
                "D(rel_tol) vs D(rel_tol/2) at tau=" + format_sig15(tau));
    }
    return finish("integrator_self_convergence", m);
}

// ---- lame_core --------------------------------------------------------------

PropertyResult prop_theorem3_inclusion(int) {
    MarginTracker m;
    struct Pt { double h, nu, tau; };
    std::vector<Pt> pts;
    for (const auto& [h, nu] : standard_hnu_grid())
        for (int tau = 1; tau <= 8; ++tau)
            pts.push_back({h, nu, static_cast<double>(tau)});

    std::vector<double> lhs(pts.size()), rhs(pts.size());
    std::vector<std::string> errs(pts.size());
    std::atomic<size_t> next{0};
    auto worker = [&] {
        for (size_t i = next.fetch_add(1); i < pts.size(); i = next.fetch_add(1)) {
            try {
                const LameParams p(pts[i].h, pts[i].nu, Modulus::from_tau(pts[i].tau));
                const double D = discriminant(p);
                lhs[i] = std::abs(D - approx_discriminant(p));
                rhs[i] = error_bound(p) + kInclusionSlack;
            } catch (const Error& e) {
                errs[i] = e.what();
            }
        }
    };
    unsigned threads = std::max(1u, std::thread::hardware_concurrency());
    std::vector<std::thread> pool;
    for (unsigned i = 0; i < threads; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();

    for (size_t i = 0; i < pts.size(); ++i) {
        if (!errs[i].empty())
            return failed("theorem3_inclusion",
                          fmt_point(pts[i].h, pts[i].nu, pts[i].tau) + ": " + errs[i]);
        m.check(lhs[i], rhs[i], fmt_point(pts[i].h, pts[i].nu, pts[i].tau));
    }
    return finish("theorem3_inclusion", m);
}

PropertyResult prop_nu0_exactness(int) {
    MarginTracker m;
    for (double h : {1.0, 2.0, 4.0, 9.0}) {
        for (double tau : {1.0, 3.0, 5.0}) {
            const Modulus mod = Modulus::from_tau(tau);
            const LameParams p(h, 0.0, mod);
            const double D = discriminant(p);
            const double exact = 2.0 * std::cos(2.0 * std::sqrt(h) * ellip_K(mod));
            m.check(std::abs(D - exact), 1e-8, fmt_point(h, 0.0, tau));
            m.check(error_bound(p), 0.0, "bound=0 " + fmt_point(h, 0.0, tau));
        }
    }
    return finish("nu0_exactness", m);
}

PropertyResult prop_nu_fold_symmetry(int) {
    MarginTracker m;
    for (double nu : {0.25, 0.5, 1.0}) {
        const Modulus mod = Modulus::from_tau(4.0);
        const double h = nu * (nu + 1.0) + 3.0;
        const DiscriminantReport a = classify(LameParams(h, nu, mod));
        const DiscriminantReport b = classify(LameParams(h, -1.0 - nu, mod));
        const std::string at = "nu=" + format_sig15(nu);
        m.check(std::abs(a.D - b.D), 0.0, "D " + at);
        m.check(std::abs(a.approx.value_or(0) - b.approx.value_or(0)), 0.0, "approx " + at);
        m.check(std::abs(a.bound.value_or(0) - b.bound.value_or(0)), 0.0, "bound " + at);
        m.check(a.verdict == b.verdict ? 0.0 : 1.0, 0.0, "verdict " + at);
    }
    return finish("nu_fold_symmetry", m);
}

PropertyResult prop_B_magnitude_identity(int) {
    MarginTracker m;
    for (const auto& [h, nu] : standard_hnu_grid()) {
        const AsymptoticConstants ac = asymptotic_constants(h, nu);
        const double expect =
            1.0 + std::pow(std::sin(nu * std::numbers::pi), 2) /
                      std::pow(std::sinh(ac.omega * std::numbers::pi), 2);
        m.check(std::abs(std::norm(ac.B) - expect), 1e-10,
                "h=" + format_sig15(h) + " nu=" + format_sig15(nu));
    }
    return finish("B_magnitude_identity", m);
}

PropertyResult prop_polar_identity(int) {
    MarginTracker m;
    for (const auto& [h, nu] : standard_hnu_grid()) {
        for (double tau : {1.0, 4.0, 7.0}) {
            const Modulus mod = Modulus::from_tau(tau);
            const LameParams p(h, nu, mod);
            const AsymptoticConstants ac = asymptotic_constants(h, nu);
            const double K = ellip_K(mod);
            const double polar =
                ac.amplitude * std::cos(2.0 * ac.omega * K + ac.phase);
            m.check(std::abs(approx_discriminant(p) - polar), 1e-12,
                    fmt_point(h, nu, tau));
        }
    }
    return finish("approximant_polar_identity", m);
}

PropertyResult prop_bound_monotone_domination(int) {
    MarginTracker m;
    double prev_bound = std::numeric_limits<double>::infinity();
    for (int tau = 2; tau <= 8; ++tau) {
        const LameParams p(6.0, 0.5, Modulus::from_tau(tau));
        const double D = discriminant(p);
        const double bound = error_bound(p);
        m.check(std::abs(D - approx_discriminant(p)), bound,
                "inclusion at tau=" + std::to_string(tau));
        m.check(bound, prev_bound - 1e-15, "strict decrease at tau=" + std::to_string(tau));
        prev_bound = bound;
    }
    return finish("bound_monotone_domination", m);
}

// ---- legendre_limit ---------------------------------------------------------

PropertyResult prop_legendre_initial_data(int) {
    MarginTracker m;
    const double h = 6.0, nu = 0.5, d = 1e-5;
    m.check(std::abs(w1(0.0, h, nu) - 1.0), 1e-14, "w1(0)");
    m.check(std::abs(w2(0.0, h, nu)), 1e-14, "w2(0)");
    // second-order one-sided difference quotients (the domain is t >= 0)
    const double w1p0 =
        (-3.0 * w1(0.0, h, nu) + 4.0 * w1(d, h, nu) - w1(2 * d, h, nu)) / (2 * d);
    const double w2p0 =
        (-3.0 * w2(0.0, h, nu) + 4.0 * w2(d, h, nu) - w2(2 * d, h, nu)) / (2 * d);
    m.check(std::abs(w1p0), 1e-8, "numeric w1'(0)");
    m.check(std::abs(w2p0 - 1.0), 1e-8, "numeric w2'(0)");
    m.check(std::abs(w1_prime(0.0, h, nu)), 1e-14, "analytic w1'(0)");
    m.check(std::abs(w2_prime(0.0, h, nu) - 1.0), 1e-14, "analytic w2'(0)");
    return finish("legendre_initial_data", m);
}

PropertyResult prop_legendre_ode_residual(int density) {
    MarginTracker m;
    const double h = 6.0, nu = 0.5;
    // sixth-order central stencil: wide enough that series noise (~1e-13
    // per evaluation) divided by d^2 stays below the 1e-8 budget
    const double d = 0.025;
    const auto second = [d](const std::function<double(double)>& f, double t) {
        return (2.0 * (f(t - 3 * d) + f(t + 3 * d)) -
                27.0 * (f(t - 2 * d) + f(t + 2 * d)) +
                270.0 * (f(t - d) + f(t + d)) - 490.0 * f(t)) /
               (180.0 * d * d);
    };
    const auto f1 = [h, nu](double t) { return w1(t, h, nu); };
    const auto f2 = [h, nu](double t) { return w2(t, h, nu); };
    const int n = 10 * density;
    for (int i = 1; i <= n; ++i) {
        const double t = 0.3 + (5.0 - 0.3) * i / n;
        const double q = h - nu * (nu + 1.0) * std::tanh(t) * std::tanh(t);
        const double r1 = second(f1, t) + q * w1(t, h, nu);
        const double r2 = second(f2, t) + q * w2(t, h, nu);
        m.check(std::abs(r1), 1e-8, "w1 residual at t=" + format_sig15(t));
        m.check(std::abs(r2), 1e-8, "w2 residual at t=" + format_sig15(t));
    }
    return finish("legendre_ode_residual", m);
}

PropertyResult prop_theorem2_inclusion(int) {
    MarginTracker m;
    for (double nu : kNuGrid) {
        for (int j : {1, 4, 9}) {
            const double h = nu * (nu + 1.0) + j;
            const ConnectionConstants cc = connection_constants(h, nu);
            for (double t : {0.5, 1.0, 2.0, 3.0, 4.0, 5.0}) {
                const double lhs1 = std::abs(w1(t, h, nu) - z_osc(t, cc, 1));
                const double lhs2 =
                    std::abs(w2_prime(t, h, nu) - z_osc_prime(t, cc, 2));
                m.check(lhs1, theorem2_bound(t, h, nu, Theorem2Target::w1) + 1e-11,
                        "w1 h=" + format_sig15(h) + " nu=" + format_sig15(nu) +
                            " t=" + format_sig15(t));
                m.check(lhs2, theorem2_bound(t, h, nu, Theorem2Target::w2_prime) + 1e-11,
                        "w2' h=" + format_sig15(h) + " nu=" + format_sig15(nu) +
                            " t=" + format_sig15(t));
            }
        }
    }
    return finish("theorem2_inclusion", m);
}

PropertyResult prop_legendre_decay(int) {
    MarginTracker m;
    for (double nu : {0.25, 0.5, 1.0}) {
        const double h = nu * (nu + 1.0) + 5.0;
        const ConnectionConstants cc = connection_constants(h, nu);
        const double d2 = std::abs(w1(2.0, h, nu) - z_osc(2.0, cc, 1));
        const double d6 = std::abs(w1(6.0, h, nu) - z_osc(6.0, cc, 1));
        m.check(d6, d2, "decay nu=" + format_sig15(nu));
    }
    return finish("legendre_large_t_decay", m);
}

PropertyResult prop_connection_identities(int) {
    MarginTracker m;
    for (const auto& [h, nu] : standard_hnu_grid()) {
        const ConnectionConstants cc = connection_constants(h, nu);
        const AsymptoticConstants ac = asymptotic_constants(h, nu);
        const cplx lhs = cc.omega * cc.A1 * std::conj(cc.A2);
        const cplx rhs(-std::sin(nu * std::numbers::pi) /
                           std::sinh(cc.omega * std::numbers::pi),
                       1.0);
        const std::string at = "h=" + format_sig15(h) + " nu=" + format_sig15(nu);
        m.check(std::abs(lhs - rhs), 1e-10, "omega*A1*conj(A2) " + at);
        m.check(std::abs(cplx(0.0, cc.omega) * cc.A1 * cc.A2 - ac.B), 1e-10,
                "i*omega*A1*A2=B " + at);
        // z-Wronskian via the sinusoids themselves
        const double t = 0.7;
        const double zw = z_osc(t, cc, 1) * z_osc_prime(t, cc, 2) -
                          z_osc_prime(t, cc, 1) * z_osc(t, cc, 2);
        m.check(std::abs(zw - 1.0), 1e-10, "z-Wronskian " + at);
    }
    return finish("connection_identities", m);
}

// ---- bounds -----------------------------------------------------------------

PropertyResult prop_lemma3_inclusion(std::mt19937_64& rng, int density) {
    MarginTracker m;
    std::uniform_real_distribution<double> unu(-0.5, 2.0);
    std::uniform_real_distribution<double> uh(0.1, 10.0);
    std::uniform_real_distribution<double> utau(0.5, 6.0);
    std::uniform_real_distribution<double> u01(0.0, 1.0);
    int accepted = 0;
    while (accepted < 5 * density) {
        const double nu = unu(rng);
        const double h = uh(rng);
        const Modulus mod = Modulus::from_tau(utau(rng));
        if (!(h > 0.0) || !(h - nu * (nu + 1.0) * mod.ksq() > 0.0)) continue;
        ++accepted;
        const BoundConstants c = bound_constants(h, nu, mod);
        const double K = ellip_K(mod);
        const double s = u01(rng) * 0.9 * K;
        const LameParams p(h, nu, mod);
        const auto q = [&p](double t) { return q_lame(t, p); };
        for (int i = 1; i <= 6; ++i) {
            const double t = s + (K - s) * i / 6.0;
            const FundamentalMatrix fm = fundamental_matrix(q, s, t);
            const std::string at = fmt_point(h, nu, mod.tau()) +
                                   " s=" + format_sig15(s) + " t=" + format_sig15(t);
            m.check(std::abs(fm.y1), c.C1 + 1e-9, "|y1|<=C1 " + at);
            m.check(std::abs(fm.y1p), c.C1p + 1e-9, "|y1'|<=C1' " + at);
            m.check(std::abs(fm.y2), c.C2 + 1e-9, "|y2|<=C2 " + at);
            m.check(std::abs(fm.y2p), c.C2p + 1e-9, "|y2'|<=C2' " + at);
        }
    }
    return finish("lemma3_inclusion", m);
}

PropertyResult prop_lemma2_inclusion(int density) {
    MarginTracker m;
    struct Case {
        const char* name;
        std::function<double(double)> q;
        Monotonicity dir;
        double qmin, qmax;
    };
    const Case cases[] = {
        {"q=1+t", [](double t) { return 1.0 + t; }, Monotonicity::nondecreasing, 1.0, 2.0},
        {"q=2-t", [](double t) { return 2.0 - t; }, Monotonicity::nonincreasing, 1.0, 2.0},
    };
    for (const Case& c : cases) {
        const SolutionEnvelope env = lemma2_envelope(c.qmin, c.qmax, c.dir);
        const int n = 20 * density;
        for (int i = 1; i <= n; ++i) {
            const double t = static_cast<double>(i) / n;
            const FundamentalMatrix fm = fundamental_matrix(c.q, 0.0, t);
            const std::string at = std::string(c.name) + " t=" + format_sig15(t);
            m.check(std::abs(fm.y1), env.y1 + 1e-9, "|y1| " + at);
            m.check(std::abs(fm.y1p), env.y1p + 1e-9, "|y1'| " + at);
            m.check(std::abs(fm.y2), env.y2 + 1e-9, "|y2| " + at);
            m.check(std::abs(fm.y2p), env.y2p + 1e-9, "|y2'| " + at);
        }
    }
    return finish("lemma2_inclusion", m);
}

PropertyResult prop_theorem1_inclusion(int) {
    MarginTracker m;
    for (const auto& [h, nu] : standard_hnu_grid()) {
        for (double tau : {3.0, 5.0, 8.0}) {
            const Modulus mod = Modulus::from_tau(tau);
            const LameParams p(h, nu, mod);
            const double K = ellip_K(mod);
            const auto q = [&p](double t) { return q_lame(t, p); };
            const FundamentalMatrix fm = fundamental_matrix(q, 0.0, K);
            const double lhs1 = std::abs(fm.y1 - w1(K, h, nu));
            const double lhs2 = std::abs(fm.y2p - w2_prime(K, h, nu));
            m.check(lhs1, theorem1_bound(h, nu, mod, Theorem1Target::y1) + kInclusionSlack,
                    "y1 " + fmt_point(h, nu, tau));
            m.check(lhs2,
                    theorem1_bound(h, nu, mod, Theorem1Target::y2_prime) + kInclusionSlack,
                    "y2' " + fmt_point(h, nu, tau));
        }
    }
    return finish("theorem1_inclusion", m);
}

// ---- cli --------------------------------------------------------------------

PropertyResult prop_csv_round_trip(int) {
    MarginTracker m;
    const std::vector<SweepRow> rows = run_sweep(6.0, 0.5, 1.0, 6.0, 11);
    std::ostringstream out;
    write_sweep_csv(out, rows);
    std::istringstream in(out.str());
    const std::vector<SweepRow> back = read_sweep_csv(in);
    if (back.size() != rows.size())
        return failed("csv_round_trip", "row count changed");
    auto same15 = [](const std::optional<double>& a, const std::optional<double>& b) {
        if (a.has_value() != b.has_value()) return false;
        if (!a) return true;
        return format_sig15(*a) == format_sig15(*b);
    };
    for (size_t i = 0; i < rows.size(); ++i) {
        const bool ok = same15(rows[i].tau, back[i].tau) && same15(rows[i].k, back[i].k) &&
                        same15(rows[i].kprime, back[i].kprime) &&
                        same15(rows[i].K, back[i].K) && same15(rows[i].E, back[i].E) &&
                        same15(rows[i].omega, back[i].omega) &&
                        same15(rows[i].D, back[i].D) &&
                        same15(rows[i].approx, back[i].approx) &&
                        same15(rows[i].bound, back[i].bound) &&
                        rows[i].verdict == back[i].verdict;
        m.check(ok ? 0.0 : 1.0, 0.0, "row " + std::to_string(i));
    }
    // LF endings only
    m.check(out.str().find('\r') == std::string::npos ? 0.0 : 1.0, 0.0, "LF endings");
    return finish("csv_round_trip", m);
}

PropertyResult prop_number_formatting(int) {
    MarginTracker m;
    // decimal point, no grouping, independent of locale
    m.check(format_sig15(0.5) == "0.5" ? 0.0 : 1.0, 0.0, "0.5");
    m.check(format_sig15(1234567.25) == "1234567.25" ? 0.0 : 1.0, 0.0, "no grouping");
    m.check(format_sig15(-1.2745283951958106).substr(0, 9) == "-1.274528" ? 0.0 : 1.0,
            0.0, "15 significant digits");
    return finish("number_formatting", m);
}

} // namespace

std::vector<PropertyResult> run_verification(const VerifyOptions& opt) {
    std::mt19937_64 rng(opt.seed);
    const int d = std::max(1, opt.grid_density);

    std::vector<PropertyResult> out;
    auto run = [&out](PropertyResult r) { out.push_back(std::move(r)); };

    try {
        run(prop_elliptic_inequalities(d));
        run(prop_elliptic_K_log_asymptote(d));
        run(prop_jacobi_identities(rng, d));
        run(prop_jacobi_quasi_periodicity(rng, d));
        run(prop_jacobi_tanh_sandwich(d));
        run(prop_gamma_identities(rng, d));
        run(prop_wronskian(rng, d, opt.corrupt_tolerance));
        run(prop_self_convergence(d));
        run(prop_theorem3_inclusion(d));
        run(prop_nu0_exactness(d));
        run(prop_nu_fold_symmetry(d));
        run(prop_B_magnitude_identity(d));
        run(prop_polar_identity(d));
        run(prop_bound_monotone_domination(d));
        run(prop_legendre_initial_data(d));
        run(prop_legendre_ode_residual(d));
        run(prop_theorem2_inclusion(d));
        run(prop_legendre_decay(d));
        run(prop_connection_identities(d));
        run(prop_lemma3_inclusion(rng, d));
        run(prop_lemma2_inclusion(d));
        run(prop_theorem1_inclusion(d));
        run(prop_csv_round_trip(d));
        run(prop_number_formatting(d));
    } catch (const std::exception& e) {
        out.push_back(failed("suite_aborted", e.what()));
    }
    return out;
}

bool all_passed(const std::vector<PropertyResult>& results) {
    return std::all_of(results.begin(), results.end(),
                       [](const PropertyResult& r) { return r.passed; });
}

} // namespace lame
