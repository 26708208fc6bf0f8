#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>

#include "lame/discriminant.hpp"
#include "lame/errors.hpp"
#include "lame/legendre.hpp"
#include "lame/ode.hpp"

using namespace lame;
using cplx = std::complex<double>;
using std::numbers::pi;

namespace {

// the k = 1 Lame coefficient
Coefficient tanh_coefficient(double h, double nu) {
    return [h, nu](double t) {
        const double th = std::tanh(t);
        return h - nu * (nu + 1.0) * th * th;
    };
}

} // namespace

TEST_CASE("w1, w2: initial data and frozen oracle values") {
    CHECK(w1(0.0, 6.0, 0.5) == 1.0);
    CHECK(w2(0.0, 6.0, 0.5) == 0.0);
    CHECK(w1_prime(0.0, 6.0, 0.5) == 0.0);
    CHECK(w2_prime(0.0, 6.0, 0.5) == 1.0);

    // 40-digit mpmath references at h=6, nu=1/2
    CHECK(w1(1.0, 6.0, 0.5) == doctest::Approx(-0.76736687590848792709).epsilon(1e-12));
    CHECK(w2(1.0, 6.0, 0.5) == doctest::Approx(0.2752169341853474009).epsilon(1e-12));
    CHECK(w1(2.0, 6.0, 0.5) == doctest::Approx(0.026710427837467298792).epsilon(1e-10));
    CHECK(w2(2.0, 6.0, 0.5) == doctest::Approx(-0.41947233970415395989).epsilon(1e-12));
    CHECK(w1_prime(1.0, 6.0, 0.5) ==
          doctest::Approx(-1.61285622378709605).epsilon(1e-12));
    CHECK(w2_prime(1.0, 6.0, 0.5) ==
          doctest::Approx(-0.724705056038772919).epsilon(1e-12));
    CHECK(w1_prime(2.0, 6.0, 0.5) ==
          doctest::Approx(2.38256497864909011).epsilon(1e-12));
    CHECK(w2_prime(2.0, 6.0, 0.5) ==
          doctest::Approx(0.0217103938737782737).epsilon(1e-10));
}

TEST_CASE("w1, w2: constant-coefficient reduction at nu = 0") {
    const double h = 4.0, omega = 2.0;
    for (double t : {0.3, 1.1, 2.7, 5.0}) {
        CHECK(w1(t, h, 0.0) == doctest::Approx(std::cos(omega * t)).epsilon(1e-11));
        CHECK(w2(t, h, 0.0) ==
              doctest::Approx(std::sin(omega * t) / omega).epsilon(1e-11));
        CHECK(w1_prime(t, h, 0.0) ==
              doctest::Approx(-omega * std::sin(omega * t)).epsilon(1e-11));
        CHECK(w2_prime(t, h, 0.0) == doctest::Approx(std::cos(omega * t)).epsilon(1e-11));
    }
}

TEST_CASE("w1, w2 agree with direct integration of the tanh^2 equation") {
    const double h = 6.0, nu = 0.5;
    const auto q = tanh_coefficient(h, nu);
    for (double t : {1.0, 2.0, 3.5}) {
        const FundamentalMatrix fm = fundamental_matrix(q, 0.0, t);
        CHECK(std::abs(w1(t, h, nu) - fm.y1) < 1e-9);
        CHECK(std::abs(w2(t, h, nu) - fm.y2) < 1e-9);
        CHECK(std::abs(w1_prime(t, h, nu) - fm.y1p) < 1e-9);
        CHECK(std::abs(w2_prime(t, h, nu) - fm.y2p) < 1e-9);
    }
}

TEST_CASE("w1, w2: domain errors") {
    CHECK_THROWS_AS(w1(-0.5, 6.0, 0.5), PreconditionViolated);
    CHECK_THROWS_AS(w1(1.0, 1.0, 2.0), OmegaUndefined);
    CHECK_THROWS_AS(w1(20.0, 6.0, 0.5), SeriesDivergence);
}

TEST_CASE("connection_constants: frozen values and identities") {
    const ConnectionConstants cc = connection_constants(6.0, 0.5);
    CHECK(std::abs(cc.A1 - cplx(1.0245578559456691344, 0.1659525951938907857)) < 1e-12);
    CHECK(std::abs(cc.A2 - cplx(0.066612419008629093208, -0.41518521789355863877)) <
          1e-12);

    for (auto [h, nu] : {std::pair{6.0, 0.5}, std::pair{10.0, 1.0}}) {
        const ConnectionConstants c = connection_constants(h, nu);
        const cplx lhs = c.omega * c.A1 * std::conj(c.A2);
        const cplx rhs(-std::sin(nu * pi) / std::sinh(c.omega * pi), 1.0);
        CHECK(std::abs(lhs - rhs) < 1e-10);
        const auto ac = asymptotic_constants(h, nu);
        CHECK(std::abs(cplx(0.0, c.omega) * c.A1 * c.A2 - ac.B) < 1e-10);
    }
    CHECK_THROWS_AS(connection_constants(1.0, 2.0), OmegaUndefined);
}

TEST_CASE("z_osc: sinusoid facts") {
    const ConnectionConstants cc = connection_constants(6.0, 0.5);
    CHECK(z_osc(0.0, cc, 1) == doctest::Approx(cc.A1.real()).epsilon(1e-15));
    CHECK(z_osc(0.0, cc, 2) == doctest::Approx(cc.A2.real()).epsilon(1e-15));

    // frozen references
    CHECK(z_osc(2.0, cc, 1) == doctest::Approx(0.0319282922686395308).epsilon(1e-11));
    CHECK(z_osc_prime(2.0, cc, 2) ==
          doctest::Approx(0.0281980448175481846).epsilon(1e-11));
    CHECK(z_osc(5.0, cc, 1) == doctest::Approx(0.604282881331607323).epsilon(1e-12));
    CHECK(z_osc_prime(5.0, cc, 2) ==
          doctest::Approx(0.559773149241577726).epsilon(1e-12));

    const double period = 2.0 * pi / cc.omega;
    for (double t : {0.0, 0.7, 3.1}) {
        CHECK(z_osc(t + period, cc, 1) == doctest::Approx(z_osc(t, cc, 1)).epsilon(1e-10));
        CHECK(z_osc(t + period, cc, 2) == doctest::Approx(z_osc(t, cc, 2)).epsilon(1e-10));
    }

    // Wronskian of the sinusoids is 1; their discriminant form matches B
    const auto ac = asymptotic_constants(6.0, 0.5);
    for (double t : {0.4, 1.9}) {
        const double zw = z_osc(t, cc, 1) * z_osc_prime(t, cc, 2) -
                          z_osc_prime(t, cc, 1) * z_osc(t, cc, 2);
        CHECK(zw == doctest::Approx(1.0).epsilon(1e-10));
        const cplx rot(std::cos(2.0 * cc.omega * t), std::sin(2.0 * cc.omega * t));
        const double re_b = (ac.B * rot).real();
        const double sym = z_osc(t, cc, 1) * z_osc_prime(t, cc, 2) +
                           z_osc_prime(t, cc, 1) * z_osc(t, cc, 2);
        CHECK(sym == doctest::Approx(re_b).epsilon(1e-10));
        CHECK(2.0 * z_osc(t, cc, 1) * z_osc_prime(t, cc, 2) - 1.0 ==
              doctest::Approx(re_b).epsilon(1e-10));
    }

    CHECK_THROWS_AS(z_osc(0.0, cc, 3), PreconditionViolated);
}

TEST_CASE("theorem2_bound: values and inclusion") {
    // nu = 0 kills the bound; large t kills it through 1 - tanh t
    CHECK(theorem2_bound(1.0, 4.0, 0.0, Theorem2Target::w1) == 0.0);
    CHECK(theorem2_bound(40.0, 6.0, 0.5, Theorem2Target::w1) < 1e-30);

    const ConnectionConstants cc = connection_constants(6.0, 0.5);
    for (double t : {1.0, 2.0, 3.0}) {
        CHECK(std::abs(w1(t, 6.0, 0.5) - z_osc(t, cc, 1)) <=
              theorem2_bound(t, 6.0, 0.5, Theorem2Target::w1));
        CHECK(std::abs(w2_prime(t, 6.0, 0.5) - z_osc_prime(t, cc, 2)) <=
              theorem2_bound(t, 6.0, 0.5, Theorem2Target::w2_prime));
    }
    CHECK_THROWS_AS(theorem2_bound(-1.0, 6.0, 0.5, Theorem2Target::w1),
                    PreconditionViolated);
    CHECK_THROWS_AS(theorem2_bound(1.0, -2.0, 0.5, Theorem2Target::w1),
                    PreconditionViolated);
}

TEST_CASE("w_j converge to the oscillatory limit") {
    for (double nu : {0.25, 0.5}) {
        const double h = nu * (nu + 1.0) + 5.0;
        const ConnectionConstants cc = connection_constants(h, nu);
        const double d2 = std::abs(w1(2.0, h, nu) - z_osc(2.0, cc, 1));
        const double d6 = std::abs(w1(6.0, h, nu) - z_osc(6.0, cc, 1));
        CHECK(d6 < d2);
    }
}

TEST_CASE("finite-difference ODE residual of the hypergeometric forms") {
    const double h = 6.0, nu = 0.5, d = 0.025;
    const auto second = [d](auto&& f, double t) {
        return (2.0 * (f(t - 3 * d) + f(t + 3 * d)) -
                27.0 * (f(t - 2 * d) + f(t + 2 * d)) +
                270.0 * (f(t - d) + f(t + d)) - 490.0 * f(t)) /
               (180.0 * d * d);
    };
    for (double t : {0.5, 1.5, 3.0, 5.0}) {
        const double q = h - nu * (nu + 1.0) * std::pow(std::tanh(t), 2);
        const double r1 =
            second([&](double s) { return w1(s, h, nu); }, t) + q * w1(t, h, nu);
        const double r2 =
            second([&](double s) { return w2(s, h, nu); }, t) + q * w2(t, h, nu);
        CHECK(std::abs(r1) < 1e-8);
        CHECK(std::abs(r2) < 1e-8);
    }
}
