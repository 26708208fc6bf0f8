#include "lame/ode.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>

#include "lame/errors.hpp"

namespace lame {

namespace {

// State carries both canonical solutions: (y1, y1', y2, y2').
using State = std::array<double, 4>;

inline State deriv(double qval, const State& y) {
    return {y[1], -qval * y[0], y[3], -qval * y[2]};
}

inline State axpy(const State& y, double h, const State& k) {
    return {y[0] + h * k[0], y[1] + h * k[1], y[2] + h * k[2], y[3] + h * k[3]};
}

// Dormand-Prince 5(4) tableau.
constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
constexpr double a21 = 1.0 / 5;
constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187,
                 a53 = 64448.0 / 6561, a54 = -212.0 / 729;
constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247,
                 a64 = 49.0 / 176, a65 = -5103.0 / 18656;
constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192,
                 b5 = -2187.0 / 6784, b6 = 11.0 / 84;
// b - bhat (error weights)
constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920,
                 e5 = -17253.0 / 339200, e6 = 22.0 / 525, e7 = -1.0 / 40;

double initial_step(const Coefficient& q, double a, double b, const State& y0,
                    const State& f0, double rtol, double atol) {
    // Hairer's starting-step heuristic on the scaled norms of y and f.
    double d0 = 0, d1 = 0;
    for (int i = 0; i < 4; ++i) {
        const double sc = atol + rtol * std::abs(y0[i]);
        d0 += (y0[i] / sc) * (y0[i] / sc);
        d1 += (f0[i] / sc) * (f0[i] / sc);
    }
    d0 = std::sqrt(d0 / 4);
    d1 = std::sqrt(d1 / 4);
    double h0 = (d0 < 1e-5 || d1 < 1e-5) ? 1e-6 : 0.01 * d0 / d1;
    h0 = std::min(h0, b - a);

    const State y1 = axpy(y0, h0, f0);
    const State f1 = deriv(q(a + h0), y1);
    double d2 = 0;
    for (int i = 0; i < 4; ++i) {
        const double sc = atol + rtol * std::abs(y0[i]);
        const double df = (f1[i] - f0[i]) / sc;
        d2 += df * df;
    }
    d2 = std::sqrt(d2 / 4) / h0;

    const double dmax = std::max(d1, d2);
    const double h1 = (dmax <= 1e-15)
                          ? std::max(1e-6, h0 * 1e-3)
                          : std::pow(0.01 / dmax, 0.2);
    return std::min({100 * h0, h1, b - a});
}

} // namespace

FundamentalMatrix fundamental_matrix(const Coefficient& q, double a, double b,
                                     const IntegrationConfig& cfg) {
    if (!(a < b))
        throw PreconditionViolated("fundamental_matrix requires a < b");
    if (!(cfg.rel_tol > 0.0) || !(cfg.abs_tol > 0.0) || cfg.max_steps < 1)
        throw PreconditionViolated("invalid IntegrationConfig");

    const double rtol = cfg.rel_tol;
    const double atol = cfg.abs_tol;
    constexpr double kEps = std::numeric_limits<double>::epsilon();

    double t = a;
    State y = {1.0, 0.0, 0.0, 1.0};
    State k1 = deriv(q(t), y);
    double h = initial_step(q, a, b, y, k1, rtol, atol);

    // dopri5 PI controller parameters
    constexpr double safe = 0.9, beta = 0.04, expo1 = 0.2 - beta * 0.75;
    constexpr double facc1 = 1.0 / 0.2, facc2 = 1.0 / 10.0;
    double facold = 1e-4;
    bool rejected = false;

    for (long step = 0; step < cfg.max_steps; ++step) {
        if (t >= b) break;
        if (b - t <= 4.0 * kEps * std::max(std::abs(b), 1.0)) {
            t = b; // remaining gap is below resolution
            break;
        }
        bool last = false;
        if (t + h >= b) {
            h = b - t;
            last = true;
        }
        if (h <= kEps * std::max(std::abs(t), 1.0) * 4.0)
            throw ToleranceUnachievable("step size underflow in fundamental_matrix");

        const State k2 = deriv(q(t + c2 * h), axpy(y, h * a21, k1));
        State ytmp;
        for (int i = 0; i < 4; ++i) ytmp[i] = y[i] + h * (a31 * k1[i] + a32 * k2[i]);
        const State k3 = deriv(q(t + c3 * h), ytmp);
        for (int i = 0; i < 4; ++i)
            ytmp[i] = y[i] + h * (a41 * k1[i] + a42 * k2[i] + a43 * k3[i]);
        const State k4 = deriv(q(t + c4 * h), ytmp);
        for (int i = 0; i < 4; ++i)
            ytmp[i] = y[i] + h * (a51 * k1[i] + a52 * k2[i] + a53 * k3[i] + a54 * k4[i]);
        const State k5 = deriv(q(t + c5 * h), ytmp);
        for (int i = 0; i < 4; ++i)
            ytmp[i] = y[i] + h * (a61 * k1[i] + a62 * k2[i] + a63 * k3[i] +
                                  a64 * k4[i] + a65 * k5[i]);
        const State k6 = deriv(q(t + h), ytmp);
        State ynew;
        for (int i = 0; i < 4; ++i)
            ynew[i] = y[i] + h * (b1 * k1[i] + b3 * k3[i] + b4 * k4[i] +
                                  b5 * k5[i] + b6 * k6[i]);
        const State k7 = deriv(q(t + h), ynew); // FSAL

        double err = 0;
        for (int i = 0; i < 4; ++i) {
            const double ei = h * (e1 * k1[i] + e3 * k3[i] + e4 * k4[i] +
                                   e5 * k5[i] + e6 * k6[i] + e7 * k7[i]);
            const double sc = atol + rtol * std::max(std::abs(y[i]), std::abs(ynew[i]));
            err += (ei / sc) * (ei / sc);
        }
        err = std::sqrt(err / 4);

        const double fac11 = std::pow(err, expo1);
        if (err <= 1.0) {
            facold = std::max(err, 1e-4);
            t = last ? b : t + h;
            y = ynew;
            k1 = k7;
            double fac = fac11 / std::pow(facold, beta);
            fac = std::max(facc2, std::min(facc1, fac / safe));
            double hnew = h / fac;
            if (rejected) hnew = std::min(hnew, h); // no growth right after a rejection
            h = hnew;
            rejected = false;
        } else {
            h = h / std::min(facc1, fac11 / safe);
            rejected = true;
        }
    }

    if (t < b)
        throw StepLimitExceeded("fundamental_matrix exceeded max_steps");

    const FundamentalMatrix fm{y[0], y[1], y[2], y[3]};
    if (std::abs(fm.det() - 1.0) > 10.0 * rtol)
        throw ToleranceUnachievable("Wronskian drift exceeded 10 * rel_tol");
    return fm;
}

} // namespace lame
