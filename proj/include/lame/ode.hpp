#pragma once

#include <functional>

namespace lame {

struct IntegrationConfig {
    double rel_tol = 1e-11;
    double abs_tol = 1e-13;
    long max_steps = 4000000;
};

/// Endpoint values of the two canonical solutions of y'' + q(t) y = 0 with
/// initial data y1(a) = y2'(a) = 1, y1'(a) = y2(a) = 0. The Wronskian
/// y1*y2p - y1p*y2 is conserved and equals 1; its numerical drift stays
/// within 10 * rel_tol of every successful integration.
struct FundamentalMatrix {
    double y1;
    double y1p;
    double y2;
    double y2p;

    double det() const noexcept { return y1 * y2p - y1p * y2; }
};

using Coefficient = std::function<double(double)>;

/// Integrates y'' + q(t) y = 0 over [a, b] with a Dormand-Prince 5(4)
/// embedded pair and PI step control, propagating both canonical solutions
/// in one pass.
///
/// Throws StepLimitExceeded or ToleranceUnachievable on failure; the latter
/// also fires if the Wronskian drifts beyond 10 * rel_tol.
FundamentalMatrix fundamental_matrix(const Coefficient& q, double a, double b,
                                     const IntegrationConfig& cfg = {});

} // namespace lame
