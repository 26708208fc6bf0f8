#pragma once

#include <optional>

namespace lame {

/// Elliptic modulus, stored through its complement k' = sqrt(1 - k^2).
///
/// The regime of interest is k -> 1, where 1 - k carries all the
/// information and forming k' = sqrt(1 - k^2) naively would cancel.
/// Keeping k' as a primary field (and building it cancellation-free in
/// from_tau) preserves full precision there. k^2 + k'^2 = 1 holds to
/// machine precision for every constructed value.
class Modulus {
public:
    /// From the modulus k in [0, 1).
    static Modulus from_k(double k);

    /// From the complementary modulus k' in (0, 1].
    static Modulus from_kprime(double kprime);

    /// From the sweep parameter tau > 0 with k = 1 - exp(-tau).
    /// Uses k'^2 = exp(-tau) * (2 - exp(-tau)), which is exact algebra and
    /// free of cancellation.
    static Modulus from_tau(double tau);

    double k() const noexcept { return k_; }
    double kprime() const noexcept { return kprime_; }
    double ksq() const noexcept { return ksq_; }
    double kprime_sq() const noexcept { return kpsq_; }

    /// tau with k = 1 - exp(-tau): the stored value when constructed from
    /// tau, otherwise derived as -log1p(-k).
    double tau() const noexcept;

    /// Present only when this modulus was constructed from tau.
    const std::optional<double>& stored_tau() const noexcept { return tau_; }

private:
    Modulus(double k, double kprime, double ksq, double kpsq,
            std::optional<double> tau)
        : k_(k), kprime_(kprime), ksq_(ksq), kpsq_(kpsq), tau_(tau) {}

    double k_;
    double kprime_;
    double ksq_;
    double kpsq_;
    std::optional<double> tau_;
};

} // namespace lame
