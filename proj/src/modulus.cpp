#include "lame/modulus.hpp"

#include <cmath>

#include "lame/errors.hpp"

namespace lame {

Modulus Modulus::from_k(double k) {
    if (!(k >= 0.0 && k < 1.0))
        throw PreconditionViolated("modulus k must lie in [0, 1)");
    const double kpsq = (1.0 - k) * (1.0 + k);
    return Modulus(k, std::sqrt(kpsq), k * k, kpsq, std::nullopt);
}

Modulus Modulus::from_kprime(double kprime) {
    if (!(kprime > 0.0 && kprime <= 1.0))
        throw PreconditionViolated("complementary modulus k' must lie in (0, 1]");
    const double ksq = (1.0 - kprime) * (1.0 + kprime);
    return Modulus(std::sqrt(ksq), kprime, ksq, kprime * kprime, std::nullopt);
}

Modulus Modulus::from_tau(double tau) {
    if (!(tau > 0.0))
        throw PreconditionViolated("tau must be positive");
    const double em = std::exp(-tau);
    const double k = -std::expm1(-tau);   // 1 - e^{-tau} without cancellation
    const double kpsq = em * (2.0 - em);  // k'^2 = e^{-tau}(2 - e^{-tau})
    return Modulus(k, std::sqrt(kpsq), k * k, kpsq, tau);
}

double Modulus::tau() const noexcept {
    return tau_ ? *tau_ : -std::log1p(-k_);
}

} // namespace lame
