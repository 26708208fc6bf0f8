#pragma once

#include <stdexcept>

namespace lame {

/// Base class of every failure this library raises on purpose.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An iterative scheme (AGM, Landen descent) failed to contract within its
/// iteration cap. Usually a symptom of an invalid modulus sneaking through.
class NonConvergence : public Error {
public:
    using Error::Error;
};

/// Gamma evaluated at 0, -1, -2, ...
class PoleAtNonpositiveInteger : public Error {
public:
    using Error::Error;
};

/// Hypergeometric series hit its term cap before the tail bound dropped
/// below tolerance (argument too close to 1).
class SeriesDivergence : public Error {
public:
    using Error::Error;
};

class StepLimitExceeded : public Error {
public:
    using Error::Error;
};

class ToleranceUnachievable : public Error {
public:
    using Error::Error;
};

/// h <= nu(nu+1): the oscillatory frequency omega = sqrt(h - nu(nu+1)) is
/// not a positive real, so the approximant and its bound do not apply.
class OmegaUndefined : public Error {
public:
    using Error::Error;
};

class PreconditionViolated : public Error {
public:
    using Error::Error;
};

class InvalidEnergy : public Error {
public:
    using Error::Error;
};

} // namespace lame
