#ifndef LANDAU_ERRORS_HPP
#define LANDAU_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace landau {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Input outside the operation's documented domain (bad parameter, |z| too
/// large, non-finite component).
class DomainError : public Error {
public:
    explicit DomainError(const std::string& msg) : Error(msg) {}
};

/// Evaluation too close to a pole of a closed-form function.
class PoleProximityError : public Error {
public:
    explicit PoleProximityError(const std::string& msg) : Error(msg) {}
};

/// Principal logarithm requested on the closed negative real axis.
class BranchCutError : public Error {
public:
    explicit BranchCutError(const std::string& msg) : Error(msg) {}
};

/// Root bracketing failed; cannot occur for valid parameters but is
/// reported rather than assumed away.
class BracketError : public Error {
public:
    explicit BracketError(const std::string& msg) : Error(msg) {}
};

/// Coefficient extraction requested in an ill-conditioned regime.
class IllConditionedError : public Error {
public:
    explicit IllConditionedError(const std::string& msg) : Error(msg) {}
};

/// A series that must satisfy b1 = 1 does not.
class NormalizationError : public Error {
public:
    explicit NormalizationError(const std::string& msg) : Error(msg) {}
};

/// A sampled monotonicity/uniqueness assumption failed; reported, never
/// silently ignored.
class MonotonicityDefect : public Error {
public:
    explicit MonotonicityDefect(const std::string& msg) : Error(msg) {}
};

/// Grid size exceeds the configured cap for pairwise checks.
class GridCapError : public Error {
public:
    explicit GridCapError(const std::string& msg) : Error(msg) {}
};

/// A map value vanished where the check needs to divide by it.
class VanishingValueError : public Error {
public:
    explicit VanishingValueError(const std::string& msg) : Error(msg) {}
};

} // namespace landau

#endif
