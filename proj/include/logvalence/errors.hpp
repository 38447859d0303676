#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace logvalence {

/// Base class for all numerical failures raised by this library. `kind()`
/// returns a stable machine-readable tag used in CLI failure records.
class Error : public std::runtime_error {
public:
    Error(std::string kind, const std::string& msg)
        : std::runtime_error(msg), kind_(std::move(kind)) {}
    const std::string& kind() const noexcept { return kind_; }

private:
    std::string kind_;
};

/// Iteration budget exhausted (root solver, Newton solve, winding refinement).
class NonConvergence : public Error {
public:
    explicit NonConvergence(const std::string& msg) : Error("non_convergence", msg) {}
};

/// A prescribed critical set admits no consistent polynomial; carries the
/// least-squares residual that failed the acceptance threshold.
class Unrealizable : public Error {
public:
    Unrealizable(double residual, const std::string& msg)
        : Error("unrealizable", msg), residual_(residual) {}
    double residual() const noexcept { return residual_; }

private:
    double residual_;
};

/// Blaschke parameter outside |delta| < (n-1)/(n+1).
class OutOfRegime : public Error {
public:
    explicit OutOfRegime(const std::string& msg) : Error("out_of_regime", msg) {}
};

/// No delta in the schedule certified the perturbed instance.
class Exhausted : public Error {
public:
    explicit Exhausted(const std::string& msg) : Error("exhausted", msg) {}
};

/// A zero with |J_H| below the singular threshold: numerically neutral
/// fixed point, rejected rather than repaired.
class SingularZeroDetected : public Error {
public:
    SingularZeroDetected(std::complex<double> location, const std::string& msg)
        : Error("singular_zero", msg), location_(location) {}
    std::complex<double> location() const noexcept { return location_; }

private:
    std::complex<double> location_;
};

/// A contour passes too close to a zero or pole of H.
class ContourTooClose : public Error {
public:
    explicit ContourTooClose(const std::string& msg) : Error("contour_too_close", msg) {}
};

/// A valence report violated one of its integer identities.
class Inconsistent : public Error {
public:
    explicit Inconsistent(const std::string& msg) : Error("inconsistent", msg) {}
};

/// Orbit iteration neither converged nor detected a cycle.
class Inconclusive : public Error {
public:
    explicit Inconclusive(const std::string& msg) : Error("inconclusive", msg) {}
};

}  // namespace logvalence
