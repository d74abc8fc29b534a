#pragma once

#include <stdexcept>
#include <string>

namespace modwave {

/// A denominator of an expansion coefficient vanishes (second-harmonic
/// resonance or c(kappa)=1). The message names the vanishing quantity.
struct SingularCoefficientError : std::runtime_error {
    explicit SingularCoefficientError(const std::string& denominator)
        : std::runtime_error("singular expansion coefficient: " + denominator +
                             " vanishes") {}
};

struct UnsupportedModelError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct UnsupportedParameterError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// eta <= -1 somewhere on the evaluation grid; (1+eta)^{3/2} undefined.
struct NonlinearityDomainError : std::domain_error {
    using std::domain_error::domain_error;
};

struct ConvergenceError : std::runtime_error {
    double residual_norm;
    explicit ConvergenceError(double rnorm)
        : std::runtime_error("Newton iteration failed to converge, last residual " +
                             std::to_string(rnorm)),
          residual_norm(rnorm) {}
};

/// Root continuation lost the branch; last_T is the last tension value at
/// which the root was still bracketed.
struct BranchLostError : std::runtime_error {
    double last_T;
    explicit BranchLostError(double T)
        : std::runtime_error("critical wave number branch lost beyond T=" +
                             std::to_string(T)),
          last_T(T) {}
};

/// The characteristic polynomial coefficients fail the expected
/// real/imaginary pattern beyond tolerance.
struct StructureViolationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace modwave
