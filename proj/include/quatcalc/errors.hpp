#pragma once

#include <stdexcept>
#include <string>

namespace quatcalc {

/// Raised when an operation needs the polar frame of a point whose imaginary
/// part is numerically zero (r below the pure-real threshold).
class pure_real_error : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Pole or branch-cut violation when evaluating a function through its
/// complex lift.
class eval_domain_error : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// su(2) analogue of pure_real_error: the element is a multiple of the
/// identity, so no direction splits off.
class pure_scalar_error : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// The claimed antiderivative does not differentiate back to the integrand.
class antiderivative_mismatch : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed function-spec string, path JSON, or quaternion array.
class parse_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Unknown verification suite name.
class unknown_suite_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace quatcalc
