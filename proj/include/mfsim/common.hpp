#pragma once

#include <Eigen/Dense>

#include <stdexcept>
#include <string>

namespace mf {

/// Coordinate vector in a truncated Hilbert space H_M.
using StateVector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;

/// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Invalid argument value (negative time, parameter out of range, ...).
struct DomainError : Error {
    using Error::Error;
};

/// Dimension mismatch between operands.
struct ShapeError : Error {
    using Error::Error;
};

/// A time that must sit on a grid (or on the shift lattice) does not.
struct AlignmentError : Error {
    using Error::Error;
};

/// Translation would push state outside the dilation window.
struct CapacityError : Error {
    CapacityError(const std::string& what, int minimal_padding)
        : Error(what), minimal_padding(minimal_padding) {}
    int minimal_padding = 0;
};

/// Work limit exceeded (e.g. quadrature node count).
struct ResourceError : Error {
    using Error::Error;
};

/// Non-finite state or norm beyond the blow-up threshold during a solve.
struct BlowupError : Error {
    BlowupError(const std::string& what, double time) : Error(what), time(time) {}
    double time = 0.0;
};

/// Truncation level escalation exceeded k_max under declared linear growth.
struct NonExplosionViolatedError : Error {
    NonExplosionViolatedError(const std::string& what, int k_reached)
        : Error(what), k_reached(k_reached) {}
    int k_reached = 0;
};

/// Configuration rejected at validation time; names the offending field.
struct ValidationError : Error {
    ValidationError(const std::string& field, const std::string& what)
        : Error(what), field(field) {}
    std::string field;
};

inline void require_dim(const StateVector& v, Eigen::Index dim, const char* where) {
    if (v.size() != dim)
        throw ShapeError(std::string(where) + ": expected dimension " + std::to_string(dim) +
                         ", got " + std::to_string(v.size()));
}

}  // namespace mf
