#pragma once
#include <stdexcept>
#include <string>

namespace geolab {

/// Base class for all solver and validation failures.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Input outside the mathematical domain of an operation (e.g. f(x) <= 0).
class DomainError : public Error {
public:
    explicit DomainError(const std::string& what) : Error(what) {}
};

/// Structurally invalid argument (empty sample list, mismatched grids, ...).
class ArgumentError : public Error {
public:
    explicit ArgumentError(const std::string& what) : Error(what) {}
};

/// Coordinate change failed (non-monotone coordinate map).
class GaugeError : public Error {
public:
    explicit GaugeError(const std::string& what) : Error(what) {}
};

/// Iterative solver failed to bracket or converge.
class ConvergenceError : public Error {
public:
    explicit ConvergenceError(const std::string& what) : Error(what) {}
};

/// Operation requires a point away from the cut locus.
class CutLocusError : public Error {
public:
    explicit CutLocusError(const std::string& what) : Error(what) {}
};

/// Quadrature failure (denominator below floor, node starvation).
class IntegrationError : public Error {
public:
    explicit IntegrationError(const std::string& what) : Error(what) {}
};

/// A map that must be a diffeomorphism lost monotonicity / invertibility.
class DiffeomorphismError : public Error {
public:
    explicit DiffeomorphismError(const std::string& what) : Error(what) {}
};

} // namespace geolab
