#pragma once

#include <stdexcept>
#include <string>

namespace qrotor {

/// Argument outside the domain of an operation (cutoff, index, width, scale).
class DomainError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Two objects that must share a Hilbert-space dimension do not.
class DimensionMismatch : public std::invalid_argument {
public:
    DimensionMismatch(long expected, long actual)
        : std::invalid_argument("dimension mismatch: expected D=" + std::to_string(expected) +
                                ", got D=" + std::to_string(actual)) {}
};

/// Requested configuration has no canonical meaning (e.g. even dimension).
class Unsupported : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A flux / time-quantum combination that leaves the Wigner lattice ill defined.
class FluxNotAdmissible : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Internal numerical consistency check failed (e.g. Wigner reality residue).
class ConsistencyError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace qrotor
