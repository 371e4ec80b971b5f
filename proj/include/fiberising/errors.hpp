// errors.hpp — error types thrown by the model, numerics, and I/O layers

#pragma once

#include <stdexcept>
#include <string>

namespace fiberising {

// Matrix handed to a Hermitian-only routine fails the Hermiticity tolerance.
struct NonHermitianInput : std::runtime_error {
    explicit NonHermitianInput(const std::string& what) : std::runtime_error(what) {}
};

// Partial trace asked to keep an empty or full qubit subset.
struct BadSubset : std::invalid_argument {
    explicit BadSubset(const std::string& what) : std::invalid_argument(what) {}
};

// Eigenvalues (or measure values) outside the tolerated numerical range.
struct NumericalBreakdown : std::runtime_error {
    explicit NumericalBreakdown(const std::string& what) : std::runtime_error(what) {}
};

// |M^2 - W^2| too small: the adiabatic elimination diverges at this point.
struct PoleProximity : std::runtime_error {
    explicit PoleProximity(const std::string& what) : std::runtime_error(what) {}
};

// Fiber loss too large for the shifted resonance line to exist.
struct NoOptimalLine : std::invalid_argument {
    explicit NoOptimalLine(const std::string& what) : std::invalid_argument(what) {}
};

// RK4 step too coarse for the spectral scale of the Hamiltonian.
struct StepTooLarge : std::invalid_argument {
    explicit StepTooLarge(const std::string& what) : std::invalid_argument(what) {}
};

// Residual three-atom entanglement more negative than float noise allows.
struct MonogamyViolation : std::runtime_error {
    explicit MonogamyViolation(const std::string& what) : std::runtime_error(what) {}
};

// Output file could not be written.
struct IoError : std::runtime_error {
    explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace fiberising
