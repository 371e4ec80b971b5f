// tolerances.hpp — named numerical tolerances and regime thresholds with their defaults

#pragma once

namespace fiberising::tol {

// Hermiticity: max|A - A^dag| relative to the largest entry magnitude.
inline constexpr double kHermiticity = 1e-12;

// Propagator unitarity: max|U^dag U - I|.
inline constexpr double kUnitarity = 1e-10;

// Reduced density matrices: |trace - 1|.
inline constexpr double kTrace = 1e-12;

// Spectrum of rho * rho_tilde: eigenvalues below kEigRealFloor or with
// |imag| above kEigImag indicate a numerics bug, not float noise.
inline constexpr double kEigRealFloor = -1e-8;
inline constexpr double kEigImag = 1e-8;

// Pole guard: steady states require |M^2 - W^2| > kPoleGuard * gamma0^2.
inline constexpr double kPoleGuard = 1e-6;

// Regime thresholds: delta/g and min|J|/max(Gamma).
inline constexpr double kDetuningMin = 5.0;
inline constexpr double kAdiabaticMin = 5.0;

// Entanglement measures: values in [kClampFloor, 0) clamp to zero;
// a three-tangle below kMonogamyError is an error.
inline constexpr double kClampFloor = -1e-9;
inline constexpr double kMonogamyError = -1e-6;

// State norm drift allowed along a trajectory.
inline constexpr double kNorm = 1e-9;

// Agreement between the determinant and purity forms of the one-vs-rest tangle.
inline constexpr double kTangleForms = 1e-10;

// RK4 stepping guard: dt * ||H||_inf must not exceed this.
inline constexpr double kRk4Guard = 0.1;

}  // namespace fiberising::tol
