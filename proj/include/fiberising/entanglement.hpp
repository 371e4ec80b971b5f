// entanglement.hpp — pairwise concurrence, one-vs-rest tangle, and the residual
// three-atom entanglement of pure three-qubit states.

#pragma once

#include <vector>

#include "fiberising/numerics.hpp"
#include "fiberising/spin_dynamics.hpp"

namespace fiberising {

struct EntanglementSample {
    double t = 0.0;
    double c12 = 0.0, c23 = 0.0, c13 = 0.0;  // pairwise concurrences
    double c1_23 = 0.0;                      // tangle of atom 1 vs the rest
    double c123 = 0.0;                       // residual three-atom entanglement
    double norm_error = 0.0;                 // | ||psi|| - 1 |
};

struct EntanglementSeries {
    std::vector<EntanglementSample> samples;  // times strictly increasing
};

// Wootters concurrence of a two-qubit density matrix:
// C = max{0, l1 - l2 - l3 - l4} from sorted_sqrt_eigvals_rr.
double concurrence(const ComplexMatrix& rho);

// Concurrence of the reduced state of atoms a and b (labels in {1,2,3}).
double pair_concurrence(const PureState& psi, int a, int b);

// 2 (1 - Tr rho_which^2); also cross-checked against 4 Det rho_which, the two
// forms agree for a unit-trace 2x2 matrix.
double tangle_one_rest(const PureState& psi, int which);

// C_123 = C_1(23) - C_12^2 - C_13^2, clamped at the float-noise floor.
// Throws MonogamyViolation below tol::kMonogamyError.
double three_tangle(const PureState& psi);

// Same combination pivoting on another atom; diagnostic only, the atom-1
// pivot is the canonical reported value.
double three_tangle_pivot(const PureState& psi, int pivot);

// All five measures per trajectory state. The parallel version distributes
// samples over OpenMP threads; the serial one is the reference kept for tests.
EntanglementSeries entanglement_series(const Trajectory& traj);
EntanglementSeries entanglement_series_serial(const Trajectory& traj);

}  // namespace fiberising
