// spin_dynamics.hpp — the effective three-spin Hamiltonian and exact pure-state
// propagation on the 8-dimensional Hilbert space.

#pragma once

#include <array>
#include <vector>

#include "fiberising/numerics.hpp"

namespace fiberising {

// Couplings and local drive magnitudes, units of g.
struct HamiltonianSpec {
    double j12 = 0.0;
    double j23 = 0.0;
    double j31 = 0.0;
    std::array<double, 3> gamma{0.0, 0.0, 0.0};

    void validate() const;  // all six fields finite
};

// Amplitudes in the atom1 (x) atom2 (x) atom3 basis, |e> first.
using PureState = Eigen::Matrix<Complex, 8, 1>;

struct Trajectory {
    std::vector<double> times;  // strictly increasing, units 1/g
    std::vector<PureState> states;
};

// H = J12 s1z s2z + J23 s2z s3z + J31 s3z s1z + sum_i Gamma_i (s_i^+ + s_i^-).
// Real symmetric 8x8: the Ising terms fill the diagonal, the drives the
// off-diagonal single-flip entries.
ComplexMatrix build_hamiltonian(const HamiltonianSpec& spec);

// |ggg>, amplitude 1 at the all-ground basis index.
PureState ground_state();

// States at t = 0, dt, 2dt, ..., t_max via one spectral decomposition of H
// reused across the grid. No renormalization: norm drift is an error signal.
Trajectory evolve(const HamiltonianSpec& spec, const PureState& psi0, double t_max,
                  double dt);

// Classical 4th-order stepping of dpsi/dt = -i H psi, kept as an independent
// cross-check of the spectral propagator. Per-step renormalization is OFF.
// Throws StepTooLarge unless dt * ||H||_inf <= tol::kRk4Guard.
Trajectory evolve_rk4(const HamiltonianSpec& spec, const PureState& psi0, double t_max,
                      double dt);

}  // namespace fiberising
