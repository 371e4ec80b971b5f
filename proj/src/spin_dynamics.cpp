#include "fiberising/spin_dynamics.hpp"

#include <cmath>
#include <stdexcept>

namespace fiberising {

void HamiltonianSpec::validate() const {
    const double fields[] = {j12, j23, j31, gamma[0], gamma[1], gamma[2]};
    for (double v : fields) {
        if (!std::isfinite(v)) {
            throw std::invalid_argument("HamiltonianSpec: all fields must be finite");
        }
    }
}

ComplexMatrix build_hamiltonian(const HamiltonianSpec& spec) {
    spec.validate();
    const ComplexMatrix sz = pauli_z();
    const ComplexMatrix sx = pauli_x();  // sigma^+ + sigma^-
    const ComplexMatrix id = identity(2);

    ComplexMatrix h = spec.j12 * tensor_product(tensor_product(sz, sz), id);
    h += spec.j23 * tensor_product(tensor_product(id, sz), sz);
    h += spec.j31 * tensor_product(tensor_product(sz, id), sz);
    h += spec.gamma[0] * tensor_product(tensor_product(sx, id), id);
    h += spec.gamma[1] * tensor_product(tensor_product(id, sx), id);
    h += spec.gamma[2] * tensor_product(tensor_product(id, id), sx);
    return h;
}

PureState ground_state() {
    PureState psi = PureState::Zero();
    psi(7) = 1.0;  // |ggg>
    return psi;
}

namespace {

void check_grid(double t_max, double dt) {
    if (!(t_max > 0.0)) throw std::invalid_argument("evolve: t_max must be > 0");
    if (!(dt > 0.0) || !(dt <= t_max)) {
        throw std::invalid_argument("evolve: need 0 < dt <= t_max");
    }
}

}  // namespace

Trajectory evolve(const HamiltonianSpec& spec, const PureState& psi0, double t_max,
                  double dt) {
    check_grid(t_max, dt);
    const HermitianEigen eig = eigh(build_hamiltonian(spec));
    const Eigen::Matrix<Complex, 8, 1> c0 = eig.vectors.adjoint() * psi0;

    const auto steps = static_cast<std::size_t>(std::llround(t_max / dt));
    Trajectory traj;
    traj.times.reserve(steps + 1);
    traj.states.reserve(steps + 1);
    for (std::size_t k = 0; k <= steps; ++k) {
        const double t = static_cast<double>(k) * dt;
        Eigen::Matrix<Complex, 8, 1> c = c0;
        for (Eigen::Index j = 0; j < 8; ++j) {
            c(j) *= std::exp(Complex(0.0, -eig.values(j) * t));
        }
        traj.times.push_back(t);
        traj.states.emplace_back(eig.vectors * c);
    }
    return traj;
}

Trajectory evolve_rk4(const HamiltonianSpec& spec, const PureState& psi0, double t_max,
                      double dt) {
    check_grid(t_max, dt);
    const ComplexMatrix h = build_hamiltonian(spec);

    // Infinity norm bounds the spectral radius without touching the eigensolver.
    double h_norm = 0.0;
    for (Eigen::Index i = 0; i < h.rows(); ++i) {
        h_norm = std::max(h_norm, h.row(i).cwiseAbs().sum());
    }
    if (dt * h_norm > tol::kRk4Guard) {
        throw StepTooLarge("evolve_rk4: dt * ||H|| = " + std::to_string(dt * h_norm) +
                           " exceeds the 4th-order accuracy guard");
    }

    const Complex minus_i(0.0, -1.0);
    auto rhs = [&](const PureState& psi) -> PureState { return minus_i * (h * psi); };

    const auto steps = static_cast<std::size_t>(std::llround(t_max / dt));
    Trajectory traj;
    traj.times.reserve(steps + 1);
    traj.states.reserve(steps + 1);
    traj.times.push_back(0.0);
    traj.states.push_back(psi0);

    PureState psi = psi0;
    for (std::size_t k = 1; k <= steps; ++k) {
        const PureState k1 = rhs(psi);
        const PureState k2 = rhs(psi + 0.5 * dt * k1);
        const PureState k3 = rhs(psi + 0.5 * dt * k2);
        const PureState k4 = rhs(psi + dt * k3);
        psi += (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
        traj.times.push_back(static_cast<double>(k) * dt);
        traj.states.push_back(psi);
    }
    return traj;
}

}  // namespace fiberising
