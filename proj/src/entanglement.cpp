#include "fiberising/entanglement.hpp"

#include <atomic>
#include <cmath>
#include <stdexcept>
#include <string>

#include "fiberising/parallel.hpp"

namespace fiberising {

namespace {

const ComplexMatrix& spin_flip_kernel() {
    static const ComplexMatrix syy = tensor_product(pauli_y(), pauli_y());
    return syy;
}

// Bounds-check a raw measure value and clamp it into [0, 1] for storage.
double clamp_measure(double v, const char* name) {
    if (v < tol::kClampFloor || v > 1.0 + 1e-9) {
        throw NumericalBreakdown(std::string(name) + " out of bounds: " + std::to_string(v));
    }
    return std::min(1.0, std::max(0.0, v));
}

double tangle_from_rho1(const ComplexMatrix& rho) {
    const double purity = (rho * rho).trace().real();
    const double from_purity = 2.0 * (1.0 - purity);
    const double from_det = 4.0 * (rho(0, 0) * rho(1, 1) - rho(0, 1) * rho(1, 0)).real();
    if (std::abs(from_det - from_purity) >= tol::kTangleForms) {
        throw NumericalBreakdown("tangle_one_rest: determinant and purity forms disagree by " +
                                 std::to_string(from_det - from_purity));
    }
    return from_purity;
}

double residual_tangle(double c1_rest, double ca, double cb) {
    const double raw = c1_rest - ca * ca - cb * cb;
    if (raw < tol::kMonogamyError) {
        throw MonogamyViolation("three_tangle: residual " + std::to_string(raw) +
                                " below the monogamy floor");
    }
    return raw < 0.0 ? 0.0 : raw;
}

EntanglementSample measure_state(double t, const PureState& psi) {
    const ComplexMatrix rho = psi * psi.adjoint();

    EntanglementSample s;
    s.t = t;
    s.norm_error = std::abs(psi.norm() - 1.0);

    const int q12[] = {1, 2}, q23[] = {2, 3}, q13[] = {1, 3}, q1[] = {1};
    const double c12 = concurrence(partial_trace(rho, q12, 3));
    const double c23 = concurrence(partial_trace(rho, q23, 3));
    const double c13 = concurrence(partial_trace(rho, q13, 3));
    const double c1_23 = tangle_from_rho1(partial_trace(rho, q1, 3));
    const double c123 = residual_tangle(c1_23, c12, c13);

    s.c12 = clamp_measure(c12, "c12");
    s.c23 = clamp_measure(c23, "c23");
    s.c13 = clamp_measure(c13, "c13");
    s.c1_23 = clamp_measure(c1_23, "c1_23");
    s.c123 = clamp_measure(c123, "c123");
    return s;
}

}  // namespace

double concurrence(const ComplexMatrix& rho) {
    if (rho.rows() != 4 || rho.cols() != 4) {
        throw std::invalid_argument("concurrence: expected a 4x4 density matrix");
    }
    const ComplexMatrix& syy = spin_flip_kernel();
    const ComplexMatrix rho_tilde = syy * rho.conjugate() * syy;
    const std::array<double, 4> lam = sorted_sqrt_eigvals_rr(rho, rho_tilde);
    return std::max(0.0, lam[0] - lam[1] - lam[2] - lam[3]);
}

double pair_concurrence(const PureState& psi, int a, int b) {
    const int keep[] = {a, b};
    return concurrence(partial_trace(ComplexVector(psi), keep, 3));
}

double tangle_one_rest(const PureState& psi, int which) {
    const int keep[] = {which};
    return tangle_from_rho1(partial_trace(ComplexVector(psi), keep, 3));
}

double three_tangle(const PureState& psi) { return three_tangle_pivot(psi, 1); }

double three_tangle_pivot(const PureState& psi, int pivot) {
    if (pivot < 1 || pivot > 3) {
        throw std::invalid_argument("three_tangle_pivot: pivot must be 1, 2, or 3");
    }
    int other1 = 0, other2 = 0;
    for (int q = 1, k = 0; q <= 3; ++q) {
        if (q != pivot) (k++ == 0 ? other1 : other2) = q;
    }
    const double tangle = tangle_one_rest(psi, pivot);
    const double ca = pair_concurrence(psi, pivot, other1);
    const double cb = pair_concurrence(psi, pivot, other2);
    return residual_tangle(tangle, ca, cb);
}

EntanglementSeries entanglement_series_serial(const Trajectory& traj) {
    if (traj.times.size() != traj.states.size()) {
        throw std::invalid_argument("entanglement_series: times/states length mismatch");
    }
    EntanglementSeries out;
    out.samples.reserve(traj.times.size());
    for (std::size_t i = 0; i < traj.times.size(); ++i) {
        out.samples.push_back(measure_state(traj.times[i], traj.states[i]));
    }
    return out;
}

EntanglementSeries entanglement_series(const Trajectory& traj) {
    if (traj.times.size() != traj.states.size()) {
        throw std::invalid_argument("entanglement_series: times/states length mismatch");
    }
    const auto n = static_cast<std::ptrdiff_t>(traj.times.size());
    EntanglementSeries out;
    out.samples.resize(traj.times.size());

    std::atomic<bool> failed{false};
    std::exception_ptr err;

#pragma omp parallel for schedule(static) num_threads(thread_cap())
    for (std::ptrdiff_t i = 0; i < n; ++i) {
        if (failed.load(std::memory_order_relaxed)) continue;
        try {
            out.samples[static_cast<std::size_t>(i)] =
                measure_state(traj.times[static_cast<std::size_t>(i)],
                              traj.states[static_cast<std::size_t>(i)]);
        } catch (...) {
#pragma omp critical(fiberising_series_err)
            {
                if (!failed.exchange(true)) err = std::current_exception();
            }
        }
    }
    if (failed.load()) std::rethrow_exception(err);
    return out;
}

}  // namespace fiberising
