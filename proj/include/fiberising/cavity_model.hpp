// cavity_model.hpp — physical parameters -> steady-state cavity amplitudes and
// the three effective Ising coupling coefficients, with fiber-loss correction
// and regime-validity diagnostics. All rates are in units of g, times in 1/g.

#pragma once

#include <array>
#include <complex>
#include <utility>

#include "fiberising/numerics.hpp"
#include "fiberising/tolerances.hpp"

namespace fiberising {

struct SystemParams {
    double g = 1.0;        // atom-cavity coupling; the unit of every other rate
    double delta = 10.5;   // atom-cavity detuning
    double gamma0 = 10.0;  // cavity leakage rate

    std::array<double, 3> eps{2.0, 2.0, 2.0};  // drive amplitudes eps1..eps3

    // Fiber traversal phases (radians). phi_ij is accumulated from cavity j to
    // cavity i. Defaults split the pi/2 phase sums symmetrically.
    double phi12 = kQuarterPi;
    double phi21 = kQuarterPi;
    double phi23 = kQuarterPi;
    double phi32 = kQuarterPi;

    std::array<double, 3> gamma_local{0.0, 0.0, 0.0};  // local drive magnitudes

    double nu = 0.0;   // fiber dissipation rate per meter
    double l12 = 0.0;  // fiber lengths in meters
    double l23 = 0.0;

    // When set, only the j->i factors f12 and f23 are attenuated; by default
    // both directions of each fiber attenuate.
    bool literal_dissipation = false;

    // Configurable thresholds (see tolerances.hpp for the defaults).
    double pole_guard = tol::kPoleGuard;
    double detuning_threshold = tol::kDetuningMin;
    double adiabatic_threshold = tol::kAdiabaticMin;

    static constexpr double kQuarterPi = 0.78539816339744830961;

    // Throws std::invalid_argument on violated invariants
    // (g > 0, delta != 0, gamma0 >= 0, Gamma_i >= 0, nu >= 0, lengths >= 0).
    void validate() const;
};

// Complex traversal factors f_ij = e^{i phi_ij - nu L}; unit modulus at nu = 0.
struct TraversalFactors {
    Complex f12, f21, f23, f32;
};

struct DerivedModel {
    double chi = 0.0;                   // g^2 / delta
    Complex m;                          // i delta + gamma0
    Complex w2;                         // gamma0^2 (f21 f12 + f32 f23)
    std::array<Complex, 3> alpha{};     // steady-state cavity amplitudes
    double j12 = 0.0, j23 = 0.0, j31 = 0.0;
    double pole_distance = 0.0;         // |M^2 - W^2|, units of g^2
};

struct ValidityReport {
    double large_detuning_ratio = 0.0;  // delta / g
    double adiabatic_ratio = 0.0;       // min|J| / max(Gamma); +inf when no drive
    double pole_distance = 0.0;
    bool regime_ok = false;
};

TraversalFactors effective_phases(const SystemParams& p);

std::pair<Complex, Complex> m_and_w2(const SystemParams& p);

// Full derivation in one pass; throws PoleProximity when
// |M^2 - W^2| <= pole_guard * gamma0^2.
DerivedModel derive_model(const SystemParams& p);

std::array<Complex, 3> steady_states(const SystemParams& p);
std::array<double, 3> coupling_coefficients(const SystemParams& p);

ValidityReport validity_check(const SystemParams& p, const DerivedModel& d);

// Detuning of the loss-shifted resonance line, sqrt(2 e^{-nu(L12+L23)} - 1) * gamma0.
// Returns 0 at the boundary; throws NoOptimalLine when the radicand is negative.
double optimal_line_delta(double gamma0, double nu, double l12, double l23);

}  // namespace fiberising
