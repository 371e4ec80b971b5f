#include "fiberising/cavity_model.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace fiberising {

void SystemParams::validate() const {
    if (!(g > 0.0)) throw std::invalid_argument("SystemParams: g must be > 0");
    if (!(delta != 0.0) || !std::isfinite(delta)) {
        throw std::invalid_argument("SystemParams: delta must be nonzero (chi = g^2/delta)");
    }
    if (!(gamma0 >= 0.0)) throw std::invalid_argument("SystemParams: gamma0 must be >= 0");
    for (double e : eps) {
        if (!std::isfinite(e)) throw std::invalid_argument("SystemParams: eps must be finite");
    }
    for (double gl : gamma_local) {
        if (!(gl >= 0.0)) throw std::invalid_argument("SystemParams: gamma_local must be >= 0");
    }
    if (!(nu >= 0.0)) throw std::invalid_argument("SystemParams: nu must be >= 0");
    if (!(l12 >= 0.0) || !(l23 >= 0.0)) {
        throw std::invalid_argument("SystemParams: fiber lengths must be >= 0");
    }
}

TraversalFactors effective_phases(const SystemParams& p) {
    p.validate();
    const double a12 = p.nu * p.l12;
    const double a23 = p.nu * p.l23;
    TraversalFactors f;
    f.f12 = std::exp(Complex(-a12, p.phi12));
    f.f23 = std::exp(Complex(-a23, p.phi23));
    // Each fiber attenuates both directions unless the literal one-way
    // reading is requested.
    f.f21 = std::exp(Complex(p.literal_dissipation ? 0.0 : -a12, p.phi21));
    f.f32 = std::exp(Complex(p.literal_dissipation ? 0.0 : -a23, p.phi32));
    return f;
}

std::pair<Complex, Complex> m_and_w2(const SystemParams& p) {
    const TraversalFactors f = effective_phases(p);
    const Complex m(p.gamma0, p.delta);
    const Complex w2 = p.gamma0 * p.gamma0 * (f.f21 * f.f12 + f.f32 * f.f23);
    return {m, w2};
}

DerivedModel derive_model(const SystemParams& p) {
    const TraversalFactors f = effective_phases(p);

    DerivedModel d;
    d.chi = p.g * p.g / p.delta;
    d.m = Complex(p.gamma0, p.delta);
    d.w2 = p.gamma0 * p.gamma0 * (f.f21 * f.f12 + f.f32 * f.f23);

    const Complex det = d.m * d.m - d.w2;
    d.pole_distance = std::abs(det);
    if (d.pole_distance <= p.pole_guard * p.gamma0 * p.gamma0) {
        throw PoleProximity("derive_model: |M^2 - W^2| = " + std::to_string(d.pole_distance) +
                            " within the pole guard; adiabatic elimination diverges");
    }

    const double e1 = p.eps[0], e2 = p.eps[1], e3 = p.eps[2];
    const double g0 = p.gamma0;
    const Complex m = d.m;

    d.alpha[0] = (e1 * m * m + e2 * m * g0 * f.f12 +
                  g0 * g0 * (e3 * f.f12 * f.f23 - e1 * f.f23 * f.f32)) /
                 (m * det);
    d.alpha[1] = (e2 * m + g0 * (e1 * f.f21 + e3 * f.f23)) / det;
    d.alpha[2] = (e3 * m * m + e2 * m * g0 * f.f32 +
                  g0 * g0 * (e1 * f.f32 * f.f21 - e3 * f.f21 * f.f12)) /
                 (m * det);

    const double pref = 2.0 * g0 * d.chi * d.chi;
    d.j12 = pref * std::imag(d.alpha[0] * std::conj(d.alpha[1]) * f.f21 / det);
    d.j23 = pref * std::imag(d.alpha[2] * std::conj(d.alpha[1]) * f.f32 / det);
    d.j31 = pref * std::imag(g0 * d.alpha[2] * std::conj(d.alpha[0]) * f.f23 * f.f12 / (m * det));
    return d;
}

std::array<Complex, 3> steady_states(const SystemParams& p) {
    return derive_model(p).alpha;
}

std::array<double, 3> coupling_coefficients(const SystemParams& p) {
    const DerivedModel d = derive_model(p);
    return {d.j12, d.j23, d.j31};
}

ValidityReport validity_check(const SystemParams& p, const DerivedModel& d) {
    ValidityReport r;
    r.large_detuning_ratio = p.delta / p.g;
    r.pole_distance = d.pole_distance;

    const double max_gamma =
        std::max({p.gamma_local[0], p.gamma_local[1], p.gamma_local[2]});
    const double min_j = std::min({std::abs(d.j12), std::abs(d.j23), std::abs(d.j31)});
    r.adiabatic_ratio = (max_gamma > 0.0) ? min_j / max_gamma
                                          : std::numeric_limits<double>::infinity();

    r.regime_ok = r.large_detuning_ratio >= p.detuning_threshold &&
                  r.adiabatic_ratio >= p.adiabatic_threshold &&
                  d.pole_distance >= p.pole_guard * p.gamma0 * p.gamma0;
    return r;
}

double optimal_line_delta(double gamma0, double nu, double l12, double l23) {
    if (!(gamma0 >= 0.0) || !(nu >= 0.0) || !(l12 >= 0.0) || !(l23 >= 0.0)) {
        throw std::invalid_argument("optimal_line_delta: rates and lengths must be >= 0");
    }
    const double radicand = 2.0 * std::exp(-nu * (l12 + l23)) - 1.0;
    // Boundary (radicand == 0 up to float noise) returns 0.
    if (radicand <= -1e-12) {
        throw NoOptimalLine("optimal_line_delta: loss too large, 2 e^{-nu L} - 1 = " +
                            std::to_string(radicand));
    }
    return std::sqrt(std::max(0.0, radicand)) * gamma0;
}

}  // namespace fiberising
