#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "fiberising/experiments.hpp"
#include "fiberising/parallel.hpp"
#include "test_helpers.hpp"

using namespace fiberising;
using namespace fiberising::testing;

TEST_CASE("linspace endpoints and spacing") {
    const auto axis = linspace(1.0, 30.0, 200);
    REQUIRE(axis.size() == 200);
    CHECK(axis.front() == 1.0);
    CHECK(axis.back() == doctest::Approx(30.0).epsilon(1e-14));
    CHECK_THROWS_AS(linspace(0.0, 1.0, 0), std::invalid_argument);
}

TEST_CASE("sweep_couplings: plumbing and trivial grids") {
    SystemParams tmpl = presets::sweep_template();
    const std::vector<double> deltas{8.0, 12.0};
    const std::vector<double> gammas{5.0, 9.0};

    SweepGrid grid = sweep_couplings(tmpl, deltas, gammas);
    REQUIRE(grid.cells.size() == 4);
    for (const SweepCell& c : grid.cells) CHECK(c.status == CellStatus::ok);

    // all drives zero: every coupling is zero
    tmpl.eps = {0.0, 0.0, 0.0};
    grid = sweep_couplings(tmpl, deltas, gammas);
    for (const SweepCell& c : grid.cells) {
        CHECK(c.j12 == 0.0);
        CHECK(c.j23 == 0.0);
        CHECK(c.j31 == 0.0);
    }

    const std::vector<double> decreasing{2.0, 1.0};
    CHECK_THROWS_AS(sweep_couplings(tmpl, decreasing, gammas), std::invalid_argument);
}

TEST_CASE("sweep_couplings: pole cells on the diagonal, max ok cell beside it") {
    const auto axis = linspace(8.0, 12.0, 21);  // includes delta = gamma0 points
    const SweepGrid grid = sweep_couplings(presets::sweep_template(), axis, axis);

    std::size_t poles = 0;
    double best = -1.0;
    std::size_t bdi = 0, bgi = 0;
    for (std::size_t di = 0; di < axis.size(); ++di) {
        for (std::size_t gi = 0; gi < axis.size(); ++gi) {
            const SweepCell& c = grid.at(di, gi);
            if (c.status == CellStatus::pole) {
                ++poles;
                CHECK(di == gi);  // pi/2 phase sums put the pole on delta = gamma0
            } else if (c.status == CellStatus::ok && std::abs(c.j12) > best) {
                best = std::abs(c.j12);
                bdi = di;
                bgi = gi;
            }
        }
    }
    CHECK(poles == axis.size());
    const double step = axis[1] - axis[0];
    CHECK(std::abs(axis[bdi] - axis[bgi]) <= step * (1.0 + 1e-12));
}

TEST_CASE("sweep_couplings: parallel equals the serial reference bitwise") {
    const auto axis = linspace(2.0, 20.0, 25);
    const SweepGrid par = sweep_couplings(presets::sweep_template(), axis, axis);
    const SweepGrid ser = sweep_couplings_serial(presets::sweep_template(), axis, axis);
    REQUIRE(par.cells.size() == ser.cells.size());
    for (std::size_t i = 0; i < par.cells.size(); ++i) {
        CHECK(par.cells[i].status == ser.cells[i].status);
        CHECK(par.cells[i].j12 == ser.cells[i].j12);
        CHECK(par.cells[i].j23 == ser.cells[i].j23);
        CHECK(par.cells[i].j31 == ser.cells[i].j31);
        CHECK(par.cells[i].pole_distance == ser.cells[i].pole_distance);
    }
}

TEST_CASE("first_peak_time finds the first significant local maximum") {
    EntanglementSeries s;
    const double values[] = {0.0, 0.2, 0.5, 0.3, 0.6, 1.0, 0.4};
    for (int i = 0; i < 7; ++i) {
        EntanglementSample smp;
        smp.t = static_cast<double>(i);
        smp.c12 = values[i];
        s.samples.push_back(smp);
    }
    CHECK(first_peak_time(s, Measure::c12) == doctest::Approx(2.0));      // 0.5 >= half of 1.0
    CHECK(first_peak_time(s, Measure::c12, 0.7) == doctest::Approx(5.0)); // higher floor
    CHECK(peak_value(s, Measure::c12) == doctest::Approx(1.0));
    CHECK(peak_time(s, Measure::c12) == doctest::Approx(5.0));
}

TEST_CASE("preset parameter sets") {
    const HamiltonianSpec a = presets::fig4_case_a();
    CHECK(a.j12 == -2.4);
    CHECK(a.j23 == -2.4);
    CHECK(a.j31 == 1.2);
    CHECK(a.gamma[0] == 0.1);

    const HamiltonianSpec b7 = presets::fig7();
    CHECK(b7.j31 == -1.2);
    CHECK(b7.gamma[1] == 0.2);

    const HamiltonianSpec f6 = presets::fig6();
    CHECK(f6.gamma[0] == 0.3);
    CHECK(f6.gamma[1] == 0.0);
    CHECK(f6.gamma[2] == 0.3);

    const SystemParams tmpl = presets::sweep_template();
    CHECK(tmpl.eps[0] == 2.0);
    CHECK(tmpl.phi12 == doctest::Approx(M_PI / 4.0));
}

TEST_CASE("time-grid convergence: halving dt moves peaks by less than 1e-3") {
    const HamiltonianSpec spec = presets::fig5_case_a();
    const EntanglementSeries coarse =
        entanglement_series(evolve(spec, ground_state(), 50.0, 0.01));
    const EntanglementSeries fine =
        entanglement_series(evolve(spec, ground_state(), 50.0, 0.005));
    for (Measure m : {Measure::c12, Measure::c23, Measure::c13, Measure::c1_23,
                      Measure::c123}) {
        CHECK(std::abs(peak_value(coarse, m) - peak_value(fine, m)) < 1e-3);
    }
}

TEST_CASE("dissipation_study: lossless minimum at delta = gamma0") {
    const double gamma0 = 10.0;
    const auto axis = linspace(0.1 * gamma0, 2.0 * gamma0, 400);
    const DissipationStudy study = dissipation_study(gamma0, 0.0, 1.0, 1.0, axis);
    const double step = axis[1] - axis[0];
    CHECK(std::abs(study.argmin_modulus_delta - gamma0) <= step);
    CHECK(std::abs(study.argmin_pole_distance_delta - gamma0) <= step);
    CHECK(study.optimal_delta == doctest::Approx(gamma0).epsilon(1e-14));
    CHECK(study.deviation <= step);
    REQUIRE(study.records.size() == axis.size());
}

TEST_CASE("dissipation_study: attenuated scan lands on the shifted line") {
    const double gamma0 = 10.0;
    const double l = std::log(4.0 / 3.0) / 2.0;  // nu (l12 + l23) = ln(4/3)
    const auto axis = linspace(0.1 * gamma0, 2.0 * gamma0, 400);
    const DissipationStudy study = dissipation_study(gamma0, 1.0, l, l, axis);
    const double step = axis[1] - axis[0];
    CHECK(study.optimal_delta == doctest::Approx(std::sqrt(0.5) * gamma0).epsilon(1e-14));
    CHECK(study.deviation <= step);
}

TEST_CASE("dissipation_study: loss beyond the boundary has no line") {
    const auto axis = linspace(1.0, 20.0, 10);
    CHECK_THROWS_AS(dissipation_study(10.0, 1.0, 1.0, 1.0, axis), NoOptimalLine);
}

TEST_CASE("FIBERISING_THREADS caps the worker count without changing results") {
    const auto axis = linspace(2.0, 20.0, 9);
    const SweepGrid uncapped = sweep_couplings(presets::sweep_template(), axis, axis);

    setenv("FIBERISING_THREADS", "1", 1);
    CHECK(thread_cap() == 1);
    const SweepGrid capped = sweep_couplings(presets::sweep_template(), axis, axis);

    setenv("FIBERISING_THREADS", "not-a-number", 1);
    CHECK(thread_cap() >= 1);
    unsetenv("FIBERISING_THREADS");

    REQUIRE(capped.cells.size() == uncapped.cells.size());
    for (std::size_t i = 0; i < capped.cells.size(); ++i) {
        CHECK(capped.cells[i].j12 == uncapped.cells[i].j12);
        CHECK(capped.cells[i].pole_distance == uncapped.cells[i].pole_distance);
    }
}
