// bench.cpp — timings of the OpenMP kernels against their serial references:
// the coupling-map sweep and the per-sample entanglement series.

#include <chrono>
#include <cstdio>

#include "fiberising/experiments.hpp"
#include "fiberising/parallel.hpp"

using namespace fiberising;

namespace {

template <typename F>
double time_ms(F&& f) {
    const auto t0 = std::chrono::steady_clock::now();
    f();
    const auto t1 = std::chrono::steady_clock::now();
    return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

}  // namespace

int main() {
    std::printf("workers: %d\n\n", thread_cap());

    {
        const auto axis = linspace(1.0, 30.0, presets::kSweepAxisCount);
        const SystemParams tmpl = presets::sweep_template();
        SweepGrid serial_grid, parallel_grid;
        const double ts = time_ms([&] { serial_grid = sweep_couplings_serial(tmpl, axis, axis); });
        const double tp = time_ms([&] { parallel_grid = sweep_couplings(tmpl, axis, axis); });

        bool identical = serial_grid.cells.size() == parallel_grid.cells.size();
        for (std::size_t i = 0; identical && i < serial_grid.cells.size(); ++i) {
            identical = serial_grid.cells[i].j12 == parallel_grid.cells[i].j12 &&
                        serial_grid.cells[i].j23 == parallel_grid.cells[i].j23 &&
                        serial_grid.cells[i].j31 == parallel_grid.cells[i].j31 &&
                        serial_grid.cells[i].pole_distance == parallel_grid.cells[i].pole_distance;
        }
        std::printf("sweep %dx%d cells:   serial %8.2f ms   parallel %8.2f ms   speedup %.2fx   bit-identical: %s\n",
                    presets::kSweepAxisCount, presets::kSweepAxisCount, ts, tp, ts / tp,
                    identical ? "yes" : "NO");
    }

    {
        const Trajectory traj =
            evolve(presets::fig7(), ground_state(), presets::kTMaxFig7, presets::kDt);
        EntanglementSeries serial_series, parallel_series;
        const double ts = time_ms([&] { serial_series = entanglement_series_serial(traj); });
        const double tp = time_ms([&] { parallel_series = entanglement_series(traj); });

        bool identical = serial_series.samples.size() == parallel_series.samples.size();
        for (std::size_t i = 0; identical && i < serial_series.samples.size(); ++i) {
            const auto& a = serial_series.samples[i];
            const auto& b = parallel_series.samples[i];
            identical = a.c12 == b.c12 && a.c23 == b.c23 && a.c13 == b.c13 &&
                        a.c1_23 == b.c1_23 && a.c123 == b.c123;
        }
        std::printf("series %zu samples: serial %8.2f ms   parallel %8.2f ms   speedup %.2fx   bit-identical: %s\n",
                    traj.times.size(), ts, tp, ts / tp, identical ? "yes" : "NO");
    }
    return 0;
}
