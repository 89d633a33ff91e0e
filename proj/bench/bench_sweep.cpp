// Copyright 2026 The spin-squeeze Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// Times the serial reference sweep against the OpenMP kernel.
//
//   bench_sweep [beta_steps] [repeats]

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <numbers>
#include <vector>

#include <omp.h>

#include "squeeze/crosscheck.hpp"
#include "squeeze/sweep.hpp"

namespace {

template <class F>
double best_ms(int repeats, F&& f) {
    double best = 1e300;
    for (int r = 0; r < repeats; ++r) {
        const auto t0 = std::chrono::steady_clock::now();
        f();
        const auto t1 = std::chrono::steady_clock::now();
        best = std::min(best, std::chrono::duration<double, std::milli>(t1 - t0).count());
    }
    return best;
}

}  // namespace

int main(int argc, char** argv) {
    using namespace squeeze;
    constexpr double pi = std::numbers::pi;
    const int steps = argc > 1 ? std::atoi(argv[1]) : 201;
    const int repeats = argc > 2 ? std::atoi(argv[2]) : 3;

    SweepSpec spec;
    spec.mu_values = {0.0, pi / 6, pi / 3, pi / 2, 2 * pi / 3, 5 * pi / 6, pi};
    spec.nu_values = {-pi / 2, -pi / 3, 0.0, pi / 4, pi / 2, pi};
    spec.beta_steps = steps;

    std::printf("sweep: %zu rows, best of %d, max threads %d\n", spec.row_count(), repeats,
                omp_get_max_threads());
    std::size_t sink = 0;
    const double serial = best_ms(repeats, [&] { sink += sweep_serial(spec).size(); });
    std::printf("  serial      %9.2f ms\n", serial);
    for (int t = 1; t <= omp_get_max_threads(); t *= 2) {
        const double ms = best_ms(repeats, [&] { sink += sweep_parallel(spec, t).size(); });
        std::printf("  parallel %2d %9.2f ms  (x%.2f)\n", t, ms, serial / ms);
    }

    const auto grid = default_crosscheck_grid();
    const double cc = best_ms(repeats, [&] { sink += run_crosscheck(grid).samples; });
    std::printf("crosscheck: %zu points %9.2f ms\n", grid.size(), cc);
    return sink == 0 ? 1 : 0;
}
