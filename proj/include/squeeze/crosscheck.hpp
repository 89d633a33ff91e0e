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
#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "squeeze/spin_core.hpp"

namespace squeeze {

/// Which sign of nu in the printed closed forms reproduces the state.
enum class NuSignHypothesis { as_printed, nu_negated, inconclusive };
/// Whether the printed minimal-uncertainty expression needs the 1/2.
enum class Eq12FactorHypothesis { literal, half_corrected, inconclusive };

[[nodiscard]] std::string_view to_string(NuSignHypothesis h);
[[nodiscard]] std::string_view to_string(Eq12FactorHypothesis h);

struct CrosscheckFailure {
    std::size_t index = 0;  ///< grid index
    double beta = 0.0;
    double mu = 0.0;
    double nu = 0.0;
    std::string quantity;
    double closed = 0.0;
    double oracle = 0.0;
    double diff = 0.0;
};

using DiffTable = std::map<std::string, double>;

struct CrosscheckReport {
    std::size_t samples = 0;
    double tol = 0.0;
    NuSignHypothesis nu_sign_hypothesis = NuSignHypothesis::inconclusive;
    Eq12FactorHypothesis eq12_factor_hypothesis = Eq12FactorHypothesis::inconclusive;
    /// Under the selected nu hypothesis (as-printed when inconclusive).
    DiffTable max_abs_diff_per_quantity;
    DiffTable max_abs_diff_as_printed;
    DiffTable max_abs_diff_nu_negated;
    /// Squeezing formula vs oracle eigen minimum, per factor convention.
    double max_abs_diff_literal = 0.0;
    double max_abs_diff_half_corrected = 0.0;
    /// Failures under the selected nu hypothesis, ordered by grid index.
    std::vector<CrosscheckFailure> failures;

    /// Quantities the phase convention cannot affect, all within tol as printed.
    bool convention_independent_pass = false;
    std::vector<std::string> convention_independent_failures;
};

/// Quantities compared on every grid point, in report order.
[[nodiscard]] const std::vector<std::string>& crosscheck_quantities();
/// Subset that must agree under the as-printed convention.
[[nodiscard]] const std::vector<std::string>& convention_independent_quantities();

/// beta in {0, 0.05, ..., 1} x mu in {0, pi/6, ..., pi} x nu in {-pi/2, -pi/3, 0, pi/4, pi/2, pi}.
[[nodiscard]] std::vector<SqueezeParams> default_crosscheck_grid();

/// Compares closed forms against the oracle on every grid point. Grid points
/// are evaluated in parallel; the report is reduced in grid order. Throws
/// std::invalid_argument on an empty grid or tol <= 0.
[[nodiscard]] CrosscheckReport run_crosscheck(const std::vector<SqueezeParams>& grid,
                                              double tol = 1e-10, int threads = 0);

/// Pretty-printed JSON; failures are listed in grid order.
void write_report_json(std::ostream& out, const CrosscheckReport& report);

}  // namespace squeeze
