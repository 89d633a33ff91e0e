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
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "squeeze/closed_form.hpp"
#include "squeeze/frame.hpp"
#include "squeeze/oracle.hpp"

namespace squeeze {

enum class OutputFormat { csv, json };

/// Sweeps run the eigen route only; the grid cross-check is exercised by tests.
inline constexpr MinimizerConfig kSweepMinimizer{.cross_validate = false};

/// Rows are generated for every (mu, nu, beta) in lexicographic index order.
struct SweepSpec {
    std::vector<double> mu_values;
    std::vector<double> nu_values{0.0};
    double beta_min = 0.0;
    double beta_max = 1.0;
    int beta_steps = 101;
    Convention convention = Convention::standard;
    OutputFormat format = OutputFormat::csv;
    MinimizerConfig minimizer = kSweepMinimizer;

    /// Throws std::invalid_argument when the grid is empty or out of range.
    void validate() const;
    [[nodiscard]] std::size_t row_count() const;
    [[nodiscard]] double beta_at(int k) const;
};

/// One evaluated grid point. Optional columns are empty where the frame
/// (and so the quantity) is undefined.
struct SweepRow {
    double beta = 0.0;
    double mu = 0.0;
    double nu = 0.0;
    MeanSpin closed;  ///< printed closed forms
    MeanSpin oracle;
    double r_eq9 = 0.0;   ///< Euclidean norm of the closed-form mean spin
    double r_eq10 = 0.0;  ///< closed-form length expression
    std::optional<double> theta;
    std::optional<double> phi;
    std::optional<FrameMoments> frame_moments;  ///< oracle, on the oracle frame
    double lambda_min = 0.0;
    std::optional<double> chi_min;
    double xi2_std = 0.0;
    double xi2_literal = 0.0;
    double concurrence = 0.0;
    FrameStatus frame_status = FrameStatus::fully_degenerate;
    MinimizationMethod method = MinimizationMethod::transverse_eigen;
    /// xi^2 (standard factor) from the printed frame-moment expressions on the
    /// closed-form frame. Not part of the CSV schema.
    std::optional<double> xi2_closed_form;

    [[nodiscard]] double xi2(Convention c) const {
        return c == Convention::standard ? xi2_std : xi2_literal;
    }
};

[[nodiscard]] SweepRow evaluate_row(const SqueezeParams& params,
                                   const MinimizerConfig& config = kSweepMinimizer);

/// Serial reference kernel.
[[nodiscard]] std::vector<SweepRow> sweep_serial(const SweepSpec& spec);

/// OpenMP kernel; threads <= 0 uses the runtime default. Same rows, same
/// order as sweep_serial.
[[nodiscard]] std::vector<SweepRow> sweep_parallel(const SweepSpec& spec, int threads = 0);

[[nodiscard]] const std::vector<std::string_view>& csv_columns();

void write_csv(std::ostream& out, const std::vector<SweepRow>& rows);
void write_json(std::ostream& out, const std::vector<SweepRow>& rows);
void write_rows(std::ostream& out, const std::vector<SweepRow>& rows, OutputFormat format);

/// 17 significant digits, locale independent.
[[nodiscard]] std::string format_double(double value);

}  // namespace squeeze
