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

#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "squeeze/sweep.hpp"

namespace squeeze {

// Curve-shape predicates over a sampled y(beta).

/// y[k+1] <= y[k] + tol for all k.
[[nodiscard]] bool is_nonincreasing(std::span<const double> ys, double tol);

struct UnimodalCheck {
    bool ok = false;
    std::size_t argmax = 0;
    std::string detail;
};

/// Rises (by more than tol) to an interior maximum, then falls; monotone on
/// each side within tol.
[[nodiscard]] UnimodalCheck check_unimodal(std::span<const double> ys, double tol);

struct Interval {
    double lo = 0.0;
    double hi = 0.0;
};

/// Maximal runs of consecutive samples with y < threshold.
[[nodiscard]] std::vector<Interval> runs_below(std::span<const double> xs,
                                               std::span<const double> ys, double threshold);

/// Sum of (hi - lo) over the runs.
[[nodiscard]] double total_width(const std::vector<Interval>& runs);

struct ShapeCheck {
    std::string slice;  ///< e.g. "mu=pi/2 nu=-pi/3 convention=standard"
    std::string claim;
    bool passed = false;
    bool asserted = true;  ///< false for informational checks
    std::string detail;
};

struct LabelledValue {
    std::string label;
    double value;
};

struct FigureSlice {
    std::string label;  ///< "0", "pi/3", ...
    double value;
};

enum class FigureName { fig1, fig2 };

struct FigureReport {
    FigureName name = FigureName::fig1;
    std::vector<ShapeCheck> checks;
    /// Squeezing-interval widths for fig2, keyed "mu=<label> convention=<c>".
    std::vector<LabelledValue> squeezing_widths;
    /// Largest |xi2_std - (1 - C)| per mu slice (fig2 only, diagnostic).
    std::vector<LabelledValue> concurrence_gap;

    [[nodiscard]] bool passed() const;
    [[nodiscard]] std::vector<std::string> violations() const;
};

/// Grid used for each figure.
[[nodiscard]] std::vector<FigureSlice> figure_mu_slices(FigureName name);
[[nodiscard]] SweepSpec figure_spec(FigureName name);

/// Runs the shape assertions on rows produced by figure_spec(name).
[[nodiscard]] FigureReport analyse_figure(FigureName name, const std::vector<SweepRow>& rows);

/// Sweeps, writes one CSV per mu slice plus a summary (and for fig2 the
/// (xi2_std, 1 - C) table) into outdir, and returns the report.
FigureReport run_figure(FigureName name, const std::filesystem::path& outdir, int threads = 0);

}  // namespace squeeze
