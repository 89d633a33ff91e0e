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
#include "squeeze/crosscheck.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <optional>
#include <ostream>
#include <stdexcept>

#include <nlohmann/json.hpp>
#include <omp.h>

#include "squeeze/closed_form.hpp"
#include "squeeze/frame.hpp"
#include "squeeze/oracle.hpp"

namespace squeeze {

namespace {

enum Quantity : std::size_t {
    kJx,
    kJy,
    kJz,
    kR,
    kJplusSqRe,
    kJplusSqIm,
    kJzSq,
    kJplus2Jz1Re,
    kJplus2Jz1Im,
    kJn1Sq,
    kJn2Sq,
    kAnticomm,
    kQuantityCount
};

constexpr std::array<Quantity, 2> kNuDiscriminating{kJy, kJplus2Jz1Im};

struct Comparison {
    double closed = 0.0;
    double oracle = 0.0;
    bool valid = false;

    [[nodiscard]] double diff() const { return std::abs(closed - oracle); }
};

using ComparisonRow = std::array<Comparison, kQuantityCount>;

struct PointResult {
    std::array<ComparisonRow, 2> by_hypothesis;  // [0] as printed, [1] nu negated
    std::optional<double> literal_diff;
    std::optional<double> half_diff;
};

ComparisonRow compare(const SqueezeParams& closed_params, const StateVector& state,
                      const OracleMoments& oracle) {
    const SpinOperatorSet& ops = spin_one_operators();
    ComparisonRow row;
    const auto set = [&row](Quantity q, double closed, double truth) {
        row[q] = {closed, truth, true};
    };

    const MeanSpin mean = mean_spin_closed_form(closed_params);
    set(kJx, mean.jx, oracle.mean.jx);
    set(kJy, mean.jy, oracle.mean.jy);
    set(kJz, mean.jz, oracle.mean.jz);
    set(kR, mean_spin_length_closed_form(closed_params), mean_spin_length(oracle.mean));

    const MomentSet second = second_moments_closed_form(closed_params);
    set(kJplusSqRe, second.jplus_sq.real(), oracle.raising.jplus_sq.real());
    set(kJplusSqIm, second.jplus_sq.imag(), oracle.raising.jplus_sq.imag());
    set(kJzSq, second.jz_sq, oracle.raising.jz_sq);
    set(kJplus2Jz1Re, second.jplus_2jz1.real(), oracle.raising.jplus_2jz1.real());
    set(kJplus2Jz1Im, second.jplus_2jz1.imag(), oracle.raising.jplus_2jz1.imag());

    // Frame moments are compared on the frame the closed-form pipeline builds.
    const SpinFrame frame = compute_frame(mean);
    if (frame.status != FrameStatus::fully_degenerate) {
        const FrameMoments closed = frame_moments_closed_form(closed_params, frame);
        const FrameMoments truth = frame_moments_oracle(state, frame, ops);
        set(kJn1Sq, closed.jn1_sq, truth.jn1_sq);
        set(kJn2Sq, closed.jn2_sq, truth.jn2_sq);
        set(kAnticomm, closed.anticomm, truth.anticomm);
    }
    return row;
}

PointResult evaluate(const SqueezeParams& params) {
    const SpinOperatorSet& ops = spin_one_operators();
    const StateVector state = build_superposition_state(params);
    const OracleMoments oracle = moments_oracle(state, ops);

    PointResult out;
    out.by_hypothesis[0] = compare(params, state, oracle);
    out.by_hypothesis[1] = compare(params.with_nu(-params.nu()), state, oracle);

    const SpinFrame frame = compute_frame(oracle.mean);
    if (frame.status != FrameStatus::fully_degenerate) {
        const FrameMoments fm = frame_moments_oracle(state, frame, ops);
        const double truth = squeeze_oracle(params, {.cross_validate = false}).xi2_std;
        out.literal_diff = std::abs(squeezing_paper_literal(fm) - truth);
        out.half_diff = std::abs(squeezing_standard(fm) - truth);
    }
    return out;
}

template <class Hypothesis>
Hypothesis select(double err_first, double err_second, bool distinguishable, double tol,
                  Hypothesis first, Hypothesis second, Hypothesis inconclusive) {
    if (!distinguishable) {
        return inconclusive;
    }
    if (err_first <= tol && err_second > tol) {
        return first;
    }
    if (err_second <= tol && err_first > tol) {
        return second;
    }
    return inconclusive;
}

}  // namespace

std::string_view to_string(NuSignHypothesis h) {
    switch (h) {
    case NuSignHypothesis::as_printed:
        return "as-printed";
    case NuSignHypothesis::nu_negated:
        return "nu-negated";
    case NuSignHypothesis::inconclusive:
        return "inconclusive";
    }
    return "inconclusive";
}

std::string_view to_string(Eq12FactorHypothesis h) {
    switch (h) {
    case Eq12FactorHypothesis::literal:
        return "literal";
    case Eq12FactorHypothesis::half_corrected:
        return "half-corrected";
    case Eq12FactorHypothesis::inconclusive:
        return "inconclusive";
    }
    return "inconclusive";
}

const std::vector<std::string>& crosscheck_quantities() {
    static const std::vector<std::string> names{
        "jx",      "jy",         "jz",         "r",      "jplus_sq_re", "jplus_sq_im",
        "jz_sq",   "jplus_2jz1_re", "jplus_2jz1_im", "jn1_sq", "jn2_sq",      "anticomm"};
    return names;
}

const std::vector<std::string>& convention_independent_quantities() {
    static const std::vector<std::string> names{"jx",          "jz",    "r",
                                                "jplus_sq_re", "jplus_sq_im", "jz_sq",
                                                "jplus_2jz1_re"};
    return names;
}

std::vector<SqueezeParams> default_crosscheck_grid() {
    constexpr double pi = std::numbers::pi;
    const std::array<double, 7> mus{0.0, pi / 6, pi / 3, pi / 2, 2 * pi / 3, 5 * pi / 6, pi};
    const std::array<double, 6> nus{-pi / 2, -pi / 3, 0.0, pi / 4, pi / 2, pi};
    std::vector<SqueezeParams> grid;
    grid.reserve(21 * mus.size() * nus.size());
    for (int b = 0; b <= 20; ++b) {
        for (double mu : mus) {
            for (double nu : nus) {
                grid.emplace_back(b / 20.0, mu, nu);
            }
        }
    }
    return grid;
}

CrosscheckReport run_crosscheck(const std::vector<SqueezeParams>& grid, double tol, int threads) {
    if (grid.empty()) {
        throw std::invalid_argument("crosscheck grid is empty");
    }
    if (!(tol > 0.0)) {
        throw std::invalid_argument("crosscheck tolerance must be positive");
    }

    std::vector<PointResult> results(grid.size());
    const int team = threads > 0 ? threads : omp_get_max_threads();
    const auto count = static_cast<std::ptrdiff_t>(grid.size());
#pragma omp parallel for schedule(dynamic, 8) num_threads(team)
    for (std::ptrdiff_t i = 0; i < count; ++i) {
        results[static_cast<std::size_t>(i)] = evaluate(grid[static_cast<std::size_t>(i)]);
    }

    const auto& names = crosscheck_quantities();
    std::array<std::array<double, kQuantityCount>, 2> max_diff{};
    std::array<double, 2> discriminating_err{};
    double convention_gap = 0.0;
    double literal_err = 0.0;
    double half_err = 0.0;
    double factor_gap = 0.0;

    for (const PointResult& point : results) {
        for (std::size_t h = 0; h < 2; ++h) {
            for (std::size_t q = 0; q < kQuantityCount; ++q) {
                const Comparison& c = point.by_hypothesis[h][q];
                if (c.valid) {
                    max_diff[h][q] = std::max(max_diff[h][q], c.diff());
                }
            }
            for (Quantity q : kNuDiscriminating) {
                discriminating_err[h] =
                    std::max(discriminating_err[h], point.by_hypothesis[h][q].diff());
            }
        }
        for (Quantity q : kNuDiscriminating) {
            convention_gap = std::max(convention_gap, std::abs(point.by_hypothesis[0][q].closed -
                                                               point.by_hypothesis[1][q].closed));
        }
        if (point.literal_diff) {
            literal_err = std::max(literal_err, *point.literal_diff);
            half_err = std::max(half_err, *point.half_diff);
            factor_gap = std::max(factor_gap, std::abs(*point.literal_diff - *point.half_diff));
        }
    }

    CrosscheckReport report;
    report.samples = grid.size();
    report.tol = tol;
    report.nu_sign_hypothesis =
        select(discriminating_err[0], discriminating_err[1], convention_gap > tol, tol,
               NuSignHypothesis::as_printed, NuSignHypothesis::nu_negated,
               NuSignHypothesis::inconclusive);
    report.eq12_factor_hypothesis =
        select(literal_err, half_err, factor_gap > tol, tol, Eq12FactorHypothesis::literal,
               Eq12FactorHypothesis::half_corrected, Eq12FactorHypothesis::inconclusive);
    report.max_abs_diff_literal = literal_err;
    report.max_abs_diff_half_corrected = half_err;

    const std::size_t selected =
        report.nu_sign_hypothesis == NuSignHypothesis::nu_negated ? 1 : 0;
    for (std::size_t q = 0; q < kQuantityCount; ++q) {
        report.max_abs_diff_as_printed[names[q]] = max_diff[0][q];
        report.max_abs_diff_nu_negated[names[q]] = max_diff[1][q];
        report.max_abs_diff_per_quantity[names[q]] = max_diff[selected][q];
    }

    for (std::size_t i = 0; i < results.size(); ++i) {
        const ComparisonRow& row = results[i].by_hypothesis[selected];
        for (std::size_t q = 0; q < kQuantityCount; ++q) {
            if (row[q].valid && row[q].diff() > tol) {
                report.failures.push_back({i, grid[i].beta(), grid[i].mu(), grid[i].nu(), names[q],
                                           row[q].closed, row[q].oracle, row[q].diff()});
            }
        }
    }

    for (const std::string& name : convention_independent_quantities()) {
        if (report.max_abs_diff_as_printed.at(name) > tol) {
            report.convention_independent_failures.push_back(name);
        }
    }
    report.convention_independent_pass = report.convention_independent_failures.empty();
    return report;
}

void write_report_json(std::ostream& out, const CrosscheckReport& report) {
    using nlohmann::ordered_json;
    const auto table = [](const DiffTable& diffs) {
        ordered_json t;
        for (const std::string& name : crosscheck_quantities()) {
            t[name] = diffs.at(name);
        }
        return t;
    };
    ordered_json doc;
    doc["samples"] = report.samples;
    doc["tol"] = report.tol;
    doc["nu_sign_hypothesis"] = std::string(to_string(report.nu_sign_hypothesis));
    doc["eq12_factor_hypothesis"] = std::string(to_string(report.eq12_factor_hypothesis));
    doc["convention_independent_pass"] = report.convention_independent_pass;
    doc["convention_independent_failures"] = report.convention_independent_failures;
    doc["max_abs_diff_per_quantity"] = table(report.max_abs_diff_per_quantity);
    doc["max_abs_diff_as_printed"] = table(report.max_abs_diff_as_printed);
    doc["max_abs_diff_nu_negated"] = table(report.max_abs_diff_nu_negated);
    doc["max_abs_diff_xi2"] = {{"literal", report.max_abs_diff_literal},
                               {"half-corrected", report.max_abs_diff_half_corrected}};
    ordered_json failures = ordered_json::array();
    for (const CrosscheckFailure& f : report.failures) {
        failures.push_back({{"index", f.index},
                            {"beta", f.beta},
                            {"mu", f.mu},
                            {"nu", f.nu},
                            {"quantity", f.quantity},
                            {"closed", f.closed},
                            {"oracle", f.oracle},
                            {"diff", f.diff}});
    }
    doc["failures"] = failures;
    out << doc.dump(2) << '\n';
}

}  // namespace squeeze
