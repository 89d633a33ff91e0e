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
#include "squeeze/sweep.hpp"

#include <charconv>
#include <cmath>
#include <ostream>
#include <stdexcept>

#include <nlohmann/json.hpp>
#include <omp.h>

namespace squeeze {

void SweepSpec::validate() const {
    if (mu_values.empty()) {
        throw std::invalid_argument("sweep needs at least one mu value");
    }
    if (nu_values.empty()) {
        throw std::invalid_argument("sweep needs at least one nu value");
    }
    if (beta_steps < 2) {
        throw std::invalid_argument("beta steps must be at least 2");
    }
    if (!(beta_min >= 0.0 && beta_max <= 1.0 && beta_min <= beta_max)) {
        throw std::invalid_argument("beta range must satisfy 0 <= min <= max <= 1");
    }
    for (double mu : mu_values) {
        (void)SqueezeParams(beta_min, mu, 0.0);
    }
    for (double nu : nu_values) {
        if (!std::isfinite(nu)) {
            throw std::invalid_argument("nu values must be finite");
        }
    }
}

std::size_t SweepSpec::row_count() const {
    return mu_values.size() * nu_values.size() * static_cast<std::size_t>(beta_steps);
}

double SweepSpec::beta_at(int k) const {
    if (k == beta_steps - 1) {
        return beta_max;
    }
    return beta_min + (beta_max - beta_min) * k / (beta_steps - 1);
}

SweepRow evaluate_row(const SqueezeParams& params, const MinimizerConfig& config) {
    const SqueezeResult result = squeeze_oracle(params, config);

    SweepRow row;
    row.beta = params.beta();
    row.mu = params.mu();
    row.nu = params.nu();
    row.closed = mean_spin_closed_form(params);
    row.oracle = result.moments.mean;
    row.r_eq9 = mean_spin_length(row.closed);
    row.r_eq10 = mean_spin_length_closed_form(params);
    row.lambda_min = result.lambda_min;
    row.xi2_std = result.xi2_std;
    row.xi2_literal = result.xi2_literal;
    row.concurrence = result.concurrence;
    row.frame_status = result.frame_status;
    row.method = result.method;

    if (result.frame_status != FrameStatus::fully_degenerate) {
        const StateVector state = build_superposition_state(params);
        row.theta = result.frame.theta;
        row.phi = result.frame.phi;
        row.frame_moments = frame_moments_oracle(state, result.frame, spin_one_operators());
        row.chi_min = result.chi_min;
    }

    const SpinFrame closed_frame = compute_frame(row.closed);
    if (closed_frame.status != FrameStatus::fully_degenerate) {
        row.xi2_closed_form = squeezing_standard(frame_moments_closed_form(params, closed_frame));
    }
    return row;
}

namespace {

SqueezeParams params_at(const SweepSpec& spec, std::size_t index) {
    const auto steps = static_cast<std::size_t>(spec.beta_steps);
    const std::size_t b = index % steps;
    const std::size_t n = (index / steps) % spec.nu_values.size();
    const std::size_t m = index / (steps * spec.nu_values.size());
    return {spec.beta_at(static_cast<int>(b)), spec.mu_values[m], spec.nu_values[n]};
}

}  // namespace

std::vector<SweepRow> sweep_serial(const SweepSpec& spec) {
    spec.validate();
    std::vector<SweepRow> rows;
    rows.reserve(spec.row_count());
    for (std::size_t i = 0; i < spec.row_count(); ++i) {
        rows.push_back(evaluate_row(params_at(spec, i), spec.minimizer));
    }
    return rows;
}

std::vector<SweepRow> sweep_parallel(const SweepSpec& spec, int threads) {
    spec.validate();
    std::vector<SweepRow> rows(spec.row_count());
    const int team = threads > 0 ? threads : omp_get_max_threads();
    const auto count = static_cast<std::ptrdiff_t>(rows.size());
#pragma omp parallel for schedule(dynamic, 64) num_threads(team)
    for (std::ptrdiff_t i = 0; i < count; ++i) {
        const auto k = static_cast<std::size_t>(i);
        rows[k] = evaluate_row(params_at(spec, k), spec.minimizer);
    }
    return rows;
}

const std::vector<std::string_view>& csv_columns() {
    static const std::vector<std::string_view> columns{
        "beta",     "mu",         "nu",          "jx_cf",       "jy_cf",        "jz_cf",
        "jx_or",    "jy_or",      "jz_or",       "r_eq9",       "r_eq10",       "theta",
        "phi",      "jn1sq",      "jn2sq",       "anticomm",    "lambda_min",   "chi_min",
        "xi2_std",  "xi2_literal", "concurrence", "frame_status", "method"};
    return columns;
}

std::string format_double(double value) {
    char buf[64];
    const auto [end, ec] = std::to_chars(buf, buf + sizeof buf, value, std::chars_format::general, 17);
    if (ec != std::errc{}) {
        throw std::runtime_error("float formatting failed");
    }
    return {buf, end};
}

void write_csv(std::ostream& out, const std::vector<SweepRow>& rows) {
    const auto& columns = csv_columns();
    for (std::size_t c = 0; c < columns.size(); ++c) {
        out << (c ? "," : "") << columns[c];
    }
    out << '\n';

    const auto num = [&out](double v) { out << format_double(v) << ','; };
    const auto opt = [&out](const std::optional<double>& v) {
        if (v) {
            out << format_double(*v);
        }
        out << ',';
    };
    for (const SweepRow& r : rows) {
        num(r.beta);
        num(r.mu);
        num(r.nu);
        num(r.closed.jx);
        num(r.closed.jy);
        num(r.closed.jz);
        num(r.oracle.jx);
        num(r.oracle.jy);
        num(r.oracle.jz);
        num(r.r_eq9);
        num(r.r_eq10);
        opt(r.theta);
        opt(r.phi);
        if (r.frame_moments) {
            num(r.frame_moments->jn1_sq);
            num(r.frame_moments->jn2_sq);
            num(r.frame_moments->anticomm);
        } else {
            out << ",,,";
        }
        num(r.lambda_min);
        opt(r.chi_min);
        num(r.xi2_std);
        num(r.xi2_literal);
        num(r.concurrence);
        out << to_string(r.frame_status) << ',' << to_string(r.method) << '\n';
    }
}

void write_json(std::ostream& out, const std::vector<SweepRow>& rows) {
    using nlohmann::ordered_json;
    const auto opt = [](const std::optional<double>& v) {
        return v ? ordered_json(*v) : ordered_json(nullptr);
    };
    ordered_json doc = ordered_json::array();
    for (const SweepRow& r : rows) {
        ordered_json row;
        row["beta"] = r.beta;
        row["mu"] = r.mu;
        row["nu"] = r.nu;
        row["jx_cf"] = r.closed.jx;
        row["jy_cf"] = r.closed.jy;
        row["jz_cf"] = r.closed.jz;
        row["jx_or"] = r.oracle.jx;
        row["jy_or"] = r.oracle.jy;
        row["jz_or"] = r.oracle.jz;
        row["r_eq9"] = r.r_eq9;
        row["r_eq10"] = r.r_eq10;
        row["theta"] = opt(r.theta);
        row["phi"] = opt(r.phi);
        const auto& fm = r.frame_moments;
        row["jn1sq"] = opt(fm ? std::optional(fm->jn1_sq) : std::nullopt);
        row["jn2sq"] = opt(fm ? std::optional(fm->jn2_sq) : std::nullopt);
        row["anticomm"] = opt(fm ? std::optional(fm->anticomm) : std::nullopt);
        row["lambda_min"] = r.lambda_min;
        row["chi_min"] = opt(r.chi_min);
        row["xi2_std"] = r.xi2_std;
        row["xi2_literal"] = r.xi2_literal;
        row["concurrence"] = r.concurrence;
        row["frame_status"] = std::string(to_string(r.frame_status));
        row["method"] = std::string(to_string(r.method));
        doc.push_back(std::move(row));
    }
    out << doc.dump(1) << '\n';
}

void write_rows(std::ostream& out, const std::vector<SweepRow>& rows, OutputFormat format) {
    if (format == OutputFormat::csv) {
        write_csv(out, rows);
    } else {
        write_json(out, rows);
    }
}

}  // namespace squeeze
