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
// Command-line front end: point, sweep, figure, crosscheck.
//
// Exit codes: 0 success, 1 usage or I/O error, 2 assertion or crosscheck failure.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <numbers>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "squeeze/closed_form.hpp"
#include "squeeze/crosscheck.hpp"
#include "squeeze/figures.hpp"
#include "squeeze/frame.hpp"
#include "squeeze/oracle.hpp"
#include "squeeze/sweep.hpp"

namespace {

using namespace squeeze;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitAssertion = 2;

const std::map<std::string, Convention> kConventions{{"standard", Convention::standard},
                                                     {"paper-literal", Convention::paper_literal}};
const std::map<std::string, OutputFormat> kFormats{{"csv", OutputFormat::csv},
                                                   {"json", OutputFormat::json}};
const std::map<std::string, FigureName> kFigures{{"fig1", FigureName::fig1},
                                                 {"fig2", FigureName::fig2}};

std::string trim(const std::string& s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string::npos) {
        return {};
    }
    return s.substr(first, s.find_last_not_of(" \t\r") - first + 1);
}

// Replaces "--config <path>" by one "--key=value" argument per line of the
// file. Keys also given on the command line are skipped so flags win.
std::vector<std::string> expand_config(std::vector<std::string> args) {
    std::size_t at = 0;
    std::string path;
    std::size_t width = 0;
    for (; at < args.size(); ++at) {
        if (args[at] == "--config" && at + 1 < args.size()) {
            path = args[at + 1];
            width = 2;
            break;
        }
        if (args[at].rfind("--config=", 0) == 0) {
            path = args[at].substr(9);
            width = 1;
            break;
        }
    }
    if (width == 0) {
        return args;
    }
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot read config file " + path);
    }
    const auto given = [&](const std::string& key) {
        const std::string flag = "--" + key;
        for (const std::string& a : args) {
            if (a == flag || a.rfind(flag + "=", 0) == 0) {
                return true;
            }
        }
        return false;
    };
    std::vector<std::string> injected;
    for (std::string line; std::getline(in, line);) {
        line = trim(line);
        if (line.empty() || line.front() == '#' || line.front() == ';') {
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            throw std::runtime_error("config line without '=': " + line);
        }
        const std::string key = trim(line.substr(0, eq));
        if (!given(key)) {
            injected.push_back("--" + key + "=" + trim(line.substr(eq + 1)));
        }
    }
    args.erase(args.begin() + static_cast<std::ptrdiff_t>(at),
               args.begin() + static_cast<std::ptrdiff_t>(at + width));
    args.insert(args.begin() + static_cast<std::ptrdiff_t>(at), injected.begin(), injected.end());
    return args;
}

template <class T>
std::vector<std::string> keys(const std::map<std::string, T>& m) {
    std::vector<std::string> out;
    for (const auto& [k, v] : m) {
        out.push_back(k);
    }
    return out;
}

struct PointOptions {
    double beta = 0.0;
    double mu = 0.0;
    double nu = 0.0;
    std::string convention = "standard";
    std::string format;
};

struct SweepOptions {
    std::vector<double> mu_list;
    std::vector<double> nu_list{0.0};
    double beta_min = 0.0;
    double beta_max = 1.0;
    int beta_steps = 101;
    std::string convention = "standard";
    std::string format = "csv";
    std::string out = "-";
    bool strict = false;
    int threads = 0;
};

struct FigureOptions {
    std::string name;
    std::string outdir = ".";
    int threads = 0;
};

struct CrosscheckOptions {
    std::vector<double> mu_list;
    std::vector<double> nu_list;
    double beta_min = 0.0;
    double beta_max = 1.0;
    int beta_steps = 21;
    double tol = 1e-10;
    std::string out = "crosscheck_report.json";
    int threads = 0;
};

std::string fixed6(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", v);
    return buf;
}

std::string complex6(Complex z) { return fixed6(z.real()) + (z.imag() < 0 ? " - " : " + ") +
                                         fixed6(std::abs(z.imag())) + "i"; }

int run_point(const PointOptions& opt) {
    const SqueezeParams params(opt.beta, opt.mu, opt.nu);
    const SqueezeResult result = squeeze_oracle(params);

    if (!opt.format.empty()) {
        // Single row in the sweep schema.
        std::vector<SweepRow> rows{evaluate_row(params)};
        write_rows(std::cout, rows, kFormats.at(opt.format));
        return kExitOk;
    }

    const MeanSpin closed = mean_spin_closed_form(params);
    const MeanSpin& oracle = result.moments.mean;
    const MomentSet second_cf = second_moments_closed_form(params);
    const MomentSet& second_or = result.moments.raising;
    const CartesianMoments cart = cartesian_from_raising(second_cf);

    std::ostringstream out;
    const auto line = [&out](const std::string& key, const std::string& value) {
        out << key << " = " << value << '\n';
    };
    line("beta", fixed6(params.beta()));
    line("mu", fixed6(params.mu()));
    line("nu", fixed6(params.nu()));
    line("alpha", fixed6(params.alpha()));
    line("jx_cf", fixed6(closed.jx));
    line("jy_cf", fixed6(closed.jy));
    line("jz_cf", fixed6(closed.jz));
    line("jx_or", fixed6(oracle.jx));
    line("jy_or", fixed6(oracle.jy));
    line("jz_or", fixed6(oracle.jz));
    line("r_eq9", fixed6(mean_spin_length(closed)));
    line("r_eq10", fixed6(mean_spin_length_closed_form(params)));
    line("R", fixed6(result.frame.r));
    line("frame_status", std::string(to_string(result.frame_status)));
    if (result.frame_status != FrameStatus::fully_degenerate) {
        line("theta", fixed6(result.frame.theta));
        line("phi", fixed6(result.frame.phi));
    }
    line("jplus_sq_cf", complex6(second_cf.jplus_sq));
    line("jplus_sq_or", complex6(second_or.jplus_sq));
    line("jz_sq_cf", fixed6(second_cf.jz_sq));
    line("jz_sq_or", fixed6(second_or.jz_sq));
    line("jplus_2jz1_cf", complex6(second_cf.jplus_2jz1));
    line("jplus_2jz1_or", complex6(second_or.jplus_2jz1));
    line("jx2_plus_jy2_cf", fixed6(cart.jx2_plus_jy2));
    line("jx2_minus_jy2_cf", fixed6(cart.jx2_minus_jy2));
    line("xy_anticomm_cf", fixed6(cart.xy_anticomm));
    line("xz_anticomm_cf", fixed6(cart.xz_anticomm));
    line("yz_anticomm_cf", fixed6(cart.yz_anticomm));

    if (result.frame_status != FrameStatus::fully_degenerate) {
        const StateVector state = build_superposition_state(params);
        const FrameMoments fm_or = frame_moments_oracle(state, result.frame, spin_one_operators());
        line("jn1sq_or", fixed6(fm_or.jn1_sq));
        line("jn2sq_or", fixed6(fm_or.jn2_sq));
        line("anticomm_or", fixed6(fm_or.anticomm));
    }
    const SpinFrame closed_frame = compute_frame(closed);
    if (closed_frame.status != FrameStatus::fully_degenerate) {
        const FrameMoments fm_cf = frame_moments_closed_form(params, closed_frame);
        line("jn1sq_cf", fixed6(fm_cf.jn1_sq));
        line("jn2sq_cf", fixed6(fm_cf.jn2_sq));
        line("anticomm_cf", fixed6(fm_cf.anticomm));
        line("xi2_std_cf", fixed6(squeezing_standard(fm_cf)));
        line("xi2_literal_cf", fixed6(squeezing_paper_literal(fm_cf)));
    }

    line("method", std::string(to_string(result.method)));
    line("lambda_min", fixed6(result.lambda_min));
    line("lambda_min_grid", fixed6(result.lambda_grid));
    if (result.method == MinimizationMethod::transverse_eigen) {
        line("chi_min", fixed6(result.chi_min));
    }
    line("xi2_std", fixed6(result.xi2_std));
    line("xi2_literal", fixed6(result.xi2_literal));
    line("xi2", fixed6(result.xi2(kConventions.at(opt.convention))));
    line("convention", opt.convention);
    line("concurrence", fixed6(result.concurrence));
    std::cout << out.str();
    return kExitOk;
}

int run_sweep(const SweepOptions& opt) {
    SweepSpec spec;
    spec.mu_values = opt.mu_list;
    spec.nu_values = opt.nu_list;
    spec.beta_min = opt.beta_min;
    spec.beta_max = opt.beta_max;
    spec.beta_steps = opt.beta_steps;
    spec.convention = kConventions.at(opt.convention);
    spec.format = kFormats.at(opt.format);
    spec.validate();

    const std::vector<SweepRow> rows = sweep_parallel(spec, opt.threads);
    if (opt.out == "-") {
        write_rows(std::cout, rows, spec.format);
    } else {
        std::ofstream file(opt.out, std::ios::binary);
        if (!file) {
            std::cerr << "error: cannot write " << opt.out << '\n';
            return kExitUsage;
        }
        write_rows(file, rows, spec.format);
        if (!file) {
            std::cerr << "error: write to " << opt.out << " failed\n";
            return kExitUsage;
        }
    }

    std::size_t degenerate = 0;
    std::size_t squeezed = 0;
    for (const SweepRow& r : rows) {
        degenerate += r.frame_status != FrameStatus::regular ? 1 : 0;
        squeezed += r.xi2(spec.convention) < 1.0 ? 1 : 0;
    }
    std::cerr << "sweep: " << rows.size() << " rows, " << degenerate << " degenerate, "
              << squeezed << " with xi2 < 1 (" << to_string(spec.convention) << ")\n";
    if (opt.strict && degenerate > 0) {
        std::cerr << "error: --strict and " << degenerate << " rows have a degenerate frame\n";
        return kExitAssertion;
    }
    return kExitOk;
}

int run_figure_cmd(const FigureOptions& opt) {
    const FigureReport report = run_figure(kFigures.at(opt.name), opt.outdir, opt.threads);
    for (const ShapeCheck& c : report.checks) {
        std::cout << (c.asserted ? (c.passed ? "PASS " : "FAIL ") : (c.passed ? "info " : "info "))
                  << c.slice << ": " << c.claim << " [" << c.detail << "]"
                  << (c.asserted ? "" : (c.passed ? " (holds)" : " (does not hold)")) << '\n';
    }
    for (const auto& w : report.squeezing_widths) {
        std::cout << "xi2<1 width " << w.label << ": " << format_double(w.value) << '\n';
    }
    for (const auto& g : report.concurrence_gap) {
        std::cout << "max |xi2_std - (1 - C)| " << g.label << ": " << format_double(g.value)
                  << '\n';
    }
    if (!report.passed()) {
        for (const std::string& v : report.violations()) {
            std::cerr << "shape assertion failed: " << v << '\n';
        }
        return kExitAssertion;
    }
    return kExitOk;
}

int run_crosscheck_cmd(const CrosscheckOptions& opt) {
    std::vector<SqueezeParams> grid;
    if (opt.mu_list.empty() && opt.nu_list.empty() && opt.beta_min == 0.0 && opt.beta_max == 1.0 &&
        opt.beta_steps == 21) {
        grid = default_crosscheck_grid();
    } else {
        constexpr double pi = std::numbers::pi;
        const std::vector<double> mus = opt.mu_list.empty()
                                            ? std::vector<double>{0.0, pi / 6, pi / 3, pi / 2,
                                                                  2 * pi / 3, 5 * pi / 6, pi}
                                            : opt.mu_list;
        const std::vector<double> nus =
            opt.nu_list.empty()
                ? std::vector<double>{-pi / 2, -pi / 3, 0.0, pi / 4, pi / 2, pi}
                : opt.nu_list;
        SweepSpec range;
        range.mu_values = mus;
        range.nu_values = nus;
        range.beta_min = opt.beta_min;
        range.beta_max = opt.beta_max;
        range.beta_steps = opt.beta_steps;
        range.validate();
        for (int b = 0; b < range.beta_steps; ++b) {
            for (double mu : mus) {
                for (double nu : nus) {
                    grid.emplace_back(range.beta_at(b), mu, nu);
                }
            }
        }
    }

    const CrosscheckReport report = run_crosscheck(grid, opt.tol, opt.threads);
    std::ofstream file(opt.out, std::ios::binary);
    if (!file) {
        std::cerr << "error: cannot write " << opt.out << '\n';
        return kExitUsage;
    }
    write_report_json(file, report);

    std::cout << "crosscheck: samples=" << report.samples << " tol=" << format_double(report.tol)
              << " nu_sign=" << to_string(report.nu_sign_hypothesis)
              << " eq12_factor=" << to_string(report.eq12_factor_hypothesis)
              << " convention_independent=" << (report.convention_independent_pass ? "pass" : "FAIL")
              << " failures=" << report.failures.size() << '\n';
    for (const auto& [name, diff] : report.max_abs_diff_per_quantity) {
        std::cout << "  max_abs_diff " << name << " = " << format_double(diff) << '\n';
    }
    if (!report.convention_independent_pass) {
        for (const std::string& name : report.convention_independent_failures) {
            std::cerr << "convention-independent quantity disagrees: " << name << '\n';
        }
        return kExitAssertion;
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Mean spin, spin squeezing and concurrence of the biaxial + Bell superposition"};
    app.require_subcommand(1);
    std::string config_path;

    PointOptions point;
    auto* point_cmd = app.add_subcommand("point", "Evaluate every quantity at one parameter point");
    point_cmd->add_option("--config", config_path, "key=value file; command-line flags take precedence");
    point_cmd->add_option("--beta", point.beta, "Bell-state weight in [0, 1]")->required();
    point_cmd->add_option("--mu", point.mu, "Biaxial angle in [0, pi] (radians)")->required();
    point_cmd->add_option("--nu", point.nu, "Relative phase (radians)")->required();
    point_cmd->add_option("--convention", point.convention, "Squeezing convention")
        ->check(CLI::IsMember(keys(kConventions)));
    point_cmd->add_option("--format", point.format, "Emit one sweep-schema row (csv|json)")
        ->check(CLI::IsMember(keys(kFormats)));

    SweepOptions sweep;
    auto* sweep_cmd = app.add_subcommand("sweep", "Evaluate a (mu, nu, beta) grid");
    sweep_cmd->add_option("--config", config_path, "key=value file; command-line flags take precedence");
    sweep_cmd->add_option("--mu-list", sweep.mu_list, "Comma-separated mu values (radians)")
        ->delimiter(',')
        ->required();
    sweep_cmd->add_option("--nu-list", sweep.nu_list, "Comma-separated nu values (radians)")
        ->delimiter(',');
    sweep_cmd->add_option("--beta-min", sweep.beta_min);
    sweep_cmd->add_option("--beta-max", sweep.beta_max);
    sweep_cmd->add_option("--beta-steps", sweep.beta_steps);
    sweep_cmd->add_option("--convention", sweep.convention)
        ->check(CLI::IsMember(keys(kConventions)));
    sweep_cmd->add_option("--format", sweep.format)
        ->check(CLI::IsMember(keys(kFormats)));
    sweep_cmd->add_option("--out", sweep.out, "Output file, - for stdout");
    sweep_cmd->add_flag("--strict", sweep.strict, "Exit 2 when any row has a degenerate frame");
    sweep_cmd->add_option("--threads", sweep.threads, "Worker threads (0 = runtime default)");

    FigureOptions figure;
    auto* figure_cmd = app.add_subcommand("figure", "Write figure data and check curve shapes");
    figure_cmd->add_option("--config", config_path, "key=value file; command-line flags take precedence");
    figure_cmd->add_option("name", figure.name, "fig1 or fig2")
        ->required()
        ->check(CLI::IsMember(keys(kFigures)));
    figure_cmd->add_option("--out", figure.outdir, "Output directory");
    figure_cmd->add_option("--threads", figure.threads);

    CrosscheckOptions cross;
    auto* cross_cmd = app.add_subcommand("crosscheck", "Compare closed forms against the oracle");
    cross_cmd->add_option("--config", config_path, "key=value file; command-line flags take precedence");
    cross_cmd->add_option("--mu-list", cross.mu_list)->delimiter(',');
    cross_cmd->add_option("--nu-list", cross.nu_list)->delimiter(',');
    cross_cmd->add_option("--beta-min", cross.beta_min);
    cross_cmd->add_option("--beta-max", cross.beta_max);
    cross_cmd->add_option("--beta-steps", cross.beta_steps);
    cross_cmd->add_option("--tol", cross.tol)->check(CLI::PositiveNumber);
    cross_cmd->add_option("--out", cross.out, "Report path (JSON)");
    cross_cmd->add_option("--threads", cross.threads);

    std::vector<std::string> args;
    try {
        args = expand_config({argv, argv + argc});
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    std::vector<char*> expanded;
    for (std::string& a : args) {
        expanded.push_back(a.data());
    }

    try {
        app.parse(static_cast<int>(expanded.size()), expanded.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*point_cmd) {
            return run_point(point);
        }
        if (*sweep_cmd) {
            return run_sweep(sweep);
        }
        if (*figure_cmd) {
            return run_figure_cmd(figure);
        }
        return run_crosscheck_cmd(cross);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
}
