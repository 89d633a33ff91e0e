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
#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <catch2/catch_amalgamated.hpp>

namespace fs = std::filesystem;

namespace {

struct Run {
    int code = -1;
    std::string out;
};

// Runs the CLI with the given arguments; stderr is discarded.
Run cli(const std::string& args) {
    const std::string cmd = std::string(SQUEEZE_CLI_PATH) + " " + args + " 2>/dev/null";
    Run r;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::array<char, 4096> buf{};
    std::size_t n = 0;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) {
        r.out.append(buf.data(), n);
    }
    const int status = pclose(pipe);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

fs::path scratch_dir() {
    const fs::path dir = fs::temp_directory_path() / "squeeze_test_cli";
    fs::create_directories(dir);
    return dir;
}

bool has_line(const std::string& text, const std::string& line) {
    std::istringstream in(text);
    for (std::string l; std::getline(in, l);) {
        if (l == line) {
            return true;
        }
    }
    return false;
}

}  // namespace

TEST_CASE("point output", "[cli]") {
    const Run r = cli("point --beta 0.6 --mu 1.0471975511965976 --nu 0.78539816339744831");
    REQUIRE(r.code == 0);
    CHECK(has_line(r.out, "frame_status = regular"));
    CHECK(has_line(r.out, "lambda_min = 0.236819"));
    CHECK(has_line(r.out, "xi2_std = 0.473639"));
    CHECK(has_line(r.out, "concurrence = 0.526361"));
}

TEST_CASE("point in the sweep schema", "[cli]") {
    const Run r = cli("point --beta 0 --mu 0 --nu 0 --format csv");
    REQUIRE(r.code == 0);
    std::istringstream in(r.out);
    std::string header;
    std::string row;
    std::getline(in, header);
    std::getline(in, row);
    CHECK(header.rfind("beta,mu,nu,jx_cf,", 0) == 0);
    CHECK(row.find("polar-degenerate,transverse-eigen") != std::string::npos);
}

TEST_CASE("usage errors exit with 1", "[cli]") {
    CHECK(cli("").code == 1);
    CHECK(cli("bogus").code == 1);
    CHECK(cli("point --beta 0.5 --mu 0").code == 1);
    CHECK(cli("point --beta 1.5 --mu 0 --nu 0").code == 1);
    CHECK(cli("point --beta 0.5 --mu 4 --nu 0").code == 1);
    CHECK(cli("point --beta 0.5 --mu 0 --nu 0 --convention other").code == 1);
    CHECK(cli("sweep --nu-list 0").code == 1);
    CHECK(cli("sweep --mu-list 0 --beta-steps 1 --out -").code == 1);
    CHECK(cli("crosscheck --tol -1").code == 1);
    CHECK(cli("figure fig3").code == 1);
    CHECK(cli("sweep --mu-list 0 --out /nonexistent/dir/x.csv").code == 1);
    CHECK(cli("point --config /nonexistent.cfg --beta 0 --mu 0 --nu 0").code == 1);
}

TEST_CASE("help exits with 0", "[cli]") {
    const Run r = cli("--help");
    CHECK(r.code == 0);
    CHECK(r.out.find("crosscheck") != std::string::npos);
}

TEST_CASE("sweep output is identical across thread counts", "[cli]") {
    const fs::path dir = scratch_dir();
    const std::string common = "sweep --mu-list 0,1.0471975511965976,3.141592653589793 "
                               "--nu-list -1.0471975511965976,0.5 --beta-steps 51 --out ";
    REQUIRE(cli(common + (dir / "t1.csv").string() + " --threads 1").code == 0);
    REQUIRE(cli(common + (dir / "t4.csv").string() + " --threads 4").code == 0);
    REQUIRE(cli(common + (dir / "t4b.csv").string() + " --threads 4").code == 0);
    const std::string one = slurp(dir / "t1.csv");
    CHECK(one.size() > 1000);
    CHECK(one == slurp(dir / "t4.csv"));
    CHECK(one == slurp(dir / "t4b.csv"));
    const Run stdout_run = cli(common + "- --threads 2");
    CHECK(stdout_run.code == 0);
    CHECK(stdout_run.out == one);
}

TEST_CASE("strict sweep rejects degenerate frames", "[cli]") {
    // mu = pi/2, nu = 0 has a vanishing mean spin for every beta
    const std::string degenerate = "sweep --mu-list 1.5707963267948966 --nu-list 0 --beta-steps 5 --out -";
    CHECK(cli(degenerate).code == 0);
    CHECK(cli(degenerate + " --strict").code == 2);
    const std::string regular =
        "sweep --mu-list 1.0471975511965976 --nu-list 0.7 --beta-min 0.1 --beta-max 0.9 --beta-steps 5 --out -";
    CHECK(cli(regular + " --strict").code == 0);
}

TEST_CASE("json sweep", "[cli]") {
    const Run r = cli("sweep --mu-list 0 --beta-steps 3 --format json --out -");
    REQUIRE(r.code == 0);
    CHECK(r.out.front() == '[');
    CHECK(r.out.find("\"xi2_literal\"") != std::string::npos);
}

TEST_CASE("configuration file with flag override", "[cli]") {
    const fs::path cfg = scratch_dir() / "point.cfg";
    {
        std::ofstream out(cfg);
        out << "beta=0.6\nmu=1.0471975511965976\nnu=0.78539816339744831\nconvention=paper-literal\n";
    }
    const Run from_file = cli("point --config " + cfg.string());
    REQUIRE(from_file.code == 0);
    CHECK(has_line(from_file.out, "convention = paper-literal"));
    CHECK(has_line(from_file.out, "lambda_min = 0.236819"));

    const Run overridden = cli("point --config " + cfg.string() + " --beta 0");
    REQUIRE(overridden.code == 0);
    CHECK(has_line(overridden.out, "beta = 0.000000"));
}

TEST_CASE("crosscheck command", "[cli]") {
    const fs::path report = scratch_dir() / "report.json";
    const Run r = cli("crosscheck --out " + report.string());
    CHECK(r.code == 0);
    CHECK(r.out.find("nu_sign=nu-negated") != std::string::npos);
    CHECK(r.out.find("eq12_factor=half-corrected") != std::string::npos);
    CHECK(fs::exists(report));

    const Run nu0 = cli("crosscheck --nu-list 0 --out " + report.string());
    CHECK(nu0.code == 0);
    CHECK(nu0.out.find("nu_sign=inconclusive") != std::string::npos);
}

TEST_CASE("figure command", "[cli]") {
    const fs::path dir = scratch_dir() / "fig1";
    const Run r = cli("figure fig1 --out " + dir.string());
    CHECK(r.code == 0);
    CHECK(fs::exists(dir / "fig1_summary.json"));
    CHECK(fs::exists(dir / "fig1_mu_pi_2.csv"));
}
