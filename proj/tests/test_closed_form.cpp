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
#include <cmath>
#include <numbers>

#include <catch2/catch_amalgamated.hpp>

#include "squeeze/closed_form.hpp"
#include "squeeze/oracle.hpp"
#include "two_qubit_oracle.hpp"

using namespace squeeze;
using Catch::Matchers::WithinAbs;

namespace {

constexpr double pi = std::numbers::pi;

struct RaisingReference {
    Complex jplus_sq;
    double jz_sq;
    Complex jplus_2jz1;
};

RaisingReference raising_reference(const SqueezeParams& p) {
    const auto s = two_qubit::collective();
    const two_qubit::Vec4 psi = two_qubit::superposition(p.beta(), p.mu(), p.nu());
    const two_qubit::Mat4 jplus = s.x + Complex(0.0, 1.0) * s.y;
    const two_qubit::Mat4 id = two_qubit::Mat4::Identity();
    return {psi.dot(jplus * jplus * psi), two_qubit::mean(s.z * s.z, psi),
            psi.dot(jplus * (2.0 * s.z + id) * psi)};
}

}  // namespace

TEST_CASE("second moments at anchor points", "[closed_form]") {
    SECTION("beta = 0, mu = pi/2") {
        const MomentSet m = second_moments_closed_form({0.0, pi / 2, 0.0});
        CHECK_THAT(m.jplus_sq.real(), WithinAbs(-1.0, 1e-15));
        CHECK_THAT(m.jz_sq, WithinAbs(1.0, 1e-15));
        CHECK(std::abs(m.jplus_2jz1) < 1e-15);
    }
    SECTION("coherent state") {
        const MomentSet m = second_moments_closed_form({0.0, 0.0, 0.0});
        CHECK(std::abs(m.jplus_sq) < 1e-15);
        CHECK_THAT(m.jz_sq, WithinAbs(1.0, 1e-15));
        CHECK(std::abs(m.jplus_2jz1) < 1e-15);
    }
    SECTION("beta = 1 zeroes every term") {
        const MomentSet m = second_moments_closed_form({1.0, 1.2, 0.4});
        CHECK(std::abs(m.jplus_sq) == 0.0);
        CHECK(m.jz_sq == 0.0);
        CHECK(std::abs(m.jplus_2jz1) == 0.0);
    }
}

TEST_CASE("second moments against the two-qubit oracle", "[closed_form][property]") {
    two_qubit::ParamSampler sample(31);
    for (int k = 0; k < 1000; ++k) {
        const SqueezeParams p(sample.beta(), sample.mu(), sample.nu());
        const RaisingReference ref = raising_reference(p);
        const MomentSet printed = second_moments_closed_form(p);
        const MomentSet negated = second_moments_closed_form(p.with_nu(-p.nu()));

        REQUIRE(std::abs(printed.jplus_sq - ref.jplus_sq) < 1e-12);
        REQUIRE_THAT(printed.jz_sq, WithinAbs(ref.jz_sq, 1e-12));
        REQUIRE_THAT(printed.jplus_2jz1.real(), WithinAbs(ref.jplus_2jz1.real(), 1e-12));
        // imaginary part carries the flipped phase sign
        REQUIRE_THAT(negated.jplus_2jz1.imag(), WithinAbs(ref.jplus_2jz1.imag(), 1e-12));

        REQUIRE(printed.jz_sq >= -1e-15);
        REQUIRE(printed.jz_sq <= 1.0 + 1e-12);
        REQUIRE(std::abs(printed.jplus_sq) <= 2.0 + 1e-12);
        REQUIRE(std::abs(printed.jplus_2jz1) <= 2.0 * std::numbers::sqrt2 + 1e-12);
    }
}

TEST_CASE("Cartesian moments from raising moments", "[closed_form]") {
    SECTION("anchor") {
        MomentSet m;
        m.jplus_sq = -1.0;
        m.jz_sq = 1.0;
        const CartesianMoments c = cartesian_from_raising(m);
        CHECK(c.jx2_plus_jy2 == 1.0);
        CHECK(c.jx2_minus_jy2 == -1.0);
        CHECK(c.xy_anticomm == 0.0);
    }
    SECTION("zero moments leave the Casimir term") {
        const CartesianMoments c = cartesian_from_raising({});
        CHECK(c.jx2_plus_jy2 == 2.0);
        CHECK(c.jx2_minus_jy2 == 0.0);
        CHECK(c.xy_anticomm == 0.0);
        CHECK(c.xz_anticomm == 0.0);
        CHECK(c.yz_anticomm == 0.0);
    }
    SECTION("generic point") {
        const CartesianMoments c =
            cartesian_from_raising(second_moments_closed_form({0.6, pi / 3, pi / 4}));
        CHECK_THAT(c.xz_anticomm, WithinAbs(0.6071573107523288, 1e-14));
        CHECK_THAT(c.yz_anticomm, WithinAbs(-0.3035786553761644, 1e-14));
    }
}

TEST_CASE("Cartesian identities hold on oracle moments", "[closed_form][property]") {
    const auto s = two_qubit::collective();
    two_qubit::ParamSampler sample(32);
    for (int k = 0; k < 500; ++k) {
        const SqueezeParams p(sample.beta(), sample.mu(), sample.nu());
        const two_qubit::Vec4 psi = two_qubit::superposition(p.beta(), p.mu(), p.nu());
        const auto anti = [&](const two_qubit::Mat4& a, const two_qubit::Mat4& b) {
            return two_qubit::mean(a * b + b * a, psi);
        };
        const OracleMoments om = moments_oracle(build_superposition_state(p), spin_one_operators());
        const CartesianMoments c = cartesian_from_raising(om.raising);
        REQUIRE_THAT(c.jx2_plus_jy2, WithinAbs(two_qubit::mean(s.x * s.x + s.y * s.y, psi), 1e-12));
        REQUIRE_THAT(c.jx2_minus_jy2, WithinAbs(two_qubit::mean(s.x * s.x - s.y * s.y, psi), 1e-12));
        REQUIRE_THAT(c.xy_anticomm, WithinAbs(anti(s.x, s.y), 1e-12));
        REQUIRE_THAT(c.xz_anticomm, WithinAbs(anti(s.x, s.z), 1e-12));
        REQUIRE_THAT(c.yz_anticomm, WithinAbs(anti(s.y, s.z), 1e-12));
    }
}

TEST_CASE("Cartesian conversion is linear apart from the Casimir term", "[closed_form][property]") {
    two_qubit::ParamSampler sample(33);
    for (int k = 0; k < 200; ++k) {
        const MomentSet m = second_moments_closed_form({sample.beta(), sample.mu(), sample.nu()});
        const double t = std::uniform_real_distribution<double>(-3.0, 3.0)(sample.rng());
        const MomentSet scaled{t * m.jplus_sq, t * m.jz_sq, t * m.jplus_2jz1};
        const CartesianMoments a = cartesian_from_raising(m);
        const CartesianMoments b = cartesian_from_raising(scaled);
        REQUIRE_THAT(b.jx2_plus_jy2 - 2.0, WithinAbs(t * (a.jx2_plus_jy2 - 2.0), 1e-12));
        REQUIRE_THAT(b.jx2_minus_jy2, WithinAbs(t * a.jx2_minus_jy2, 1e-12));
        REQUIRE_THAT(b.xy_anticomm, WithinAbs(t * a.xy_anticomm, 1e-12));
        REQUIRE_THAT(b.xz_anticomm, WithinAbs(t * a.xz_anticomm, 1e-12));
        REQUIRE_THAT(b.yz_anticomm, WithinAbs(t * a.yz_anticomm, 1e-12));
    }
}

TEST_CASE("frame moments as printed", "[closed_form]") {
    SECTION("coherent state on its polar frame") {
        const SqueezeParams p(0.0, 0.0, 0.0);
        const FrameMoments fm = frame_moments_closed_form(p, compute_frame(mean_spin_closed_form(p)));
        CHECK_THAT(fm.jn1_sq, WithinAbs(0.5, 1e-15));
        CHECK_THAT(fm.jn2_sq, WithinAbs(0.5, 1e-15));
        CHECK_THAT(fm.anticomm, WithinAbs(0.0, 1e-15));
    }
    SECTION("beta = 1 has no frame") {
        const SqueezeParams p(1.0, 0.3, 0.2);
        CHECK_THROWS_AS(frame_moments_closed_form(p, compute_frame(mean_spin_closed_form(p))),
                        DegenerateFrameError);
    }
    SECTION("generic point on the closed-form frame") {
        // Independent evaluation of the printed expressions.
        const SqueezeParams p(0.6, pi / 3, pi / 4);
        const FrameMoments fm = frame_moments_closed_form(p, compute_frame(mean_spin_closed_form(p)));
        CHECK_THAT(fm.jn1_sq, WithinAbs(0.5648000000000001, 1e-13));
        CHECK_THAT(fm.jn2_sq, WithinAbs(0.6310073654390936, 1e-13));
        CHECK_THAT(fm.anticomm, WithinAbs(-0.05882931045816808, 1e-13));
    }
}

TEST_CASE("printed <J_n1^2> matches the oracle on any frame", "[closed_form][property]") {
    two_qubit::ParamSampler sample(34);
    for (int k = 0; k < 1000; ++k) {
        const SqueezeParams p(sample.beta(), sample.mu(), sample.nu());
        const SpinFrame f = compute_frame(mean_spin_closed_form(p));
        if (f.status == FrameStatus::fully_degenerate) {
            continue;
        }
        const FrameMoments printed = frame_moments_closed_form(p, f);
        const FrameMoments truth =
            frame_moments_oracle(build_superposition_state(p), f, spin_one_operators());
        REQUIRE_THAT(printed.jn1_sq, WithinAbs(truth.jn1_sq, 1e-12));
    }
}

TEST_CASE("squeezing formulas", "[closed_form]") {
    const FrameMoments coherent{0.5, 0.5, 0.0};
    CHECK_THAT(squeezing_paper_literal(coherent), WithinAbs(2.0, 1e-15));
    CHECK_THAT(squeezing_standard(coherent), WithinAbs(1.0, 1e-15));
    CHECK(squeezing(coherent, Convention::standard) == squeezing_standard(coherent));
    CHECK(squeezing(coherent, Convention::paper_literal) == squeezing_paper_literal(coherent));

    const double v = 0.37;
    CHECK_THAT(squeezing_paper_literal({v, v, 0.0}), WithinAbs(4.0 * v, 1e-15));
    CHECK_THAT(squeezing_paper_literal({v, v, 0.2}), WithinAbs(2.0 * (2.0 * v - 0.2), 1e-15));
    CHECK_THAT(squeezing_paper_literal({v, v, -0.2}), WithinAbs(2.0 * (2.0 * v - 0.2), 1e-15));

    // Oracle frame moments at (0.6, pi/3, pi/4), frozen from an independent evaluation.
    const FrameMoments generic{0.5648000000000003, 0.43520000000000025, -0.5101566818145189};
    CHECK_THAT(squeezing_standard(generic), WithinAbs(0.4736389072129288, 1e-13));
    CHECK_THAT(min_variance_from_frame_moments(generic), WithinAbs(0.2368194536064644, 1e-13));
}

TEST_CASE("literal squeezing is twice the standard one", "[closed_form][property]") {
    two_qubit::ParamSampler sample(35);
    std::uniform_real_distribution<double> d(0.0, 2.0);
    std::uniform_real_distribution<double> c(-2.0, 2.0);
    for (int k = 0; k < 10000; ++k) {
        const FrameMoments fm{d(sample.rng()), d(sample.rng()), c(sample.rng())};
        REQUIRE_THAT(squeezing_paper_literal(fm), WithinAbs(2.0 * squeezing_standard(fm), 1e-12));
    }
}

TEST_CASE("squeezing is non-negative on physical frame moments", "[closed_form][property]") {
    two_qubit::ParamSampler sample(36);
    for (int k = 0; k < 2000; ++k) {
        const SqueezeParams p(sample.beta(), sample.mu(), sample.nu());
        const StateVector s = build_superposition_state(p);
        const SpinFrame f = compute_frame(moments_oracle(s, spin_one_operators()).mean);
        if (f.status == FrameStatus::fully_degenerate) {
            continue;
        }
        const FrameMoments fm = frame_moments_oracle(s, f, spin_one_operators());
        REQUIRE(fm.jn1_sq >= 0.0);
        REQUIRE(fm.jn2_sq >= 0.0);
        REQUIRE(fm.jn1_sq + fm.jn2_sq <= 2.0 + 1e-12);
        REQUIRE(std::hypot(fm.jn1_sq - fm.jn2_sq, fm.anticomm) <= fm.jn1_sq + fm.jn2_sq + 1e-12);
        REQUIRE(squeezing_standard(fm) >= -1e-12);
    }
}
