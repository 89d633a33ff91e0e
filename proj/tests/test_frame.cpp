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

#include "squeeze/frame.hpp"
#include "squeeze/oracle.hpp"
#include "two_qubit_oracle.hpp"

using namespace squeeze;
using Catch::Matchers::WithinAbs;

namespace {

constexpr double pi = std::numbers::pi;

MeanSpin oracle_mean(const SqueezeParams& p) {
    const Eigen::Vector3d m =
        two_qubit::mean_spin(two_qubit::superposition(p.beta(), p.mu(), p.nu()));
    return {m.x(), m.y(), m.z()};
}

/// Angles written as two-branch arccos expressions, for comparison.
std::pair<double, double> literal_angles(const MeanSpin& ms) {
    const double r = std::sqrt(ms.jx * ms.jx + ms.jy * ms.jy + ms.jz * ms.jz);
    const double theta = std::acos(std::clamp(ms.jz / r, -1.0, 1.0));
    const double base = std::acos(std::clamp(ms.jx / (r * std::sin(theta)), -1.0, 1.0));
    return {theta, ms.jy > 0.0 ? base : 2.0 * pi - base};
}

}  // namespace

TEST_CASE("closed-form mean spin", "[frame]") {
    SECTION("generic point, as printed") {
        const MeanSpin ms = mean_spin_closed_form({0.6, pi / 3, pi / 4});
        // 6-decimal values, then the full values from an independent evaluation
        CHECK_THAT(ms.jx, WithinAbs(0.303578, 1e-6));
        CHECK_THAT(ms.jy, WithinAbs(-0.607157, 1e-6));
        CHECK_THAT(ms.jz, WithinAbs(0.512000, 1e-6));
        CHECK_THAT(ms.jx, WithinAbs(0.30357865537616446, 1e-14));
        CHECK_THAT(ms.jy, WithinAbs(-0.6071573107523287, 1e-14));
        CHECK_THAT(ms.jz, WithinAbs(0.5120000000000002, 1e-14));
    }
    SECTION("coherent state") {
        const MeanSpin ms = mean_spin_closed_form({0.0, 0.0, 1.3});
        CHECK(ms.jx == 0.0);
        CHECK(ms.jy == 0.0);
        CHECK_THAT(ms.jz, WithinAbs(1.0, 1e-15));
    }
    SECTION("mu = pi/2, nu = 0 vanishes") {
        const MeanSpin ms = mean_spin_closed_form({0.4, pi / 2, 0.0});
        CHECK_THAT(mean_spin_length(ms), WithinAbs(0.0, 1e-15));
    }
}

TEST_CASE("printed <Jy> carries the opposite phase sign to the state", "[frame]") {
    two_qubit::ParamSampler sample(21);
    for (int k = 0; k < 300; ++k) {
        const SqueezeParams p(sample.beta(), sample.mu(), sample.nu());
        const MeanSpin truth = oracle_mean(p);
        const MeanSpin printed = mean_spin_closed_form(p);
        const MeanSpin negated = mean_spin_closed_form(p.with_nu(-p.nu()));
        REQUIRE_THAT(printed.jx, WithinAbs(truth.jx, 1e-12));
        REQUIRE_THAT(printed.jz, WithinAbs(truth.jz, 1e-12));
        REQUIRE_THAT(printed.jy, WithinAbs(-truth.jy, 1e-12));
        REQUIRE_THAT(negated.jy, WithinAbs(truth.jy, 1e-12));
    }
}

TEST_CASE("mean spin length", "[frame]") {
    CHECK(mean_spin_length({0, 0, 1}) == 1.0);
    CHECK(mean_spin_length({0, 0, 0}) == 0.0);
    const SqueezeParams p(0.6, pi / 3, pi / 4);
    CHECK_THAT(mean_spin_length(mean_spin_closed_form(p)), WithinAbs(0.850261, 5e-7));
    CHECK_THAT(mean_spin_length_closed_form(p), WithinAbs(0.850261, 5e-7));
}

TEST_CASE("closed-form length reductions", "[frame]") {
    for (double beta : {0.0, 0.1, 0.35, 0.5, 0.8, 0.99, 1.0}) {
        CAPTURE(beta);
        const double alpha = std::sqrt(1.0 - beta * beta);
        CHECK_THAT(mean_spin_length_closed_form({beta, 0.0, 0.9}),
                   WithinAbs(std::sqrt(1.0 - std::pow(beta, 4)), 1e-12));
        for (double nu : {-pi / 3, 0.0, 0.4, pi / 2, 2.0}) {
            CHECK_THAT(mean_spin_length_closed_form({beta, pi / 2, nu}),
                       WithinAbs(2.0 * alpha * beta * std::abs(std::sin(nu)), 1e-12));
        }
    }
}

TEST_CASE("length: norm of printed moments equals the length formula", "[frame][property]") {
    two_qubit::ParamSampler sample(22);
    double worst = 0.0;
    for (int k = 0; k < 10000; ++k) {
        const SqueezeParams p(sample.beta(), sample.mu(), sample.nu());
        worst = std::max(worst, std::abs(mean_spin_length(mean_spin_closed_form(p)) -
                                         mean_spin_length_closed_form(p)));
        REQUIRE(mean_spin_length_closed_form(p) <= 1.0 + 1e-12);
    }
    CHECK(worst <= 1e-12);
}

TEST_CASE("frame at the poles and at the origin", "[frame]") {
    SECTION("north pole") {
        const SpinFrame f = compute_frame({0, 0, 1});
        CHECK(f.status == FrameStatus::polar_degenerate);
        CHECK(f.theta == 0.0);
        CHECK(f.phi == 0.0);
        CHECK((f.n3 - Vec3(0, 0, 1)).norm() < 1e-15);
        CHECK((f.n1.cross(f.n2) - f.n3).norm() < 1e-15);
    }
    SECTION("south pole stays right-handed") {
        const SpinFrame f = compute_frame({0, 0, -0.5});
        CHECK(f.status == FrameStatus::polar_degenerate);
        CHECK_THAT(f.theta, WithinAbs(pi, 1e-15));
        CHECK((f.n3 - Vec3(0, 0, -1)).norm() < 1e-15);
        CHECK((f.n1.cross(f.n2) - f.n3).norm() < 1e-15);
    }
    SECTION("origin") {
        CHECK(compute_frame({0, 0, 0}).status == FrameStatus::fully_degenerate);
        CHECK(compute_frame({1e-13, 0, 0}).status == FrameStatus::fully_degenerate);
    }
}

TEST_CASE("frame along +x", "[frame]") {
    const double r = 1.0 / std::numbers::sqrt2;
    const SpinFrame f = compute_frame({r, 0, 0});
    CHECK(f.status == FrameStatus::regular);
    CHECK_THAT(f.r, WithinAbs(r, 1e-15));
    CHECK_THAT(f.theta, WithinAbs(pi / 2, 1e-15));
    CHECK(f.phi == 0.0);
    CHECK((f.n1 - Vec3(0, 1, 0)).norm() < 1e-15);
    CHECK((f.n2 - Vec3(0, 0, 1)).norm() < 1e-15);
    CHECK((f.n3 - Vec3(1, 0, 0)).norm() < 1e-15);
}

TEST_CASE("azimuth branch follows the sign of <Jy>", "[frame]") {
    const SpinFrame above = compute_frame({0.5, 1e-9, 0.2});
    const SpinFrame below = compute_frame({0.5, -1e-9, 0.2});
    CHECK_THAT(above.phi, WithinAbs(0.0, 1e-8));
    CHECK(above.phi > 0.0);
    CHECK_THAT(below.phi, WithinAbs(2 * pi, 1e-8));
    CHECK(below.phi < 2 * pi);

    // <Jy> = 0 takes the second branch: 2 pi - acos(-1) = pi for <Jx> < 0.
    CHECK_THAT(compute_frame({-0.5, 0.0, 0.2}).phi, WithinAbs(pi, 1e-15));
    CHECK_THAT(compute_frame({-0.5, -0.0, 0.2}).phi, WithinAbs(pi, 1e-15));
    CHECK(compute_frame({0.5, -0.0, 0.2}).phi == 0.0);
}

TEST_CASE("frame angles agree with the arccos forms", "[frame][property]") {
    two_qubit::ParamSampler sample(23);
    for (int k = 0; k < 2000; ++k) {
        const MeanSpin ms = oracle_mean({sample.beta(), sample.mu(), sample.nu()});
        const SpinFrame f = compute_frame(ms);
        if (f.status != FrameStatus::regular) {
            continue;
        }
        const auto [theta, phi] = literal_angles(ms);
        REQUIRE_THAT(f.theta, WithinAbs(theta, 1e-7));
        // phi = 2 pi and phi = 0 are the same azimuth
        REQUIRE_THAT(std::remainder(f.phi - phi, 2 * pi), WithinAbs(0.0, 1e-7));
        REQUIRE(f.phi >= 0.0);
        REQUIRE(f.phi < 2 * pi);
    }
}

TEST_CASE("regular frames are special orthogonal and aligned", "[frame][property]") {
    two_qubit::ParamSampler sample(24);
    int regular = 0;
    for (int k = 0; k < 5000; ++k) {
        const MeanSpin ms = oracle_mean({sample.beta(), sample.mu(), sample.nu()});
        const SpinFrame f = compute_frame(ms);
        if (f.status != FrameStatus::regular) {
            continue;
        }
        ++regular;
        const Eigen::Matrix3d rot = f.rotation();
        REQUIRE((rot * rot.transpose() - Eigen::Matrix3d::Identity()).cwiseAbs().maxCoeff() <
                1e-12);
        REQUIRE_THAT(rot.determinant(), WithinAbs(1.0, 1e-12));
        REQUIRE((f.n1.cross(f.n2) - f.n3).norm() < 1e-12);
        REQUIRE((f.n3 - ms.vec() / f.r).cwiseAbs().maxCoeff() < 1e-12);
    }
    CHECK(regular > 4000);
}

TEST_CASE("compute_frame rejects bad input", "[frame]") {
    CHECK_THROWS_AS(compute_frame({0, 0, 1}, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(compute_frame({std::nan(""), 0, 1}), std::invalid_argument);
}

TEST_CASE("transverse operator projection", "[frame]") {
    const SpinOperatorSet& ops = spin_one_operators();
    const auto diff = [](const Matrix& a, const Matrix& b) { return (a - b).cwiseAbs().maxCoeff(); };

    SECTION("theta = pi/2, phi = 0") {
        const auto [jn1, jn2] = project_transverse_operators(compute_frame({0.3, 0, 0}), ops);
        CHECK(diff(jn1, ops.jy) < 1e-15);
        CHECK(diff(jn2, ops.jz) < 1e-15);
    }
    SECTION("theta = 0, phi = 0") {
        const auto [jn1, jn2] = project_transverse_operators(compute_frame({0, 0, 1}), ops);
        CHECK(diff(jn1, ops.jy) < 1e-15);
        CHECK(diff(jn2, -ops.jx) < 1e-15);
    }
    SECTION("fully degenerate frame") {
        CHECK_THROWS_AS(project_transverse_operators(compute_frame({0, 0, 0}), ops),
                        DegenerateFrameError);
    }
    SECTION("generic point has zero transverse means") {
        const StateVector s = build_superposition_state({0.6, pi / 3, pi / 4});
        const SpinFrame f = compute_frame(moments_oracle(s, ops).mean);
        const auto [jn1, jn2] = project_transverse_operators(f, ops);
        CHECK(std::abs(expectation(jn1, s)) < 1e-10);
        CHECK(std::abs(expectation(jn2, s)) < 1e-10);
        CHECK((jn1 - jn1.adjoint()).cwiseAbs().maxCoeff() < 1e-15);
        CHECK((jn2 - jn2.adjoint()).cwiseAbs().maxCoeff() < 1e-15);
    }
}
