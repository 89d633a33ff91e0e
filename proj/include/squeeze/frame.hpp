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

#include <string_view>
#include <utility>

#include <Eigen/Dense>

#include "squeeze/spin_core.hpp"

namespace squeeze {

using Vec3 = Eigen::Vector3d;

/// First moments (<Jx>, <Jy>, <Jz>), hbar = 1.
struct MeanSpin {
    double jx = 0.0;
    double jy = 0.0;
    double jz = 0.0;

    [[nodiscard]] Vec3 vec() const { return {jx, jy, jz}; }
};

enum class FrameStatus { regular, polar_degenerate, fully_degenerate };

[[nodiscard]] std::string_view to_string(FrameStatus status);

/**
 * Mean-spin frame. Rows n1, n2 span the plane orthogonal to the mean spin,
 * n3 points along it:
 *
 *   n1 = (-sin phi,           cos phi,           0        )
 *   n2 = (-cos theta cos phi, -cos theta sin phi, sin theta)
 *   n3 = ( sin theta cos phi,  sin theta sin phi, cos theta)
 *
 * For polar-degenerate frames phi is pinned to 0. A fully-degenerate frame
 * (R < eps) carries the theta = phi = 0 axes as placeholders only.
 */
struct SpinFrame {
    Vec3 n1 = Vec3::UnitY();
    Vec3 n2 = -Vec3::UnitX();
    Vec3 n3 = Vec3::UnitZ();
    double theta = 0.0;
    double phi = 0.0;
    double r = 0.0;
    FrameStatus status = FrameStatus::fully_degenerate;

    /// Rows n1, n2, n3.
    [[nodiscard]] Eigen::Matrix3d rotation() const;
};

inline constexpr double kDefaultFrameEps = 1e-12;

/// Closed-form first moments, evaluated exactly as printed (including the
/// negative sign on <Jy>).
[[nodiscard]] MeanSpin mean_spin_closed_form(const SqueezeParams& params);

[[nodiscard]] double mean_spin_length(const MeanSpin& ms);

/// R = 2 alpha/(1+cos^2 mu) * sqrt(beta^2 cos^2 nu cos^4 mu + beta^2 sin^2 nu + cos^2 mu).
[[nodiscard]] double mean_spin_length_closed_form(const SqueezeParams& params);

/// Throws std::invalid_argument for non-finite components or eps <= 0.
[[nodiscard]] SpinFrame compute_frame(const MeanSpin& ms, double eps = kDefaultFrameEps);

/// Spin component along an arbitrary real direction, n.x Jx + n.y Jy + n.z Jz.
[[nodiscard]] Matrix project_operator(const Vec3& direction, const SpinOperatorSet& ops);

/// (J_n1, J_n2). Throws DegenerateFrameError on a fully-degenerate frame.
[[nodiscard]] std::pair<Matrix, Matrix> project_transverse_operators(const SpinFrame& frame,
                                                                     const SpinOperatorSet& ops);

}  // namespace squeeze
