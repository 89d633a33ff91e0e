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

#include <Eigen/Dense>

#include "squeeze/closed_form.hpp"
#include "squeeze/frame.hpp"
#include "squeeze/spin_core.hpp"

namespace squeeze {

/// Direct <psi|O|psi> evaluation of every first and second moment.
struct OracleMoments {
    MeanSpin mean;
    MomentSet raising;
    /// symmetric(a, b) = <(J_a J_b + J_b J_a)/2>, a, b in {x, y, z}.
    Eigen::Matrix3d symmetric = Eigen::Matrix3d::Zero();

    /// symmetric - mean mean^T.
    [[nodiscard]] Eigen::Matrix3d covariance() const;
};

/// Requires a j = 1 operator set; throws std::invalid_argument otherwise.
[[nodiscard]] OracleMoments moments_oracle(const StateVector& state, const SpinOperatorSet& ops);

/// <J_n1^2>, <J_n2^2>, <{J_n1, J_n2}> computed from projected matrices.
[[nodiscard]] FrameMoments frame_moments_oracle(const StateVector& state, const SpinFrame& frame,
                                                const SpinOperatorSet& ops);

struct MinimizerConfig {
    int transverse_grid = 4096;
    int polar_grid = 64;
    int azimuth_grid = 128;
    double refine_width = 1e-12;
    /// When false only the eigen route runs; the *_grid fields mirror it.
    bool cross_validate = true;
};

struct TransverseMinimum {
    double lambda_min = 0.0;  ///< smallest eigenvalue of the 2x2 transverse covariance
    double chi_min = 0.0;     ///< in [0, pi), measured from n1 toward n2
    double lambda_grid = 0.0;
    double chi_grid = 0.0;
};

struct DirectionalMinimum {
    double lambda_min = 0.0;
    Vec3 direction = Vec3::UnitZ();
    double lambda_grid = 0.0;
    Vec3 direction_grid = Vec3::UnitZ();
};

/// Minimal Var(J_chi) over n(chi) = n1 cos chi + n2 sin chi. Throws
/// DegenerateFrameError when the frame is fully degenerate.
[[nodiscard]] TransverseMinimum min_transverse_variance(const StateVector& state,
                                                        const SpinFrame& frame,
                                                        const SpinOperatorSet& ops,
                                                        const MinimizerConfig& config = {});

/// Minimal Var(J_u) over every unit vector u. Used when R = 0.
[[nodiscard]] DirectionalMinimum min_variance_all_directions(const StateVector& state,
                                                             const SpinOperatorSet& ops,
                                                             const MinimizerConfig& config = {});

/// Two-qubit concurrence 2|c_uu c_dd - c_ud c_du| of a triplet-basis state.
[[nodiscard]] double concurrence(const StateVector& state);

enum class MinimizationMethod { transverse_eigen, all_directions };

[[nodiscard]] std::string_view to_string(MinimizationMethod method);

struct SqueezeResult {
    double lambda_min = 0.0;
    double chi_min = 0.0;
    double xi2_std = 0.0;
    double xi2_literal = 0.0;
    double concurrence = 0.0;
    FrameStatus frame_status = FrameStatus::fully_degenerate;
    MinimizationMethod method = MinimizationMethod::transverse_eigen;

    SpinFrame frame;
    OracleMoments moments;
    /// Both routes of whichever minimization ran.
    double lambda_grid = 0.0;

    [[nodiscard]] double xi2(Convention convention) const {
        return convention == Convention::standard ? xi2_std : xi2_literal;
    }
};

/// Full oracle pipeline for one parameter point.
[[nodiscard]] SqueezeResult squeeze_oracle(const SqueezeParams& params,
                                           const MinimizerConfig& config = {});

/// Shared j = 1 operator set.
[[nodiscard]] const SpinOperatorSet& spin_one_operators();

}  // namespace squeeze
