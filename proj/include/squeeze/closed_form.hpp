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

#include "squeeze/frame.hpp"
#include "squeeze/spin_core.hpp"

namespace squeeze {

/// <J+^2>, <Jz^2>, <J+(2Jz+1)>.
struct MomentSet {
    Complex jplus_sq{};
    double jz_sq = 0.0;
    Complex jplus_2jz1{};
};

/// Symmetrized Cartesian second moments recovered from a MomentSet.
struct CartesianMoments {
    double jx2_plus_jy2 = 0.0;
    double jx2_minus_jy2 = 0.0;
    double xy_anticomm = 0.0;  ///< <JxJy + JyJx>
    double xz_anticomm = 0.0;
    double yz_anticomm = 0.0;
};

/// <J_n1^2>, <J_n2^2>, <J_n1 J_n2 + J_n2 J_n1>.
struct FrameMoments {
    double jn1_sq = 0.0;
    double jn2_sq = 0.0;
    double anticomm = 0.0;
};

enum class Convention { standard, paper_literal };

[[nodiscard]] std::string_view to_string(Convention convention);

[[nodiscard]] MomentSet second_moments_closed_form(const SqueezeParams& params);

/// Angular-momentum identities at N = 2:
///   <Jx^2 + Jy^2> = N/2 (N/2 + 1) - <Jz^2>
///   <Jx^2 - Jy^2> = Re <J+^2>,          <{Jx,Jy}> = Im <J+^2>
///   <{Jx,Jz}>     = Re <J+(2Jz+1)>,     <{Jy,Jz}> = Im <J+(2Jz+1)>
[[nodiscard]] CartesianMoments cartesian_from_raising(const MomentSet& moments);

/// Printed closed forms for the frame moments, evaluated at the frame's
/// (theta, phi). Throws DegenerateFrameError on a fully-degenerate frame.
[[nodiscard]] FrameMoments frame_moments_closed_form(const SqueezeParams& params,
                                                     const SpinFrame& frame);

/// Half-corrected minimal transverse variance
/// 1/2 [(A + B) - sqrt((A - B)^2 + C^2)].
[[nodiscard]] double min_variance_from_frame_moments(const FrameMoments& fm);

/// xi^2 with the minimal variance taken as (A + B) - sqrt((A - B)^2 + C^2),
/// i.e. without the 1/2. Equals 2 * squeezing_standard.
[[nodiscard]] double squeezing_paper_literal(const FrameMoments& fm);

/// xi^2 = 4 lambda_min / N with the half-corrected minimal variance.
/// A coherent state gives exactly 1.
[[nodiscard]] double squeezing_standard(const FrameMoments& fm);

[[nodiscard]] double squeezing(const FrameMoments& fm, Convention convention);

}  // namespace squeeze
