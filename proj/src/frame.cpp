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
#include "squeeze/frame.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace squeeze {

std::string_view to_string(FrameStatus status) {
    switch (status) {
    case FrameStatus::regular:
        return "regular";
    case FrameStatus::polar_degenerate:
        return "polar-degenerate";
    case FrameStatus::fully_degenerate:
        return "fully-degenerate";
    }
    return "unknown";
}

Eigen::Matrix3d SpinFrame::rotation() const {
    Eigen::Matrix3d rot;
    rot.row(0) = n1.transpose();
    rot.row(1) = n2.transpose();
    rot.row(2) = n3.transpose();
    return rot;
}

MeanSpin mean_spin_closed_form(const SqueezeParams& params) {
    const double alpha = params.alpha();
    const double beta = params.beta();
    const double c = std::cos(params.mu());
    const double q = 1.0 + c * c;
    const double cross = 2.0 * alpha * beta / std::sqrt(q);
    return {cross * std::cos(params.nu()) * c, -cross * std::sin(params.nu()),
            2.0 * alpha * alpha / q * c};
}

double mean_spin_length(const MeanSpin& ms) { return std::hypot(ms.jx, ms.jy, ms.jz); }

double mean_spin_length_closed_form(const SqueezeParams& params) {
    const double beta = params.beta();
    const double c = std::cos(params.mu());
    const double c2 = c * c;
    const double cn = std::cos(params.nu());
    const double sn = std::sin(params.nu());
    const double radicand = beta * beta * cn * cn * c2 * c2 + beta * beta * sn * sn + c2;
    return 2.0 * params.alpha() / (1.0 + c2) * std::sqrt(radicand);
}

SpinFrame compute_frame(const MeanSpin& ms, double eps) {
    if (!(eps > 0.0)) {
        throw std::invalid_argument("frame tolerance must be positive");
    }
    if (!std::isfinite(ms.jx) || !std::isfinite(ms.jy) || !std::isfinite(ms.jz)) {
        throw std::invalid_argument("mean spin components must be finite");
    }

    SpinFrame frame;
    frame.r = mean_spin_length(ms);
    if (frame.r < eps) {
        frame.status = FrameStatus::fully_degenerate;
        return frame;
    }

    // atan2 forms of theta = acos(Jz/R) and the two-branch azimuth; the acos
    // forms lose ~1e-8 near +-1.
    const double rho = std::hypot(ms.jx, ms.jy);
    const double sin_theta = rho / frame.r;
    const double cos_theta = ms.jz / frame.r;
    frame.theta = std::atan2(rho, ms.jz);

    double sin_phi = 0.0;
    double cos_phi = 1.0;
    if (sin_theta < eps) {
        frame.status = FrameStatus::polar_degenerate;
        frame.phi = 0.0;
    } else {
        frame.status = FrameStatus::regular;
        sin_phi = ms.jy / rho;
        cos_phi = ms.jx / rho;
        double phi = std::atan2(ms.jy, ms.jx);
        if (phi < 0.0) {
            phi += 2.0 * std::numbers::pi;
        }
        // Jy = 0, Jx > 0 lands on 2 pi in the <= branch; same direction as 0.
        if (phi >= 2.0 * std::numbers::pi) {
            phi = 0.0;
        }
        frame.phi = phi + 0.0;
    }

    frame.n1 = Vec3(-sin_phi, cos_phi, 0.0);
    frame.n2 = Vec3(-cos_theta * cos_phi, -cos_theta * sin_phi, sin_theta);
    frame.n3 = Vec3(sin_theta * cos_phi, sin_theta * sin_phi, cos_theta);
    return frame;
}

Matrix project_operator(const Vec3& direction, const SpinOperatorSet& ops) {
    return direction.x() * ops.jx + direction.y() * ops.jy + direction.z() * ops.jz;
}

std::pair<Matrix, Matrix> project_transverse_operators(const SpinFrame& frame,
                                                       const SpinOperatorSet& ops) {
    if (frame.status == FrameStatus::fully_degenerate) {
        throw DegenerateFrameError("mean spin vanishes; transverse plane undefined");
    }
    return {project_operator(frame.n1, ops), project_operator(frame.n2, ops)};
}

}  // namespace squeeze
