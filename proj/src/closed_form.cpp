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
#include "squeeze/closed_form.hpp"

#include <cmath>

namespace squeeze {

namespace {

struct Trig {
    double alpha;
    double beta;
    double cos_mu;
    double sin_mu;
    double q;  // 1 + cos^2 mu
};

Trig trig(const SqueezeParams& p) {
    const double c = std::cos(p.mu());
    return {p.alpha(), p.beta(), c, std::sin(p.mu()), 1.0 + c * c};
}

}  // namespace

std::string_view to_string(Convention convention) {
    return convention == Convention::standard ? "standard" : "paper-literal";
}

MomentSet second_moments_closed_form(const SqueezeParams& params) {
    const Trig t = trig(params);
    const double a2 = t.alpha * t.alpha;
    const double s2 = t.sin_mu * t.sin_mu;
    const double nu = params.nu();

    MomentSet m;
    m.jplus_sq = -a2 * s2 / t.q;
    m.jz_sq = 2.0 * a2 / t.q * (1.0 - 0.5 * s2);
    m.jplus_2jz1 = 2.0 * t.alpha * t.beta / std::sqrt(t.q) *
                   Complex(std::cos(nu), -std::sin(nu) * t.cos_mu);
    return m;
}

CartesianMoments cartesian_from_raising(const MomentSet& moments) {
    constexpr double half_n = 0.5 * kParticleCount;
    return {half_n * (half_n + 1.0) - moments.jz_sq, moments.jplus_sq.real(),
            moments.jplus_sq.imag(), moments.jplus_2jz1.real(), moments.jplus_2jz1.imag()};
}

FrameMoments frame_moments_closed_form(const SqueezeParams& params, const SpinFrame& frame) {
    if (frame.status == FrameStatus::fully_degenerate) {
        throw DegenerateFrameError("frame moments need a non-vanishing mean spin");
    }
    const Trig t = trig(params);
    const double a2 = t.alpha * t.alpha;
    const double b2 = t.beta * t.beta;
    const double s2 = t.sin_mu * t.sin_mu;
    const double cross = 2.0 * t.alpha * t.beta / std::sqrt(t.q);
    const double nu = params.nu();
    const double sn = std::sin(nu);
    const double cn = std::cos(nu);

    const double st = std::sin(frame.theta);
    const double ct = std::cos(frame.theta);
    const double sp = std::sin(frame.phi);
    const double cp = std::cos(frame.phi);

    FrameMoments fm;
    fm.jn1_sq = a2 / t.q * (1.0 - s2 * sp * sp) + b2;
    fm.jn2_sq = -a2 * s2 / (2.0 * t.q) * std::cos(2.0 * frame.phi) * ct * ct + b2 * ct * ct +
                a2 / t.q * (1.0 - 0.5 * s2) * (1.0 + st * st) +
                ct * st * cp * cross * (sn * t.cos_mu - cn);
    fm.anticomm = -a2 * s2 / t.q - cross * st * (sp * cn + cp * sn * t.cos_mu);
    return fm;
}

double min_variance_from_frame_moments(const FrameMoments& fm) {
    return 0.5 * ((fm.jn1_sq + fm.jn2_sq) - std::hypot(fm.jn1_sq - fm.jn2_sq, fm.anticomm));
}

double squeezing_paper_literal(const FrameMoments& fm) {
    const double min_uncertainty =
        (fm.jn1_sq + fm.jn2_sq) - std::hypot(fm.jn1_sq - fm.jn2_sq, fm.anticomm);
    return 4.0 * min_uncertainty / kParticleCount;
}

double squeezing_standard(const FrameMoments& fm) {
    return 4.0 * min_variance_from_frame_moments(fm) / kParticleCount;
}

double squeezing(const FrameMoments& fm, Convention convention) {
    return convention == Convention::standard ? squeezing_standard(fm)
                                              : squeezing_paper_literal(fm);
}

}  // namespace squeeze
