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
#include "squeeze/oracle.hpp"

#include <algorithm>
#include <array>
#include <initializer_list>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace squeeze {

namespace {

constexpr double kPi = std::numbers::pi;

/// Golden-section search for a minimum of f on [lo, hi].
template <class F>
double golden_section(F&& f, double lo, double hi, double width) {
    constexpr double inv_phi = 0.6180339887498949;
    double x1 = hi - inv_phi * (hi - lo);
    double x2 = lo + inv_phi * (hi - lo);
    double f1 = f(x1);
    double f2 = f(x2);
    while (hi - lo > width) {
        if (f1 <= f2) {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - inv_phi * (hi - lo);
            f1 = f(x1);
        } else {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + inv_phi * (hi - lo);
            f2 = f(x2);
        }
    }
    return 0.5 * (lo + hi);
}

/// Var(J_u) evaluated straight from the state: |J_u psi|^2 - (Re <psi|J_u psi>)^2,
/// where J_u psi is assembled from precomputed component images.
class DirectVariance {
  public:
    DirectVariance(const StateVector& state, std::initializer_list<const Matrix*> components)
        : psi_(state.amplitudes()) {
        for (const Matrix* op : components) {
            images_.push_back(*op * psi_);
        }
    }

    template <class Coeffs>
    double operator()(const Coeffs& coeffs) const {
        Vector image = Vector::Zero(psi_.size());
        for (std::size_t k = 0; k < images_.size(); ++k) {
            image += coeffs[k] * images_[k];
        }
        const double mean = psi_.dot(image).real();
        return image.squaredNorm() - mean * mean;
    }

  private:
    const Vector& psi_;
    std::vector<Vector> images_;
};

double wrap_half_turn(double chi) {
    chi = std::fmod(chi, kPi);
    if (chi < 0.0) {
        chi += kPi;
    }
    if (chi >= kPi) {
        chi = 0.0;
    }
    return chi + 0.0;
}

Vec3 canonical_sign(Vec3 u) {
    Eigen::Index largest = 0;
    u.cwiseAbs().maxCoeff(&largest);
    return u[largest] < 0.0 ? Vec3(-u) : u;
}

Vec3 from_spherical(double theta, double phi) {
    return {std::sin(theta) * std::cos(phi), std::sin(theta) * std::sin(phi), std::cos(theta)};
}

/// Any unit vector orthogonal to u.
Vec3 tangent(const Vec3& u) {
    const Vec3 seed = std::abs(u.x()) < 0.9 ? Vec3::UnitX() : Vec3::UnitY();
    return (seed - seed.dot(u) * u).normalized();
}

}  // namespace

std::string_view to_string(MinimizationMethod method) {
    return method == MinimizationMethod::transverse_eigen ? "transverse-eigen" : "all-directions";
}

const SpinOperatorSet& spin_one_operators() {
    static const SpinOperatorSet ops = build_spin_operators(1.0);
    return ops;
}

Eigen::Matrix3d OracleMoments::covariance() const {
    const Vec3 m = mean.vec();
    return symmetric - m * m.transpose();
}

OracleMoments moments_oracle(const StateVector& state, const SpinOperatorSet& ops) {
    if (ops.dim != 3 || state.dim() != 3) {
        throw std::invalid_argument("moments oracle expects a j = 1 state and operator set");
    }
    const std::array<const Matrix*, 3> axes{&ops.jx, &ops.jy, &ops.jz};

    OracleMoments out;
    out.mean = {expectation(ops.jx, state).real(), expectation(ops.jy, state).real(),
                expectation(ops.jz, state).real()};
    for (int a = 0; a < 3; ++a) {
        for (int b = a; b < 3; ++b) {
            const Matrix sym = 0.5 * (*axes[a] * *axes[b] + *axes[b] * *axes[a]);
            out.symmetric(a, b) = expectation(sym, state).real();
            out.symmetric(b, a) = out.symmetric(a, b);
        }
    }
    const Matrix identity = Matrix::Identity(3, 3);
    out.raising.jplus_sq = expectation(ops.jplus * ops.jplus, state);
    out.raising.jz_sq = out.symmetric(2, 2);
    out.raising.jplus_2jz1 = expectation(ops.jplus * (2.0 * ops.jz + identity), state);
    return out;
}

FrameMoments frame_moments_oracle(const StateVector& state, const SpinFrame& frame,
                                  const SpinOperatorSet& ops) {
    const auto [jn1, jn2] = project_transverse_operators(frame, ops);
    return {expectation(jn1 * jn1, state).real(), expectation(jn2 * jn2, state).real(),
            expectation(jn1 * jn2 + jn2 * jn1, state).real()};
}

TransverseMinimum min_transverse_variance(const StateVector& state, const SpinFrame& frame,
                                          const SpinOperatorSet& ops,
                                          const MinimizerConfig& config) {
    const auto [jn1, jn2] = project_transverse_operators(frame, ops);

    // Route (a): 2x2 covariance eigenvalue.
    const double m1 = expectation(jn1, state).real();
    const double m2 = expectation(jn2, state).real();
    const double g11 = expectation(jn1 * jn1, state).real() - m1 * m1;
    const double g22 = expectation(jn2 * jn2, state).real() - m2 * m2;
    const double g12 = 0.5 * expectation(jn1 * jn2 + jn2 * jn1, state).real() - m1 * m2;
    const double spread = std::hypot(g11 - g22, 2.0 * g12);

    TransverseMinimum out;
    out.lambda_min = 0.5 * ((g11 + g22) - spread);
    // Var(chi) = (g11+g22)/2 + spread/2 cos(2 chi - delta); minimum at 2 chi = delta + pi.
    out.chi_min = spread < 1e-12 ? 0.0
                                 : wrap_half_turn(0.5 * (std::atan2(2.0 * g12, g11 - g22) + kPi));

    if (!config.cross_validate) {
        out.lambda_grid = out.lambda_min;
        out.chi_grid = out.chi_min;
        return out;
    }

    // Route (b): uniform grid over [0, pi) then golden-section refinement.
    const DirectVariance variance(state, {&jn1, &jn2});
    const auto along = [&](double chi) {
        return variance(std::array<double, 2>{std::cos(chi), std::sin(chi)});
    };
    const int n = std::max(config.transverse_grid, 8);
    const double step = kPi / n;
    int best = 0;
    double best_value = along(0.0);
    for (int k = 1; k < n; ++k) {
        const double v = along(k * step);
        if (v < best_value) {
            best_value = v;
            best = k;
        }
    }
    const double refined =
        golden_section(along, best * step - step, best * step + step, config.refine_width);
    const double refined_value = along(refined);
    if (refined_value < best_value) {
        out.lambda_grid = refined_value;
        out.chi_grid = wrap_half_turn(refined);
    } else {
        out.lambda_grid = best_value;
        out.chi_grid = best * step;
    }
    return out;
}

DirectionalMinimum min_variance_all_directions(const StateVector& state,
                                               const SpinOperatorSet& ops,
                                               const MinimizerConfig& config) {
    DirectionalMinimum out;
    const Eigen::SelfAdjointEigenSolver<Eigen::Matrix3d> solver(
        moments_oracle(state, ops).covariance());
    out.lambda_min = solver.eigenvalues()(0);
    out.direction = canonical_sign(solver.eigenvectors().col(0));

    if (!config.cross_validate) {
        out.lambda_grid = out.lambda_min;
        out.direction_grid = out.direction;
        return out;
    }

    const DirectVariance variance(state, {&ops.jx, &ops.jy, &ops.jz});
    const int polar = std::max(config.polar_grid, 4);
    const int azimuth = std::max(config.azimuth_grid, 4);
    const double polar_step = kPi / (polar - 1);
    const double azimuth_step = 2.0 * kPi / azimuth;

    Vec3 best = Vec3::UnitZ();
    double best_value = variance(best);
    for (int i = 0; i < polar; ++i) {
        for (int k = 0; k < azimuth; ++k) {
            const Vec3 u = from_spherical(i * polar_step, k * azimuth_step);
            const double v = variance(u);
            if (v < best_value) {
                best_value = v;
                best = u;
            }
        }
    }

    // Local refinement: alternate line searches along two tangent directions,
    // re-centring the chart on the current best point each time.
    double half_width = std::max(polar_step, azimuth_step);
    for (int pass = 0; pass < 200 && half_width > 1e-10; ++pass) {
        double largest_move = 0.0;
        for (int axis = 0; axis < 2; ++axis) {
            const Vec3 t1 = tangent(best);
            const Vec3 t = axis == 0 ? t1 : Vec3(best.cross(t1));
            const auto along = [&](double s) { return variance(Vec3((best + s * t).normalized())); };
            const double s = golden_section(along, -half_width, half_width, config.refine_width);
            const double v = along(s);
            if (v < best_value) {
                best_value = v;
                best = (best + s * t).normalized();
                largest_move = std::max(largest_move, std::abs(s));
            }
        }
        half_width = std::min(half_width, std::max(4.0 * largest_move, 0.5 * half_width));
    }
    out.lambda_grid = best_value;
    out.direction_grid = canonical_sign(best);
    return out;
}

double concurrence(const StateVector& state) {
    if (state.dim() != 3) {
        throw std::invalid_argument("concurrence expects a triplet-basis state");
    }
    const Complex up_up = state[0];
    const Complex up_down = state[1] / std::numbers::sqrt2;
    const Complex down_down = state[2];
    return std::min(1.0, 2.0 * std::abs(up_up * down_down - up_down * up_down));
}

SqueezeResult squeeze_oracle(const SqueezeParams& params, const MinimizerConfig& config) {
    const SpinOperatorSet& ops = spin_one_operators();
    const StateVector state = build_superposition_state(params);

    SqueezeResult out;
    out.moments = moments_oracle(state, ops);
    out.frame = compute_frame(out.moments.mean);
    out.frame_status = out.frame.status;
    out.concurrence = concurrence(state);

    if (out.frame.status == FrameStatus::fully_degenerate) {
        const DirectionalMinimum dm = min_variance_all_directions(state, ops, config);
        out.method = MinimizationMethod::all_directions;
        out.lambda_min = dm.lambda_min;
        out.lambda_grid = dm.lambda_grid;
        out.chi_min = 0.0;
    } else {
        const TransverseMinimum tm = min_transverse_variance(state, out.frame, ops, config);
        out.method = MinimizationMethod::transverse_eigen;
        out.lambda_min = tm.lambda_min;
        out.lambda_grid = tm.lambda_grid;
        out.chi_min = tm.chi_min;
    }
    out.lambda_min = std::max(0.0, out.lambda_min);
    out.xi2_std = 4.0 * out.lambda_min / kParticleCount;
    out.xi2_literal = 2.0 * out.xi2_std;
    return out;
}

}  // namespace squeeze
