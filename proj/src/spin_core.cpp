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
#include "squeeze/spin_core.hpp"

#include <cmath>
#include <numbers>

namespace squeeze {

SpinOperatorSet build_spin_operators(double j, int max_dim) {
    const double twice_j = 2.0 * j;
    if (!std::isfinite(j) || j < 0.0 || std::abs(twice_j - std::round(twice_j)) > 1e-12) {
        throw std::invalid_argument("spin quantum number must be a non-negative half-integer");
    }
    const int dim = static_cast<int>(std::lround(twice_j)) + 1;
    if (dim > max_dim) {
        throw std::invalid_argument("spin dimension " + std::to_string(dim) +
                                    " exceeds maximum " + std::to_string(max_dim));
    }
    j = 0.5 * (dim - 1);

    SpinOperatorSet ops;
    ops.j = j;
    ops.dim = dim;
    ops.jz = Matrix::Zero(dim, dim);
    ops.jplus = Matrix::Zero(dim, dim);
    for (int k = 0; k < dim; ++k) {
        const double m = j - k;
        ops.jz(k, k) = m;
        // <m+1| J+ |m> sits one row above m in the descending basis.
        if (k > 0) {
            ops.jplus(k - 1, k) = std::sqrt(j * (j + 1.0) - m * (m + 1.0));
        }
    }
    ops.jminus = ops.jplus.adjoint();
    ops.jx = 0.5 * (ops.jplus + ops.jminus);
    ops.jy = Complex(0.0, -0.5) * (ops.jplus - ops.jminus);
    return ops;
}

SqueezeParams::SqueezeParams(double beta, double mu, double nu)
    : beta_(beta), mu_(mu), nu_(nu), alpha_(0.0) {
    if (!std::isfinite(beta) || !std::isfinite(mu) || !std::isfinite(nu)) {
        throw std::invalid_argument("parameters must be finite");
    }
    if (beta < 0.0 || beta > 1.0) {
        throw std::invalid_argument("beta must lie in [0, 1]");
    }
    if (mu < 0.0 || mu > std::numbers::pi) {
        throw std::invalid_argument("mu must lie in [0, pi]");
    }
    alpha_ = std::sqrt((1.0 - beta) * (1.0 + beta));
}

StateVector::StateVector(Vector amplitudes) : amplitudes_(std::move(amplitudes)) {
    if (amplitudes_.size() == 0 || !amplitudes_.allFinite()) {
        throw std::invalid_argument("state amplitudes must be finite and non-empty");
    }
    if (std::abs(amplitudes_.norm() - 1.0) > 1e-12) {
        throw std::invalid_argument("state vector is not normalized");
    }
}

StateVector build_superposition_state(const SqueezeParams& params) {
    const double mu = params.mu();
    const double c = std::cos(mu);
    const double a = params.alpha() * std::numbers::sqrt2 / std::sqrt(1.0 + c * c);
    const double half_cos = std::cos(0.5 * mu);
    const double half_sin = std::sin(0.5 * mu);

    Vector psi(3);
    psi << a * half_cos * half_cos, params.beta() * std::polar(1.0, params.nu()),
        -a * half_sin * half_sin;
    return StateVector(std::move(psi));
}

Complex expectation(const Matrix& op, const StateVector& state) {
    const Vector& psi = state.amplitudes();
    if (op.rows() != psi.size() || op.cols() != psi.size()) {
        throw std::invalid_argument("operator and state dimensions differ");
    }
    return psi.dot(op * psi);
}

}  // namespace squeeze
