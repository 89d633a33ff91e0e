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

#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace squeeze {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

/// Number of spin-1/2 particles in the physical state. Collective spin j = N/2.
inline constexpr int kParticleCount = 2;

/// Thrown when a frame-dependent quantity is requested on a frame with R = 0.
class DegenerateFrameError : public std::domain_error {
  public:
    using std::domain_error::domain_error;
};

/**
 * Spin-j angular momentum matrices in the |j, m> basis ordered m = +j ... -j.
 */
struct SpinOperatorSet {
    double j = 0.0;
    int dim = 0;
    Matrix jx;
    Matrix jy;
    Matrix jz;
    Matrix jplus;
    Matrix jminus;
};

inline constexpr int kDefaultMaxSpinDim = 64;

/// Builds the ladder-operator representation. Throws std::invalid_argument
/// when 2j is not a non-negative integer or 2j+1 exceeds max_dim.
[[nodiscard]] SpinOperatorSet build_spin_operators(double j, int max_dim = kDefaultMaxSpinDim);

/**
 * Physical parameters of the biaxial + Bell superposition.
 *
 * beta in [0, 1] is the Bell-state weight, mu in [0, pi] shapes the biaxial
 * part, nu is the relative phase (any real, radians). alpha = sqrt(1 - beta^2)
 * is derived so alpha^2 + beta^2 = 1 holds by construction.
 */
class SqueezeParams {
  public:
    /// Throws std::invalid_argument on out-of-range or non-finite input.
    SqueezeParams(double beta, double mu, double nu);

    [[nodiscard]] double beta() const noexcept { return beta_; }
    [[nodiscard]] double mu() const noexcept { return mu_; }
    [[nodiscard]] double nu() const noexcept { return nu_; }
    [[nodiscard]] double alpha() const noexcept { return alpha_; }

    /// Same point with nu replaced; used for phase-convention comparisons.
    [[nodiscard]] SqueezeParams with_nu(double nu) const { return {beta_, mu_, nu}; }

  private:
    double beta_;
    double mu_;
    double nu_;
    double alpha_;
};

/// Normalized pure state over the spin basis (|11>, |10>, |1,-1> for j = 1).
class StateVector {
  public:
    /// Throws std::invalid_argument unless |amplitudes| = 1 within 1e-12.
    explicit StateVector(Vector amplitudes);

    [[nodiscard]] const Vector& amplitudes() const noexcept { return amplitudes_; }
    [[nodiscard]] Eigen::Index dim() const noexcept { return amplitudes_.size(); }
    [[nodiscard]] Complex operator[](Eigen::Index i) const { return amplitudes_[i]; }

  private:
    Vector amplitudes_;
};

/// Superposition a cos^2(mu/2)|11> + beta e^{i nu}|10> - a sin^2(mu/2)|1,-1>,
/// a = alpha sqrt(2) / sqrt(1 + cos^2 mu).
[[nodiscard]] StateVector build_superposition_state(const SqueezeParams& params);

/// <psi|op|psi>. Throws std::invalid_argument on dimension mismatch.
[[nodiscard]] Complex expectation(const Matrix& op, const StateVector& state);

}  // namespace squeeze
