// Copyright 2026 The qac Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qac/qubit.hpp"

#include <algorithm>
#include <cmath>

#include "qac/errors.hpp"

namespace qac {

double BlochVector::norm() const { return std::sqrt(dot(*this)); }

BlochVector BlochVector::normalized() const {
    const double n = norm();
    if (n == 0.0) throw InputError("cannot normalize a zero Bloch vector");
    return *this * (1.0 / n);
}

QubitState QubitState::from_ket(const CVector &v) {
    if (v.dim() != 2) throw InputError("qubit ket must have two amplitudes");
    return {v[0], v[1]};
}

QubitState QubitState::canonical() const {
    constexpr double kThreshold = 1e-12;
    const cplx lead = std::abs(alpha) > kThreshold ? alpha : beta;
    const double mag = std::abs(lead);
    if (mag == 0.0) return *this;
    const cplx phase = std::conj(lead) / mag;
    return {alpha * phase, beta * phase};
}

bool QubitState::is_normalized(double tolerance) const {
    return std::abs(std::norm(alpha) + std::norm(beta) - 1.0) <= tolerance;
}

CMatrix bloch_density(const BlochVector &n) {
    return CMatrix{{0.5 * (1.0 + n.nz), 0.5 * cplx(n.nx, -n.ny)},
                   {0.5 * cplx(n.nx, n.ny), 0.5 * (1.0 - n.nz)}};
}

QubitState bloch_to_state(const BlochVector &n) {
    if (std::abs(n.norm() - 1.0) > tol::kStructural) {
        throw InputError("bloch_to_state: Bloch vector is not a unit vector");
    }
    const double nz = std::clamp(n.nz, -1.0, 1.0);
    const double cos_half = std::sqrt(0.5 * (1.0 + nz));
    const double sin_half = std::sqrt(0.5 * (1.0 - nz));
    const double transverse = std::hypot(n.nx, n.ny);
    // At the poles the azimuth is undefined; phi = 0 keeps beta real non-negative.
    const cplx phase = transverse > 0.0 ? cplx(n.nx, n.ny) / transverse : cplx(1.0, 0.0);
    return {cos_half, sin_half * phase};
}

void require_density2(const CMatrix &rho, double tolerance) {
    if (rho.rows() != 2 || rho.cols() != 2) throw InputError("expected a 2x2 density matrix");
    if (!rho.is_hermitian(tolerance)) throw InputError("density matrix is not Hermitian");
    if (std::abs(rho.trace() - 1.0) > tolerance) throw InputError("density matrix trace != 1");
    // 2x2 Hermitian with unit trace is PSD iff its Bloch vector has |n| <= 1.
    const double nx = 2.0 * rho(0, 1).real(), ny = -2.0 * rho(0, 1).imag();
    const double nz = (rho(0, 0) - rho(1, 1)).real();
    if (std::sqrt(nx * nx + ny * ny + nz * nz) > 1.0 + tolerance) {
        throw InputError("density matrix is not positive semidefinite");
    }
}

BlochVector state_to_bloch(const CMatrix &rho) {
    require_density2(rho);
    // Tr(rho sigma_x) = 2 Re rho01, Tr(rho sigma_y) = -2 Im rho01, Tr(rho sigma_z) = rho00 - rho11.
    return {2.0 * rho(0, 1).real(), -2.0 * rho(0, 1).imag(), (rho(0, 0) - rho(1, 1)).real()};
}

BlochVector state_to_bloch(const QubitState &psi) { return state_to_bloch(psi.density()); }

QubitState antiunitary_flip(const QubitState &psi) {
    return {-std::conj(psi.beta), std::conj(psi.alpha)};
}

CVector antiunitary_flip(const CVector &v) {
    if (v.dim() != 2) throw InputError("antiunitary_flip: expected a 2-vector");
    return {-std::conj(v[1]), std::conj(v[0])};
}

CMatrix flip_density(const CMatrix &rho) { return bloch_density(-state_to_bloch(rho)); }

double fidelity_direction(const CMatrix &rho, const BlochVector &n) {
    require_density2(rho);
    const CVector ket = bloch_to_state(n).ket();
    return inner(ket, rho * ket).real();
}

ShrinkReport shrink_factor(const CMatrix &rho, const BlochVector &n) {
    const double f = fidelity_direction(rho, n);
    return {2.0 * f - 1.0, f, n};
}

}  // namespace qac
