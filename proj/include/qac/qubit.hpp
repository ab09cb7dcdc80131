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

#pragma once

#include "qac/linalg.hpp"

namespace qac {

struct BlochVector {
    double nx = 0.0;
    double ny = 0.0;
    double nz = 0.0;

    double norm() const;
    double dot(const BlochVector &o) const { return nx * o.nx + ny * o.ny + nz * o.nz; }
    BlochVector operator-() const { return {-nx, -ny, -nz}; }
    BlochVector operator*(double s) const { return {s * nx, s * ny, s * nz}; }
    BlochVector normalized() const;
};

/// Pure qubit state alpha|0> + beta|1>.
struct QubitState {
    cplx alpha = 1.0;
    cplx beta = 0.0;

    CVector ket() const { return {alpha, beta}; }
    static QubitState from_ket(const CVector &v);
    /// Projector |psi><psi|.
    CMatrix density() const { return CMatrix::projector(ket()); }
    /// Same ray with the first amplitude above 1e-12 made real non-negative.
    QubitState canonical() const;
    bool is_normalized(double tolerance = tol::kExact) const;
};

struct ShrinkReport {
    double eta = 0.0;
    double fidelity = 0.0;
    BlochVector direction;
};

/// (1 + n.sigma) / 2; `n` need not be unit length.
CMatrix bloch_density(const BlochVector &n);

/// alpha = cos(theta/2), beta = e^{i phi} sin(theta/2). Throws InputError unless |n| = 1.
QubitState bloch_to_state(const BlochVector &n);

/// n_k = Tr(rho sigma_k). Throws InputError unless rho is a 2x2 density matrix.
BlochVector state_to_bloch(const CMatrix &rho);
BlochVector state_to_bloch(const QubitState &psi);

/// Anti-unitary spin flip (alpha, beta) -> (-beta*, alpha*). No global phase fixing.
QubitState antiunitary_flip(const QubitState &psi);
/// The same anti-linear map on unnormalized 2-vectors.
CVector antiunitary_flip(const CVector &v);
/// Bloch negation rho -> (1 - n.sigma)/2 for mixed states.
CMatrix flip_density(const CMatrix &rho);

/// <n|rho|n>.
double fidelity_direction(const CMatrix &rho, const BlochVector &n);

/// eta = 2 <n|rho|n> - 1.
ShrinkReport shrink_factor(const CMatrix &rho, const BlochVector &n);

/// Throws InputError unless `rho` is Hermitian, unit trace and PSD within `tolerance`.
void require_density2(const CMatrix &rho, double tolerance = tol::kStructural);

}  // namespace qac
