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

// Numerical search over qubit isometries for the best worst-case
// anti-cloning and spin-flip fidelities.

#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "qac/linalg.hpp"
#include "qac/qubit.hpp"

namespace qac {

struct OptimizerConfig {
    std::size_t restarts = 20;
    /// Iteration budget of each temperature stage.
    std::size_t max_iters = 600;
    double fd_step = 1e-6;
    double step_size = 0.1;
    /// Spherical Fibonacci points; the six axis poles are always added.
    std::size_t direction_samples = 62;
    std::uint64_t seed = 0;
    std::size_t ancilla_dim = 4;
    /// Softmin temperature schedule for the search; empty means hard min.
    std::vector<double> temperatures{1e-2, 1e-3, 1e-4};
    /// Starting point of restart 0 (flat real vector); random when absent.
    std::optional<std::vector<double>> initial;

    /// Throws InputError when a count is zero or a step is not positive.
    void validate() const;
};

struct OptimizerResult {
    /// eta for anti-cloning, fidelity F for spin flipping.
    double best_value = 0.0;
    std::vector<double> best_params;
    std::vector<double> per_restart_values;
    /// Hard-min objective of the best restart after each accepted step.
    std::vector<double> objective_trace;
    /// Largest hard-min objective seen at any point evaluated, FD probes included.
    double max_evaluated_objective = 0.0;
    /// Largest ||V^dagger V - I||_inf over every evaluated candidate.
    double max_isometry_defect = 0.0;
    std::uint64_t evaluations = 0;
};

/// Fixed direction net: `fibonacci_points` spherical Fibonacci points followed
/// by +-x, +-y, +-z.
std::vector<BlochVector> direction_net(std::size_t fibonacci_points = 62);

/// Assembles two complex columns from consecutive (re, im) pairs of `x` and
/// orthonormalizes them. Throws InputError unless x.size() == 4 * out_dim.
CMatrix parameterize_isometry(std::span<const double> x, std::size_t out_dim);

/// Inverse of parameterize_isometry on isometries.
std::vector<double> flatten_isometry(const CMatrix &v);

/// Affine Bloch-vector action of a qubit channel, r(n) = shift + linear n.
struct BlochMap {
    std::array<std::array<double, 3>, 3> linear{};
    std::array<double, 3> shift{};

    BlochVector apply(const BlochVector &n) const;
};

/// Channel from the input qubit onto output factor `keep` of V's register
/// (factor sizes `dims`).
BlochMap reduced_bloch_map(const CMatrix &v, std::span<const std::size_t> dims, std::size_t keep);

/// min over directions of min(f1, f2) for a (4 k) x 2 anti-cloning isometry.
double objective_universal(const CMatrix &v, std::span<const BlochVector> directions);

/// min over directions of <-n|rho_out|-n> for a (2 k) x 2 isometry whose
/// first qubit is the output.
double objective_spinflip(const CMatrix &v, std::span<const BlochVector> directions);

/// Multi-restart finite-difference ascent of objective_universal over
/// (4 * ancilla_dim) x 2 isometries; best_value is eta = 2 * objective - 1.
OptimizerResult optimize_universal(const OptimizerConfig &cfg);

/// Same search for 2 -> (2 * ancilla_dim) isometries; best_value is F.
OptimizerResult optimize_spinflip(const OptimizerConfig &cfg);

}  // namespace qac
