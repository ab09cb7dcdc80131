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

// Probabilistic exact anti-cloning |m>|0> -> |m>|-m> heralded by a probe.

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qac/linalg.hpp"
#include "qac/qubit.hpp"

namespace qac {

struct StateSet {
    std::vector<QubitState> states;
    std::vector<std::string> labels;  // optional, empty or one per state

    /// Throws InputError for an empty set, a non-normalized state or a label count mismatch.
    void validate(double tolerance = tol::kExact) const;
};

/// L copies of the input and M copies of its flip.
struct CopySpec {
    std::size_t L = 1;
    std::size_t M = 1;
};

struct FeasibilityResult {
    double f_max = 0.0;
    /// min eig(G - f_max H); >= -1e-9 by construction.
    double min_eigenvalue_at_f = 0.0;
    /// min eig(G - (f_max + 1e-6) H); negative whenever f_max < 1.
    double min_eigenvalue_above = 0.0;
    CMatrix gram_G;
    CMatrix gram_H;
};

struct ProbCloner {
    CMatrix U;  // 8x8 on (input, blank, probe)
    double theta = 0.0;
    double f = 0.0;
    QubitState m1;
    QubitState m2;
    CVector probe_success_ket;  // |Y0>
    CVector probe_fail_ket;     // |Y1>
    CVector garbage;            // |Q12>
};

struct ShotStats {
    std::uint64_t shots = 0;
    std::uint64_t successes = 0;
    /// Squared norm of the success branch.
    double success_probability = 0.0;
    /// successes / shots, or success_probability when shots == 0.
    double success_frequency = 0.0;
    double post_selected_fidelity = 0.0;
    std::uint64_t seed = 0;
};

struct ProbSpinFlip {
    CMatrix U;  // 8x8 on (input, flag ket B, success flag)
    double F = 0.0;
    /// Inputs |m_i>|B0>|0> after phase redefinition, and their images.
    std::vector<CVector> inputs;
    std::vector<CVector> images;
};

/// Gram matrix G of the (phase-redefined) states and the output Gram matrix
/// H_ij = <m_i|m_j>^L <-m_i|-m_j>^M.
std::pair<CMatrix, CMatrix> output_grams(const StateSet &set, const CopySpec &mu);

/// sup{ f in [0,1] : G - f H is PSD } by bisection to width `width`.
FeasibilityResult max_feasible_f(const StateSet &set, const CopySpec &mu, double width = 1e-12);

/// (1 - c) / (1 - c^(L+M)) for two states with overlap modulus c < 1.
double two_state_efficiency(double overlap, const CopySpec &mu);

/// Anti-cloner for |m1> = |0>, |m2> = cos t|0> + sin t|1>, t in (0, pi/2].
ProbCloner build_two_state_anticloner(double theta);

/// Runs the cloner on input 1 or 2. shots == 0 requests exact amplitudes only.
ShotStats run_prob_anticlone(const ProbCloner &pc, int which, std::uint64_t shots, std::uint64_t seed);

/// Heralded spin flip with success probability F = 1 - |<m1|m2>|.
/// Throws RankError for (numerically) parallel inputs.
ProbSpinFlip build_prob_spinflip(const QubitState &m1, const QubitState &m2);

}  // namespace qac
