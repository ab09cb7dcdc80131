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

#include "qac/optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <future>
#include <limits>
#include <numbers>
#include <numeric>
#include <thread>

#include "qac/errors.hpp"
#include "qac/random.hpp"

namespace qac {

void OptimizerConfig::validate() const {
    if (restarts == 0 || max_iters == 0 || direction_samples == 0 || ancilla_dim == 0) {
        throw InputError("optimizer: restarts, max_iters, direction_samples and ancilla_dim must be >= 1");
    }
    if (!(fd_step > 0.0) || !(step_size > 0.0)) {
        throw InputError("optimizer: fd_step and step_size must be positive");
    }
    for (double t : temperatures) {
        if (!(t > 0.0)) throw InputError("optimizer: softmin temperatures must be positive");
    }
}

std::vector<BlochVector> direction_net(std::size_t fibonacci_points) {
    std::vector<BlochVector> net;
    net.reserve(fibonacci_points + 6);
    const double golden_angle = std::numbers::pi * (3.0 - std::sqrt(5.0));
    const double count = static_cast<double>(fibonacci_points);
    for (std::size_t i = 0; i < fibonacci_points; ++i) {
        const double z = 1.0 - (2.0 * static_cast<double>(i) + 1.0) / count;
        const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
        const double phi = golden_angle * static_cast<double>(i);
        net.push_back({r * std::cos(phi), r * std::sin(phi), z});
    }
    for (const BlochVector axis : {BlochVector{1, 0, 0}, BlochVector{0, 1, 0}, BlochVector{0, 0, 1}}) {
        net.push_back(axis);
        net.push_back(-axis);
    }
    return net;
}

CMatrix parameterize_isometry(std::span<const double> x, std::size_t out_dim) {
    if (out_dim < 2 || x.size() != 4 * out_dim) {
        throw InputError("parameterize_isometry: expected 4 * out_dim reals with out_dim >= 2");
    }
    CVector c0(out_dim), c1(out_dim);
    for (std::size_t i = 0; i < out_dim; ++i) {
        c0[i] = {x[2 * i], x[2 * i + 1]};
        c1[i] = {x[2 * out_dim + 2 * i], x[2 * out_dim + 2 * i + 1]};
    }
    constexpr double kDegenerate = 1e-12;

    const double n0 = c0.norm();
    c0 = n0 < kDegenerate ? CVector::basis(out_dim, 0) : c0 * (1.0 / n0);

    auto project = [&](CVector w) {
        for (int pass = 0; pass < 2; ++pass) w -= inner(c0, w) * c0;
        return w;
    };
    CVector w = project(c1);
    if (w.norm() < kDegenerate) {
        // First computational basis vector with a usable component off c0.
        for (std::size_t k = 0; k < out_dim; ++k) {
            w = project(CVector::basis(out_dim, k));
            if (w.norm() >= kDegenerate) break;
        }
    }
    const std::array cols{c0, w.normalized()};
    return CMatrix::from_columns(cols);
}

std::vector<double> flatten_isometry(const CMatrix &v) {
    if (v.cols() != 2) throw InputError("flatten_isometry: expected two columns");
    std::vector<double> x(4 * v.rows());
    for (std::size_t c = 0; c < 2; ++c) {
        for (std::size_t i = 0; i < v.rows(); ++i) {
            x[2 * v.rows() * c + 2 * i] = v(i, c).real();
            x[2 * v.rows() * c + 2 * i + 1] = v(i, c).imag();
        }
    }
    return x;
}

BlochVector BlochMap::apply(const BlochVector &n) const {
    const std::array<double, 3> in{n.nx, n.ny, n.nz};
    std::array<double, 3> out = shift;
    for (std::size_t k = 0; k < 3; ++k) {
        for (std::size_t l = 0; l < 3; ++l) out[k] += linear[k][l] * in[l];
    }
    return {out[0], out[1], out[2]};
}

BlochMap reduced_bloch_map(const CMatrix &v, std::span<const std::size_t> dims, std::size_t keep) {
    const std::size_t total =
        std::accumulate(dims.begin(), dims.end(), std::size_t{1}, std::multiplies<>{});
    if (v.cols() != 2 || v.rows() != total) throw InputError("reduced_bloch_map: shape mismatch");
    if (keep >= dims.size() || dims[keep] != 2) throw InputError("reduced_bloch_map: kept factor must be a qubit");
    std::size_t stride = 1;
    for (std::size_t f = dims.size(); f-- > keep + 1;) stride *= dims[f];

    // blocks[i][j] = Tr_rest |v_i><v_j|, a 2x2 matrix stored as [q][q'].
    cplx blocks[2][2][2][2] = {};
    for (std::size_t idx = 0; idx < total; ++idx) {
        const std::size_t q = (idx / stride) % 2;
        for (std::size_t qp = 0; qp < 2; ++qp) {
            const std::size_t partner = idx - q * stride + qp * stride;
            for (std::size_t i = 0; i < 2; ++i) {
                for (std::size_t j = 0; j < 2; ++j) {
                    blocks[i][j][q][qp] += v(idx, i) * std::conj(v(partner, j));
                }
            }
        }
    }
    using Block = std::array<std::array<cplx, 2>, 2>;
    auto combine = [&](cplx w00, cplx w01, cplx w10, cplx w11) {
        Block out{};
        for (std::size_t q = 0; q < 2; ++q) {
            for (std::size_t qp = 0; qp < 2; ++qp) {
                out[q][qp] = w00 * blocks[0][0][q][qp] + w01 * blocks[0][1][q][qp] +
                             w10 * blocks[1][0][q][qp] + w11 * blocks[1][1][q][qp];
            }
        }
        return out;
    };
    auto bloch_of = [](const Block &x) {
        const cplx i{0.0, 1.0};
        return std::array<double, 3>{(x[0][1] + x[1][0]).real(), (i * (x[0][1] - x[1][0])).real(),
                                     (x[0][0] - x[1][1]).real()};
    };
    const cplx i{0.0, 1.0};
    const auto of_identity = bloch_of(combine(1, 0, 0, 1));
    const std::array<std::array<double, 3>, 3> of_pauli{
        bloch_of(combine(0, 1, 1, 0)), bloch_of(combine(0, -i, i, 0)), bloch_of(combine(1, 0, 0, -1))};

    BlochMap map;
    for (std::size_t k = 0; k < 3; ++k) {
        map.shift[k] = 0.5 * of_identity[k];
        for (std::size_t l = 0; l < 3; ++l) map.linear[k][l] = 0.5 * of_pauli[l][k];
    }
    return map;
}

namespace {

// Fidelities whose minimum is the objective: for anti-cloning, f1(n) and f2(n)
// for every direction; for spin flipping, F(n).
void universal_fidelities(const CMatrix &v, std::span<const BlochVector> directions,
                          std::vector<double> &out) {
    const std::array<std::size_t, 3> dims{2, 2, v.rows() / 4};
    const BlochMap m1 = reduced_bloch_map(v, dims, 0);
    const BlochMap m2 = reduced_bloch_map(v, dims, 1);
    out.clear();
    for (const auto &n : directions) {
        out.push_back(0.5 * (1.0 + n.dot(m1.apply(n))));
        out.push_back(0.5 * (1.0 - n.dot(m2.apply(n))));
    }
}

void spinflip_fidelities(const CMatrix &v, std::span<const BlochVector> directions,
                         std::vector<double> &out) {
    const std::array<std::size_t, 2> dims{2, v.rows() / 2};
    const BlochMap m = reduced_bloch_map(v, dims, 0);
    out.clear();
    for (const auto &n : directions) out.push_back(0.5 * (1.0 - n.dot(m.apply(n))));
}

void require_shape(const CMatrix &v, std::size_t multiple, const char *what) {
    if (v.cols() != 2 || v.rows() < multiple || v.rows() % multiple != 0) {
        throw InputError(std::string(what) + ": isometry has the wrong shape");
    }
}

using FidelityFn = void (*)(const CMatrix &, std::span<const BlochVector>, std::vector<double> &);

double softmin(std::span<const double> values, double temperature) {
    const double lo = *std::min_element(values.begin(), values.end());
    double s = 0.0;
    for (double f : values) s += std::exp(-(f - lo) / temperature);
    return lo - temperature * std::log(s);
}

struct RestartOutcome {
    double value = 0.0;  // best hard objective over the accepted iterates
    std::vector<double> x;
    std::vector<double> trace;
    double max_hard = -std::numeric_limits<double>::infinity();
    double max_defect = 0.0;
    std::uint64_t evaluations = 0;
};

class Search {
   public:
    Search(const OptimizerConfig &cfg, std::size_t out_dim, FidelityFn fidelities)
        : cfg_(cfg), out_dim_(out_dim), fidelities_(fidelities), net_(direction_net(cfg.direction_samples)) {}

    RestartOutcome run(std::size_t restart) const {
        RestartOutcome res;
        std::vector<double> x;
        if (restart == 0 && cfg_.initial) {
            x = *cfg_.initial;
            if (x.size() != 4 * out_dim_) throw InputError("optimizer: initial point has the wrong length");
        } else {
            CounterRng rng(derive_seed(cfg_.seed, restart));
            std::normal_distribution<double> normal(0.0, 1.0);
            x.resize(4 * out_dim_);
            for (auto &xi : x) xi = normal(rng);
        }
        x = flatten_isometry(parameterize_isometry(x, out_dim_));

        std::vector<double> scratch;
        auto evaluate = [&](std::span<const double> point, double temperature) {
            const CMatrix v = parameterize_isometry(point, out_dim_);
            res.max_defect = std::max(res.max_defect, isometry_defect(v));
            fidelities_(v, net_, scratch);
            const double hard = *std::min_element(scratch.begin(), scratch.end());
            res.max_hard = std::max(res.max_hard, hard);
            ++res.evaluations;
            return std::pair{hard, temperature > 0.0 ? softmin(scratch, temperature) : hard};
        };

        std::vector<double> stages = cfg_.temperatures;
        if (stages.empty()) stages.push_back(0.0);
        const std::size_t dim = x.size();
        std::vector<double> grad(dim), probe(dim), trial(dim);
        // Softmin ascent can trade a little hard-min value for smoothness, so
        // the best iterate is kept separately.
        double best_hard = -std::numeric_limits<double>::infinity();
        std::vector<double> best_x = x;
        auto keep_best = [&](double hard) {
            if (hard > best_hard) {
                best_hard = hard;
                best_x = x;
            }
        };

        for (double temperature : stages) {
            auto current = evaluate(x, temperature);
            keep_best(current.first);
            double step = cfg_.step_size;
            for (std::size_t it = 0; it < cfg_.max_iters && step >= 1e-9; ++it) {
                probe = x;
                double gnorm = 0.0;
                for (std::size_t k = 0; k < dim; ++k) {
                    probe[k] = x[k] + cfg_.fd_step;
                    const double up = evaluate(probe, temperature).second;
                    probe[k] = x[k] - cfg_.fd_step;
                    const double down = evaluate(probe, temperature).second;
                    probe[k] = x[k];
                    grad[k] = (up - down) / (2.0 * cfg_.fd_step);
                    gnorm += grad[k] * grad[k];
                }
                gnorm = std::sqrt(gnorm);
                if (gnorm == 0.0) break;
                bool accepted = false;
                while (step >= 1e-9) {
                    for (std::size_t k = 0; k < dim; ++k) trial[k] = x[k] + step * grad[k] / gnorm;
                    trial = flatten_isometry(parameterize_isometry(trial, out_dim_));
                    const auto value = evaluate(trial, temperature);
                    if (value.second > current.second) {
                        x = trial;
                        current = value;
                        step *= 1.25;
                        accepted = true;
                        break;
                    }
                    step *= 0.5;
                }
                if (!accepted) break;
                keep_best(current.first);
                res.trace.push_back(current.first);
            }
        }
        res.value = best_hard;
        res.x = std::move(best_x);
        return res;
    }

   private:
    const OptimizerConfig &cfg_;
    std::size_t out_dim_;
    FidelityFn fidelities_;
    std::vector<BlochVector> net_;
};

OptimizerResult run_restarts(const OptimizerConfig &cfg, std::size_t out_dim, FidelityFn fidelities,
                             double (*to_value)(double)) {
    cfg.validate();
    Search search(cfg, out_dim, fidelities);
    std::vector<RestartOutcome> outcomes(cfg.restarts);
    const std::size_t workers = std::max(1u, std::thread::hardware_concurrency());
    for (std::size_t first = 0; first < cfg.restarts; first += workers) {
        const std::size_t last = std::min(cfg.restarts, first + workers);
        std::vector<std::future<RestartOutcome>> jobs;
        for (std::size_t r = first; r < last; ++r) {
            jobs.push_back(std::async(std::launch::async, [&search, r] { return search.run(r); }));
        }
        for (std::size_t r = first; r < last; ++r) outcomes[r] = jobs[r - first].get();
    }

    OptimizerResult out;
    out.max_evaluated_objective = -std::numeric_limits<double>::infinity();
    std::size_t best = 0;
    for (std::size_t r = 0; r < outcomes.size(); ++r) {
        const auto &o = outcomes[r];
        out.per_restart_values.push_back(to_value(o.value));
        out.max_evaluated_objective = std::max(out.max_evaluated_objective, o.max_hard);
        out.max_isometry_defect = std::max(out.max_isometry_defect, o.max_defect);
        out.evaluations += o.evaluations;
        if (o.value > outcomes[best].value) best = r;
    }
    out.best_value = out.per_restart_values[best];
    out.best_params = outcomes[best].x;
    out.objective_trace = outcomes[best].trace;
    return out;
}

}  // namespace

double objective_universal(const CMatrix &v, std::span<const BlochVector> directions) {
    require_shape(v, 4, "objective_universal");
    std::vector<double> f;
    universal_fidelities(v, directions, f);
    return f.empty() ? 1.0 : *std::min_element(f.begin(), f.end());
}

double objective_spinflip(const CMatrix &v, std::span<const BlochVector> directions) {
    require_shape(v, 2, "objective_spinflip");
    std::vector<double> f;
    spinflip_fidelities(v, directions, f);
    return f.empty() ? 1.0 : *std::min_element(f.begin(), f.end());
}

OptimizerResult optimize_universal(const OptimizerConfig &cfg) {
    return run_restarts(cfg, 4 * cfg.ancilla_dim, universal_fidelities,
                        [](double objective) { return 2.0 * objective - 1.0; });
}

OptimizerResult optimize_spinflip(const OptimizerConfig &cfg) {
    return run_restarts(cfg, 2 * cfg.ancilla_dim, spinflip_fidelities,
                        [](double objective) { return objective; });
}

}  // namespace qac
