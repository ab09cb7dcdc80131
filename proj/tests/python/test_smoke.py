# Copyright 2026 The qac Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

import math

import numpy as np
import pytest

import qac


def test_paper_isometry_is_isometry():
    v = qac.paper_isometry()
    assert v.shape == (16, 2)
    assert np.allclose(v.conj().T @ v, np.eye(2), atol=1e-12)


def test_anticlone_fidelities():
    rng = np.random.default_rng(0)
    for _ in range(20):
        g = rng.normal(size=3)
        n = g / np.linalg.norm(g)
        out = qac.anticlone(qac.bloch_to_state(qac.BlochVector(*n)))
        assert out["f1"] == pytest.approx(2 / 3, abs=1e-10)
        assert out["f2"] == pytest.approx(2 / 3, abs=1e-10)


def test_partial_trace_against_numpy():
    rng = np.random.default_rng(1)
    psi = rng.normal(size=8) + 1j * rng.normal(size=8)
    psi /= np.linalg.norm(psi)
    rho = np.outer(psi, psi.conj())
    expected = np.einsum("ijk,ljk->il", psi.reshape(2, 2, 2), psi.conj().reshape(2, 2, 2))
    assert np.allclose(qac.partial_trace(rho, [2, 2, 2], [0]), expected, atol=1e-14)


def test_eigenvalues_against_numpy():
    rng = np.random.default_rng(2)
    a = rng.normal(size=(5, 5)) + 1j * rng.normal(size=(5, 5))
    h = a + a.conj().T
    assert np.allclose(qac.hermitian_eigenvalues(h), np.linalg.eigvalsh(h), atol=1e-10)


def test_flip_negates_bloch():
    s = qac.QubitState(0.6, 0.8j)
    a = qac.state_to_bloch(s.density())
    b = qac.state_to_bloch(qac.antiunitary_flip(s).density())
    assert (a.nx + b.nx, a.ny + b.ny, a.nz + b.nz) == pytest.approx((0, 0, 0), abs=1e-12)


def test_constraints_vanish():
    assert max(qac.optimal_constraint_residuals().values()) < 1e-12


def test_feasibility_closed_form():
    c = 0.5
    states = [(1, 0), (c, math.sqrt(1 - c * c))]
    for L, M in [(1, 1), (2, 1), (5, 5)]:
        r = qac.max_feasible_f(states, L, M)
        assert r["f_max"] == pytest.approx(qac.two_state_efficiency(c, L, M), abs=1e-9)
    dependent = [(1, 0), (0, 1), (math.sqrt(0.5), math.sqrt(0.5))]
    assert qac.max_feasible_f(dependent)["f_max"] < 1e-9


def test_probabilistic_anticloner():
    pc = qac.build_two_state_anticloner(math.pi / 3)
    u = pc["U"]
    assert np.allclose(u.conj().T @ u, np.eye(8), atol=1e-12)
    st = qac.run_prob_anticlone(math.pi / 3, 2, shots=0)
    assert st["success_probability"] == pytest.approx(2 / 3, abs=1e-12)
    assert st["post_selected_fidelity"] == pytest.approx(1.0, abs=1e-12)


def test_spinflip_and_errors():
    u, f = qac.build_prob_spinflip(qac.QubitState(1, 0), qac.QubitState(0.5, math.sqrt(0.75)))
    assert f == pytest.approx(0.5)
    assert np.allclose(u.conj().T @ u, np.eye(8), atol=1e-10)
    with pytest.raises(qac.RankError):
        qac.build_prob_spinflip(qac.QubitState(1, 0), qac.QubitState(1, 0))
    with pytest.raises(ValueError):
        qac.build_two_state_anticloner(0.0)


def test_small_optimizer_and_baseline():
    r = qac.optimize_spinflip(restarts=1, max_iters=200)
    assert r["best_value"] <= 2 / 3 + 1e-6
    assert r["max_isometry_defect"] < 1e-12
    b = qac.measure_prepare_baseline(20000, seed=3)
    assert abs(b["avg_fidelity_anticlone"] - 2 / 3) < 3 * b["stderr_anticlone"]


def test_cli_exit_codes(tmp_path):
    out = tmp_path / "r.json"
    assert qac.run_cli(["verify", "--samples", "20", "--output", str(out)]) == 0
    assert out.read_text().startswith("{")
    assert qac.run_cli(["feasibility", "--states", str(tmp_path / "missing.json")]) == 2
