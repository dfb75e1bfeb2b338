import os
import subprocess

import pytest

import minrank


def test_generation_round_trip():
    inst = minrank.gen_random(7, 3, 4, 2, 2, seed=5)
    assert (inst.q, inst.m, inst.n, inst.K, inst.r) == (7, 3, 4, 2, 2)
    again = minrank.Instance.from_text(inst.to_text())
    assert again == inst
    assert minrank.Instance(7, 2, inst.matrices) == inst


def test_ranks_at_the_worked_example():
    inst = minrank.gen_random(32003, 4, 4, 3, 2, seed=0)
    assert minrank.macaulay_shape(inst, 2) == (48, 36)
    rep = minrank.rank_check(inst, 2)
    assert rep["observed"] == rep["predicted"] == 36
    assert minrank.rank_check(inst, 1)["observed"] == 16


def test_solve_planted():
    inst, witness = minrank.gen_planted(32003, 4, 4, 3, 2, seed=2)
    solutions, diag = minrank.solve(inst, 2)
    assert diag["cols"] == 36
    inv = pow(next(v for v in witness if v), -1, 32003)
    normalized = [v * inv % 32003 for v in witness]
    assert any(x == normalized for x, _ in solutions)
    assert all(minrank.verify(inst, x) for x, _ in solutions)


def test_solver_matches_brute_force():
    inst, _ = minrank.gen_planted(7, 4, 4, 3, 2, seed=4)
    solutions, diag = minrank.solve(inst, 2)
    if diag["complete"]:
        assert solutions == minrank.brute_force(inst)


def test_syzygies():
    inst = minrank.gen_random(32003, 4, 4, 8, 2, seed=1)
    rep = minrank.span_check(inst)
    assert rep["kernel_dim"] == rep["stacked_rank"] == 10
    assert rep["spans"]
    assert minrank.submax_dim_formula(5, 3, 5, 5) == 22
    assert minrank.submax_dim(minrank.gen_random(32003, 5, 3, 5, 2, seed=0), 4) == 5


def test_estimate():
    b1, b2 = minrank.estimate(4, 4, 3, 2)
    assert (b1["predicted"], b1["solvable"]) == (16, False)
    assert (b2["predicted"], b2["precondition"], b2["solvable"]) == (36, True, True)
    big = minrank.estimate(300, 300, 500, 100)
    assert big[1]["rows"] > 2**64


def test_errors():
    with pytest.raises(ValueError):
        minrank.gen_random(15, 2, 2, 1, 1, seed=0)
    with pytest.raises(minrank.CapExceeded):
        minrank.brute_force(minrank.gen_random(32003, 2, 2, 3, 1, seed=0), cap=10)


def test_cli_binary():
    tool = os.environ.get("MINRANK_CLI")
    if not tool:
        pytest.skip("MINRANK_CLI not set")
    out = subprocess.run([tool, "estimate", "--machine"], capture_output=True, text=True, check=True).stdout
    assert "predicted=36" in out
