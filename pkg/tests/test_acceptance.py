"""Acceptance suite: nine end-to-end criteria, one test per criterion.

Each test prints a single `A<i> ...: PASS` line on success (visible with
pytest -s; pytest -v shows one PASSED/FAILED line per criterion either way).
Tolerances and frozen values are pinned in the asserts themselves.
"""

from __future__ import annotations

import json
import math
import random
import time

import stabcheck as sc
from conftest import FIXTURES_DIR, draw_codes
from stabcheck import cli
from stabcheck.symplectic import PauliOperator

STEANE = str(FIXTURES_DIR / "steane.stab")


def test_a1_single_qubit_syndromes_read_check_matrix_columns():
    """syndrome(X_i) = column i of H_Z and syndrome(Z_i) = column i of H_X."""
    failures = 0
    for code in draw_codes(500, max_n=10, seed=101):
        for i in range(code.n):
            if code.syndrome_masks(1 << i, 0) != code.h.h_z.column(i):
                failures += 1
            if code.syndrome_masks(0, 1 << i) != code.h.h_x.column(i):
                failures += 1
    assert failures == 0
    print("A1 single-qubit syndromes read check matrix columns: PASS")


def test_a2_syndrome_routes_agree(steane, shor, five_qubit):
    """Closed-form syndrome equals the per-generator commutation route."""
    mismatches = 0
    for code in (steane, shor, five_qubit):
        for err in sc.enumerate_errors(code.n, 2):
            if sc.syndrome(code, err).bits != sc.syndrome_direct(code, err).bits:
                mismatches += 1
    rng = random.Random(202)
    codes = draw_codes(100, max_n=10, seed=203)
    for code in codes:
        for _ in range(100):
            err = PauliOperator.from_masks(
                code.n, rng.getrandbits(code.n), rng.getrandbits(code.n)
            )
            if sc.syndrome(code, err).bits != sc.syndrome_direct(code, err).bits:
                mismatches += 1
    assert mismatches == 0
    print("A2 syndrome routes agree (exhaustive w<=2 + 10^4 random): PASS")


def test_a3_degeneracy_fixtures_exact(steane, shor, five_qubit):
    rep = sc.classify(steane, 1)
    assert rep.verdict is sc.Verdict.NONDEGENERATE
    assert rep.syndrome_count == 21

    rep = sc.classify(five_qubit, 1)
    assert rep.verdict is sc.Verdict.NONDEGENERATE
    assert rep.syndrome_count == 15 == 2**4 - 1

    rep = sc.classify(shor, 1)
    assert rep.verdict is sc.Verdict.DEGENERATE
    w = rep.witness
    assert w is not None
    assert sc.syndrome(shor, w.first).bits == sc.syndrome(shor, w.second).bits
    prod = w.first * w.second
    assert shor.in_stabilizer_masks(prod.x.bits, prod.z.bits)
    assert w.product_in_stabilizer is True
    print("A3 degeneracy fixtures exact (Steane/five-qubit/Shor): PASS")


def test_a4_criteria_never_contradict_the_exact_verdict():
    """One-sided criteria stay one-sided; the CSS criterion is an iff."""
    css_seen = 0
    for code in draw_codes(1000, max_n=8, seed=404, css_share=0.35):
        rep = sc.classify(code, 1, with_criteria=True)
        crit = rep.criteria
        if crit["sufficient_columns"] is sc.CriterionOutcome.PROVEN_NONDEGENERATE:
            assert rep.verdict is sc.Verdict.NONDEGENERATE, code
        if crit["necessary_columns"] is sc.CriterionOutcome.PROVEN_DEGENERATE:
            assert rep.verdict is sc.Verdict.DEGENERATE, code
        if crit["standard_form"] is sc.CriterionOutcome.PROVEN_DEGENERATE:
            assert rep.verdict is sc.Verdict.DEGENERATE, code
        css = crit["css_blocks"]
        if css is not sc.CriterionOutcome.NOT_CSS:
            css_seen += 1
            expected = (
                sc.CriterionOutcome.NONDEGENERATE
                if rep.verdict is sc.Verdict.NONDEGENERATE
                else sc.CriterionOutcome.DEGENERATE
            )
            assert css is expected, code
    assert css_seen >= 100  # the iff claim must actually be exercised
    print(f"A4 criteria consistency on 1000 codes ({css_seen} CSS): PASS")


def test_a5_distance_fixtures(steane, shor, five_qubit, bitflip3):
    assert sc.min_distance(steane).d == 3
    assert sc.min_distance(five_qubit).d == 3
    assert sc.min_distance(bitflip3).d == 1
    # Shor: degenerate at t=1 yet d = 3 all the same
    assert sc.min_distance(shor).d == 3
    assert sc.classify(shor, 1).verdict is sc.Verdict.DEGENERATE
    print("A5 distance fixtures (3/3/3/1, Shor degenerate with d=3): PASS")


def test_a6_column_bounds_bracket_the_distance(
    steane, shor, five_qubit, bitflip3
):
    fixtures = [steane, shor, five_qubit, bitflip3]
    checked = 0
    for code in fixtures + list(draw_codes(200, max_n=8, seed=606, css_share=0.2)):
        res = sc.min_distance(code, t=1)
        if res.d is None:
            continue  # k = 0, or no logical below the limit: nothing to bracket
        checked += 1
        assert res.lower <= res.d, code
        if res.upper is not None:
            assert res.d <= res.upper <= 4 * 1 + 1, code
    assert checked >= 150
    print(f"A6 column bounds bracket d on {checked} codes: PASS")


def test_a7_enumeration_count_matches_formula():
    for n in range(1, 9):
        for t in range(1, min(3, n) + 1):
            expected = sum(math.comb(n, i) * 3**i for i in range(1, t + 1))
            assert sc.error_count(n, t) == expected
            assert sum(1 for _ in sc.enumerate_errors(n, t)) == expected
    print("A7 enumeration count matches the closed form (n<=8, t<=3): PASS")


def test_a8_degenerate_shor_beats_steane_under_depolarizing(steane, shor):
    started = time.perf_counter()
    channel = sc.PauliChannel.depolarizing(0.05)
    trials, seed = 10**5, 20260817
    r_steane = sc.simulate(steane, channel, trials, seed)
    r_shor = sc.simulate(shor, channel, trials, seed)
    elapsed = time.perf_counter() - started

    assert r_shor.rate < r_steane.rate
    # 95% intervals must not even touch
    assert r_shor.ci95[1] < r_steane.ci95[0]
    # sanity band so a silently broken sampler cannot sneak through
    assert 0.01 < r_shor.rate < r_steane.rate < 0.08
    assert elapsed < 60.0
    print(
        f"A8 Shor {r_shor.rate:.4f} < Steane {r_steane.rate:.4f}, "
        f"CIs disjoint, {elapsed:.1f}s: PASS"
    )


def test_a9_simulate_json_is_byte_identical(capsys):
    argv = [
        "simulate", "--code", STEANE, "--json",
        "--depolarizing", "0.05", "--trials", "2000", "--seed", "42",
    ]
    outputs = []
    for workers in ("1", "2", "3", "1"):
        rc = cli.main(argv + ["--workers", workers])
        out = capsys.readouterr().out
        assert rc == 0
        outputs.append(out)
    assert len(set(outputs)) == 1
    assert json.loads(outputs[0])["result"]["failures"] == 73
    print("A9 simulate JSON byte-identical across runs and workers: PASS")
