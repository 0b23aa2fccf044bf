"""Acceptance gate: one test per criterion, exact integer comparisons only.

Each test prints a PASS line on success (visible with pytest -s / -v on
failure capture); any assertion failure is the corresponding FAIL.
"""

import json
import math
import random

from polycoef import densepoly, euler_recurrence, verifier
from polycoef.cli import main

TRINOMIAL_TABLE = [
    [1],
    [1, 1, 1],
    [1, 2, 3, 2, 1],
    [1, 3, 6, 7, 6, 3, 1],
    [1, 4, 10, 16, 19, 16, 10, 4, 1],
    [1, 5, 15, 30, 45, 51, 45, 30, 15, 5, 1],
    [1, 6, 21, 50, 90, 126, 141, 126, 90, 50, 21, 6, 1],
]

QUADRINOMIAL_TABLE = [
    [1],
    [1, 1, 1, 1],
    [1, 2, 3, 4, 3, 2, 1],
    [1, 3, 6, 10, 12, 12, 10, 6, 3, 1],
    [1, 4, 10, 20, 31, 40, 44, 40, 31, 20, 10, 4, 1],
    [1, 5, 15, 35, 65, 101, 135, 155, 155, 135, 101, 65, 35, 15, 5, 1],
]
QUADRINOMIAL_N6_PREFIX = [1, 6, 21, 56, 120, 216]


def run_cli(capsys, *argv):
    code = main(list(argv))
    return code, capsys.readouterr().out


def test_criterion_1_trinomial_table(capsys):
    code, out = run_cli(capsys, "table", "-m", "3", "--max-n", "6")
    assert code == 0
    rows = [[int(c) for c in line.split()] for line in out.splitlines()]
    assert rows == TRINOMIAL_TABLE
    print("PASS criterion 1: trinomial table n=0..6 reproduced exactly")


def test_criterion_2_quadrinomial_table(capsys):
    code, out = run_cli(capsys, "table", "-m", "4", "--max-n", "6")
    assert code == 0
    rows = [[int(c) for c in line.split()] for line in out.splitlines()]
    assert rows[:6] == QUADRINOMIAL_TABLE
    assert rows[6][: len(QUADRINOMIAL_N6_PREFIX)] == QUADRINOMIAL_N6_PREFIX
    print("PASS criterion 2: quadrinomial table n=0..6 reproduced exactly")


def test_criterion_3_worked_values_n6(capsys):
    expected = (1, 6, 21, 50, 90, 126, 141, 126, 90, 50, 21, 6, 1)
    actual = tuple(euler_recurrence.coeff(3, 6, lam) for lam in range(13))
    assert actual == expected
    assert actual[9] == 50  # corrected erratum: source prints 30
    print("PASS criterion 3: worked trinomial values at n=6, erratum corrected")


def test_criterion_4_reduced_form_identities():
    report = verifier.check_reduced_forms(20)
    assert report.ok, [c.check_id for c in report.failures]
    print("PASS criterion 4: reduced-form identities hold for n=0..20")


def test_criterion_5_oracle_equivalence():
    report = verifier.cross_check(6, 12)
    assert report.ok, [c.check_id for c in report.failures]
    print("PASS criterion 5: euler = repeated = binary rows for m<=6, n<=12")


def test_criterion_6_property_suite():
    rng = random.Random(20260823)
    memo = {}
    for _ in range(200):
        m = rng.randint(1, 8)
        n = rng.randint(0, 30)
        top = (m - 1) * n
        coeffs = euler_recurrence.row(m, n, memo).coeffs
        assert coeffs == coeffs[::-1]
        assert coeffs[0] == 1 and coeffs[-1] == 1
        assert sum(coeffs) == m**n
        if n >= 1:
            alternating = sum(c if i % 2 == 0 else -c for i, c in enumerate(coeffs))
            assert alternating == (1 if m % 2 == 1 else 0)
        assert euler_recurrence.coeff(m, n, -1 - rng.randint(0, 5), memo) == 0
        assert euler_recurrence.coeff(m, n, top + 1 + rng.randint(0, 5), memo) == 0
        lam = rng.randint(0, max(n, 1))
        assert euler_recurrence.coeff(2, n, lam, memo) == math.comb(n, lam)
    print("PASS criterion 6: property suite over 200 sampled (m, n)")


def test_criterion_7_bench_smoke(capsys):
    code, out = run_cli(
        capsys, "bench", "-m", "10", "-n", "200", "--strategies", "euler,binpow,direct"
    )
    assert code == 0
    doc = json.loads(out)
    assert doc["agreement"] is True
    assert doc["m"] == 10 and doc["n"] == 200 and doc["central_degree"] == 900
    assert set(doc["strategies"]) == {"euler", "binpow", "direct"}
    for stats in doc["strategies"].values():
        assert stats["row_wall_ns"] > 0
        assert stats["coeff_wall_ns"] > 0
        assert stats["peak_coefficient_bits"] > 0
    assert doc["strategies"]["euler"]["memo_entries"] > 0
    assert doc["strategies"]["binpow"]["multiplications"] > 0
    assert doc["strategies"]["direct"]["multiplications"] == 199
    print("PASS criterion 7: bench m=10 n=200 completed with agreeing strategies")


def test_criterion_8_verify_determinism(capsys):
    code1, out1 = run_cli(capsys, "verify")
    code2, out2 = run_cli(capsys, "verify")
    assert code1 == 0 and code2 == 0
    assert out1.encode() == out2.encode()
    print("PASS criterion 8: consecutive verify runs are byte-identical")
