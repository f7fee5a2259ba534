"""Exit criteria. Every check is exact; the only numeric limits are wall-time budgets.

Run ``pytest tests/test_acceptance.py -s`` (or this file as a script) to see
one PASS/FAIL line per criterion.
"""

import time
from fractions import Fraction

import pytest

from ggp.bipoly import BiPoly
from ggp.cli import main
from ggp.csoperator import _eigensolve, apply_operator, eigensolve, eigenvalue
from ggp.families import a1_row, build_by_recurrence, clear_caches, coeff_B, jack_row
from ggp.scalar import KappaRational
from ggp.verify import (
    DEFAULT_COEFFICIENTS,
    check_a1_derivative,
    check_cross_method,
    check_derivative_z1,
    check_derivative_z2,
    check_duality,
    check_eigen,
    check_identity_set,
    check_recurrence,
    pairs_up_to,
)

PAIRS_10 = pairs_up_to(10)


def _line(name: str, ok: bool, detail: str) -> str:
    return f"[{'PASS' if ok else 'FAIL'}] {name}: {detail}"


@pytest.fixture
def report(capsys):
    _eigensolve.cache_clear()
    clear_caches()

    def emit(name, ok, t0, budget=None):
        dt = time.perf_counter() - t0
        within = budget is None or dt <= budget
        detail = f"{dt:.2f}s" + (f" (budget {budget}s)" if budget else "")
        with capsys.disabled():
            print("\n" + _line(name, ok and within, detail))
        assert ok, name
        assert within, f"{name} took {dt:.1f}s > {budget}s"

    return emit


def k(a, b=0):
    return KappaRational.linear(a, b)


def test_eigen_identity(report):
    t0 = time.perf_counter()
    ok = all(
        (apply_operator(p) - p.scale(eigenvalue(m, n))).is_zero()
        for m, n in PAIRS_10
        for p in [eigensolve(m, n).poly]
    ) and all(check_eigen(m, n).passed for m, n in PAIRS_10)
    report("eigen-identity m+n<=10", ok, t0, 120)


def test_main_theorem(report):
    t0 = time.perf_counter()
    ok = all(check_derivative_z1(m, n).passed and check_derivative_z2(m, n).passed
             for m, n in PAIRS_10)
    report("derivative-shift formulas m+n<=10", ok, t0, 180)


def test_proof_identities(report):
    t0 = time.perf_counter()
    results = [r for m in range(26) for n in range(26) for r in check_identity_set(m, n)]
    ok = len(results) == 3380 and all(r.passed for r in results)
    report("proof identities 0<=m,n<=25 (3380 checks)", ok, t0, 60)


def test_cross_method(report):
    t0 = time.perf_counter()
    ok = all(check_cross_method(m, n).passed for m, n in PAIRS_10)
    ok = ok and all(
        eigensolve(m, n).poly
        == build_by_recurrence(m, n, "lower-n").poly
        == build_by_recurrence(m, n, "lower-m").poly
        for m, n in PAIRS_10
    )
    ok = ok and all(g.poly == eigensolve(g.m, 0).poly for g in jack_row(15))
    report("cross-method equivalence m+n<=10, genfunc row m<=15", ok, t0, 180)


def test_spot_values(report):
    t0 = time.perf_counter()
    z1, z2 = BiPoly.z1(), BiPoly.z2()
    p11 = z1 * z2 - 3 / k(1, 2)
    p20 = z1 * z1 - z2.scale(2 / k(1, 1))
    p30 = z1 * z1 * z1 - (z1 * z2).scale(6 / k(2, 1)) + 6 / (k(1, 1) * k(2, 1))
    ok = (eigensolve(1, 1).poly == p11 and eigensolve(2, 0).poly == p20
          and eigensolve(3, 0).poly == p30
          and build_by_recurrence(1, 1).poly == p11
          and jack_row(3)[2].poly == p20 and jack_row(3)[3].poly == p30)
    report("spot values P11, P20, P30", ok, t0)


def test_a1_classical(report):
    t0 = time.perf_counter()
    ok = all(check_a1_derivative(m).passed for m in range(1, 31))
    report("A1 derivative formula 1<=m<=30", ok, t0, 10)


def test_duality(report):
    t0 = time.perf_counter()
    ok = all(check_duality(m, n).passed for m, n in PAIRS_10)
    report("duality m+n<=10", ok, t0)


def test_specialization(report):
    t0 = time.perf_counter()
    ok = all(
        eigensolve(m, n).poly.specialize(r) == eigensolve(m, n, r).poly
        for r in (Fraction(1), Fraction(1, 2), Fraction(3))
        for m, n in pairs_up_to(8)
    )
    report("specialization consistency kappa in {1, 1/2, 3}, m+n<=8", ok, t0)


def test_negative_controls(report, monkeypatch):
    t0 = time.perf_counter()

    def eig(m, n):
        return eigensolve(m, n).poly

    def bump(target):
        return lambda m, n: eig(m, n) + 1 if (m, n) == target else eig(m, n)

    bad_B = DEFAULT_COEFFICIENTS._replace(B=lambda m, n: coeff_B(m, n) * 2)
    bad_c = DEFAULT_COEFFICIENTS._replace(c=lambda n: DEFAULT_COEFFICIENTS.c(n) + 1)
    row = a1_row(4)
    row[2] = row[2] + BiPoly.z1()
    outcomes = {
        "eigen": check_eigen(2, 1, source=bump((2, 1))),
        "derivative_z1": check_derivative_z1(2, 1, source=bump((1, 1))),
        "derivative_z2": check_derivative_z2(2, 0, coeffs=bad_B),
        "identities": next(r for r in check_identity_set(3, 3, bad_c) if not r.passed),
        "recurrence": check_recurrence(2, 2, source=bump((2, 2)))[0],
        "duality": check_duality(3, 1, source=bump((1, 3))),
        "cross": check_cross_method(2, 1, sources=[eig, bump((2, 1))]),
        "a1": check_a1_derivative(3, row=row),
    }
    ok = all(r.status == "fail" for r in outcomes.values())

    from ggp import verify

    monkeypatch.setitem(verify.SOURCES, "eigensolver", bump((1, 1)))
    with pytest.MonkeyPatch.context():
        code = main(["verify", "eigen", "--max-degree", "2", "--jobs", "1"])
    ok = ok and code == 1
    report("negative controls fail every check (and CLI exits 1)", ok, t0)


def test_table_determinism(report, tmp_path):
    t0 = time.perf_counter()
    a, b = tmp_path / "a", tmp_path / "b"
    codes = [main(["table", "--max-degree", "8", "--out", str(a), "--jobs", "1"]),
             main(["table", "--max-degree", "8", "--out", str(b), "--jobs", "4"])]
    files = sorted(p.name for p in a.iterdir())
    ok = codes == [0, 0] and len(files) == 45 and files == sorted(p.name for p in b.iterdir())
    ok = ok and all((a / f).read_bytes() == (b / f).read_bytes() for f in files)
    report("table --max-degree 8 byte-identical across --jobs", ok, t0)


if __name__ == "__main__":
    raise SystemExit(pytest.main([__file__, "-s", "-q"]))
