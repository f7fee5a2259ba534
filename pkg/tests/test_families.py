import math
from fractions import Fraction

import pytest

from conftest import k
from ggp.bipoly import BiPoly
from ggp.csoperator import eigensolve
from ggp.families import (
    a1_row,
    build_by_recurrence,
    coeff_A,
    coeff_a_tilde,
    coeff_B,
    coeff_c,
    jack_row,
)
from ggp.scalar import ONE, ZERO, KappaRational, pochhammer

z1, z2 = BiPoly.z1(), BiPoly.z2()
kap = KappaRational.kappa()


def series_by_powers(max_m: int) -> list[BiPoly]:
    """Monic P_{m,0} from (1-u)^(-kappa) = sum (kappa)_j/j! u^j, u = z1 t - z2 t^2 + t^3.

    Truncated power series are lists of BiPoly indexed by the power of t.
    """
    u = [BiPoly(), z1, -z2, BiPoly.const(1)] + [BiPoly()] * max_m
    u = u[: max_m + 1]

    def mul(a, b):
        out = [BiPoly() for _ in range(max_m + 1)]
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b[: max_m + 1 - i]):
                    out[i + j] = out[i + j] + x * y
        return out

    total = [BiPoly.const(1)] + [BiPoly() for _ in range(max_m)]
    power = [BiPoly.const(1)] + [BiPoly() for _ in range(max_m)]
    for j in range(1, max_m + 1):
        power = mul(power, u)
        w = pochhammer(j) / math.factorial(j)
        total = [t + p.scale(w) for t, p in zip(total, power)]
    return [f.scale(math.factorial(m) / pochhammer(m)) for m, f in enumerate(total)]


def classical_a1(m: int) -> BiPoly:
    """m!/(kappa)_m C_m(z/2) from the explicit Gegenbauer sum."""
    out = BiPoly()
    for j in range(m // 2 + 1):
        c = pochhammer(m - j) * Fraction((-1) ** j, math.factorial(j) * math.factorial(m - 2 * j))
        out = out + BiPoly.monomial(m - 2 * j, 0, c)  # (2x)^(m-2j) at x = z/2
    return out.scale(math.factorial(m) / pochhammer(m))


class TestCoefficients:
    def test_A(self):
        assert coeff_A(1, 1) == ZERO
        assert all(coeff_A(m, 0) == ZERO for m in range(6))
        assert coeff_A(2, 1) == k(3, 1) / (k(1, 1) * k(1, 1) * k(3, 2))

    def test_B(self):
        assert all(coeff_B(m, 1) == ZERO for m in range(6))
        assert coeff_B(0, 2) == -2 / k(1, 1)
        assert coeff_B(1, 2) == -2 * k(3, 1) / (k(1, 1) * k(2, 1))

    def test_a_tilde(self):
        assert all(coeff_a_tilde(0, n) == ZERO for n in range(6))
        assert coeff_a_tilde(1, 0) == 3 / k(1, 2)
        # m = n = 1: factor (n+m-1+3k) is 1+3k
        assert coeff_a_tilde(1, 1) == k(2, 1) * k(1, 3) / (k(1, 1) * k(1, 1) * k(1, 2))

    def test_c(self):
        assert coeff_c(0) == ZERO
        assert coeff_c(1) == 2 / k(1, 1)
        assert coeff_c(2) == 2 * k(1, 2) / (k(2, 1) * k(1, 1))

    @pytest.mark.parametrize("m", range(-1, 11))
    def test_vanishing_matches_index_range(self, m):
        for n in range(-1, 11):
            assert (coeff_A(m, n) == ZERO) == (m < 2 or n < 1)
            assert (coeff_B(m, n) == ZERO) == (n < 2)
        assert (coeff_c(m) == ZERO) == (m <= 0)
        assert coeff_a_tilde(0, m) == ZERO

    def test_values_at_a_point(self):
        # straight rational evaluation of the closed forms at kappa = 5/3
        r = Fraction(5, 3)
        from ggp.scalar import eval_kappa

        for m in range(2, 7):
            for n in range(1, 7):
                A = Fraction(m * (m - 1) * n) * (m + n + r - 1) * (m + n + r) / (
                    (m + r - 1) * (m + r) * (m + n + 2 * r - 1) * (m + n + 2 * r))
                assert eval_kappa(coeff_A(m, n), r) == A
                at = m * (n + m + r) * (m - 1 + 2 * r) * (n + m - 1 + 3 * r) / (
                    (m + r) * (m - 1 + r) * (n + m + 2 * r) * (n + m - 1 + 2 * r))
                assert eval_kappa(coeff_a_tilde(m, n), r) == at
            n = m
            B = -n * (n - 1) * (1 + n + r) / ((n + r - 1) * (n + r))
            assert eval_kappa(coeff_B(1, n), r) == B
            assert eval_kappa(coeff_c(n), r) == n * (n - 1 + 2 * r) / ((n + r) * (n - 1 + r))


class TestJackRow:
    def test_spot_values(self):
        row = jack_row(3)
        assert [g.m for g in row] == [0, 1, 2, 3]
        assert all(g.n == 0 and g.method == "genfunc" for g in row)
        assert row[0].poly == BiPoly.const(1)
        assert row[1].poly == z1
        assert row[2].poly == z1 * z1 - z2.scale(2 / k(1, 1))
        assert row[3].poly == (
            z1 * z1 * z1 - (z1 * z2).scale(6 / k(2, 1)) + 6 / (k(1, 1) * k(2, 1))
        )

    def test_direct_expansion_oracle(self):
        expected = series_by_powers(6)
        assert [g.poly for g in jack_row(6)] == expected

    def test_matches_eigensolver(self):
        for g in jack_row(12):
            assert g.poly == eigensolve(g.m, 0).poly

    def test_negative(self):
        with pytest.raises(ValueError):
            jack_row(-1)


class TestRecurrence:
    def test_examples(self):
        assert build_by_recurrence(0, 1).poly == z2
        p11 = build_by_recurrence(1, 1).poly
        assert p11 == z1 * z2 - 3 / k(1, 2)
        assert p11 == eigensolve(1, 1).poly
        assert build_by_recurrence(4, 0).poly == jack_row(4)[4].poly

    def test_labels(self):
        assert build_by_recurrence(2, 1).method == "recurrence"
        assert build_by_recurrence(2, 1, "lower-m").method == "twin-recurrence"
        with pytest.raises(ValueError):
            build_by_recurrence(2, 1, "sideways")
        with pytest.raises(ValueError):
            build_by_recurrence(-1, 1)

    @pytest.mark.parametrize("d", range(9))
    def test_agree_with_eigensolver(self, d):
        for m in range(d + 1):
            n = d - m
            e = eigensolve(m, n).poly
            lower_n = build_by_recurrence(m, n, "lower-n").poly
            lower_m = build_by_recurrence(m, n, "lower-m").poly
            assert lower_n == e
            assert lower_m == e
            assert lower_m == build_by_recurrence(n, m, "lower-n").poly.swap_vars()


class TestA1Row:
    def test_spot_values(self):
        row = a1_row(2)
        assert row[0] == BiPoly.const(1)
        assert row[1] == z1
        assert row[2] == z1 * z1 - 2 / k(1, 1)

    def test_classical_c2(self):
        # C_2(x) = 2 kappa (1+kappa) x^2 - kappa at x = z/2, times 2/(kappa)_2
        c2 = (z1 * z1).scale(2 * kap * k(1, 1) / 4) - kap
        assert c2.scale(2 / pochhammer(2)) == a1_row(2)[2]

    def test_explicit_sum_oracle(self):
        assert a1_row(15) == [classical_a1(m) for m in range(16)]

    def test_monic(self):
        for m, p in enumerate(a1_row(10)):
            assert p.coefficient((m, 0)) == ONE
            assert p.degree() == m
