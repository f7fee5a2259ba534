"""Independent check of the proof identities in Q(m, n, kappa) with sympy.

The engine certifies them per integer (m, n); here they are cancelled with
(m, n) symbolic, and the per-variable numerator degree that justifies the
finite grid is measured.
"""

import pytest

sp = pytest.importorskip("sympy")

from ggp.verify import IDENTITY_DEGREE_BOUND  # noqa: E402

m, n, K = sp.symbols("m n kappa")


def frac(const, num, den):
    """(numerator Poly, denominator Poly) from linear factor lists; no cancellation."""
    N = sp.Poly(const, m, n, K)
    D = sp.Poly(1, m, n, K)
    for f in num:
        N *= sp.Poly(f, m, n, K)
    for f in den:
        D *= sp.Poly(f, m, n, K)
    return N, D


def A(a, b, k=K):
    return frac(a * (a - 1) * b, [a + b + k - 1, a + b + k],
                [a + k - 1, a + k, a + b + 2 * k - 1, a + b + 2 * k])


def B(a, b, k=K):
    return frac(-b * (b - 1), [a + b + k], [b + k - 1, b + k])


def at(a, b, k=K):
    return frac(a, [b + a + k, a - 1 + 2 * k, b + a - 1 + 3 * k],
                [a + k, a - 1 + k, b + a + 2 * k, b + a - 1 + 2 * k])


def c(b, k=K):
    return frac(b, [b - 1 + 2 * k], [b + k, b - 1 + k])


def mul(x, y):
    return x[0] * y[0], x[1] * y[1]


def scal(s, x):
    return sp.Poly(s, m, n, K) * x[0], x[1]


def combine(*terms):
    """Sum of fractions over the product of all denominators."""
    total = sp.Poly(0, m, n, K)
    for i, (num, _) in enumerate(terms):
        other = sp.Poly(1, m, n, K)
        for j, (_, den) in enumerate(terms):
            if j != i:
                other *= den
        total += num * other
    return total, [num for num, _ in terms], [den for _, den in terms]


K1 = K + 1
IDENTITIES = {
    "i": [mul(A(m, n - 1), at(m - 2, n - 2, K1)), scal(-1, mul(A(m - 1, n - 1), at(m, n - 1)))],
    "ii": [mul(B(m, n - 1), c(n - 3, K1)), scal(-1, mul(B(m + 1, n - 2), c(n - 1)))],
    "iii": [scal(-1, mul(at(m, n - 1), B(m - 1, n - 1))), mul(at(m, n - 3, K1), B(m, n - 1)),
            mul(A(m, n - 1), c(n - 2, K1)), scal(-1, mul(A(m + 1, n - 2), c(n - 1)))],
    "iv": [A(m, n - 1), scal(m, at(m - 1, n - 1, K1)), scal(-(m - 1), at(m, n - 1)),
           scal(-1, A(m, n))],
    "v": [B(m, n - 1), scal(-(m + 1), c(n - 1)), scal(m, c(n - 1, K1)), scal(-1, B(m, n))],
}


@pytest.mark.parametrize("name", list(IDENTITIES))
def test_identity_vanishes_identically(name):
    numerator, _, _ = combine(*IDENTITIES[name])
    assert numerator.is_zero


@pytest.mark.parametrize("name", list(IDENTITIES))
def test_grid_exceeds_degree_bound(name):
    terms = IDENTITIES[name]
    dens = [d for _, d in terms]
    for i, (num, _) in enumerate(terms):
        p = num
        for j, d in enumerate(dens):
            if j != i:
                p = p * d
        assert p.degree(m) < IDENTITY_DEGREE_BOUND
        assert p.degree(n) < IDENTITY_DEGREE_BOUND
    # the grid used for certification has 26 > bound points per variable
    assert 26 > IDENTITY_DEGREE_BOUND
