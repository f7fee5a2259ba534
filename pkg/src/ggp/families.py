"""Closed-form coefficients and the constructive routes to P_{m,n}.

Besides the eigensolver there are two independent ways to build the
polynomials: the generating function of the Jack row P_{m,0}, and the
three-term recurrence that lowers n (or, by z1 <-> z2 duality, m).
"""

from __future__ import annotations

import math
from functools import lru_cache

from .bipoly import BiPoly
from .csoperator import LabeledGegenbauer
from .scalar import ONE, ZERO, KappaRational, pochhammer


def _ratio(const: int, num: tuple, den: tuple) -> KappaRational:
    """``const * prod(a + b k) / prod(a + b k)`` for (a, b) factor pairs."""
    x = KappaRational.const(const)
    for a, b in num:
        x = x * KappaRational.linear(a, b)
    for a, b in den:
        x = x / KappaRational.linear(a, b)
    return x


@lru_cache(maxsize=None)
def coeff_A(m: int, n: int) -> KappaRational:
    if m < 2 or n < 1:
        return ZERO
    return _ratio(
        m * (m - 1) * n,
        ((m + n - 1, 1), (m + n, 1)),
        ((m - 1, 1), (m, 1), (m + n - 1, 2), (m + n, 2)),
    )


@lru_cache(maxsize=None)
def coeff_B(m: int, n: int) -> KappaRational:
    if n < 2:
        return ZERO
    return _ratio(-n * (n - 1), ((m + n, 1),), ((n - 1, 1), (n, 1)))


@lru_cache(maxsize=None)
def coeff_a_tilde(m: int, n: int) -> KappaRational:
    if m <= 0 or n < 0:
        return ZERO
    return _ratio(
        m,
        ((n + m, 1), (m - 1, 2), (n + m - 1, 3)),
        ((m, 1), (m - 1, 1), (n + m, 2), (n + m - 1, 2)),
    )


@lru_cache(maxsize=None)
def coeff_c(n: int) -> KappaRational:
    if n <= 0:
        return ZERO
    return _ratio(n, ((n - 1, 2),), ((n, 1), (n - 1, 1)))


# ---------------------------------------------------------------------------
# generating functions

def _series_row(max_m: int, weights: list[tuple[BiPoly, int]]) -> list[BiPoly]:
    """Coefficients f_m of g(t)^(-kappa) for g = 1 + sum_j s_j t^j.

    ``weights`` lists (s_j, j).  From g f' = -kappa g' f,
    m f_m = -sum_j (m - j + j*kappa) s_j f_{m-j}.
    """
    f = [BiPoly.const(ONE)]
    for m in range(1, max_m + 1):
        acc = BiPoly()
        for s, j in weights:
            if m - j >= 0:
                acc = acc + (s * f[m - j]).scale(KappaRational.linear(-(m - j), -j))
        f.append(acc.scale(KappaRational.const(1) / m))
    return f


def _normalize_row(f: list[BiPoly]) -> list[BiPoly]:
    return [fm.scale(math.factorial(m) / pochhammer(m)) for m, fm in enumerate(f)]


@lru_cache(maxsize=None)
def _jack_polys(max_m: int) -> tuple[BiPoly, ...]:
    z1, z2 = BiPoly.z1(), BiPoly.z2()
    # g = 1 - z1 t + z2 t^2 - t^3
    f = _series_row(max_m, [(-z1, 1), (z2, 2), (BiPoly.const(-1), 3)])
    return tuple(_normalize_row(f))


def jack_row(max_m: int) -> list[LabeledGegenbauer]:
    """P_{0,0}, ..., P_{max_m,0} from (1 - z1 t + z2 t^2 - t^3)^(-kappa)."""
    if max_m < 0:
        raise ValueError("max_m must be nonnegative")
    return [LabeledGegenbauer(m, 0, p, "genfunc") for m, p in enumerate(_jack_polys(max_m))]


@lru_cache(maxsize=None)
def _a1_polys(max_m: int) -> tuple[BiPoly, ...]:
    z = BiPoly.z1()
    f = _series_row(max_m, [(-z, 1), (BiPoly.const(1), 2)])
    return tuple(_normalize_row(f))


def a1_row(max_m: int) -> list[BiPoly]:
    """Classical monic P_m(z) = m!/(kappa)_m C_m(z/2), for m = 0..max_m.

    Polynomials in the single variable z are stored as BiPoly in z1 alone.
    """
    if max_m < 0:
        raise ValueError("max_m must be nonnegative")
    return list(_a1_polys(max_m))


# ---------------------------------------------------------------------------
# recurrences

@lru_cache(maxsize=None)
def _jack(m: int) -> BiPoly:
    return _jack_polys(m)[m]


@lru_cache(maxsize=None)
def _lower_n(m: int, n: int) -> BiPoly:
    if m < 0 or n < 0:
        return BiPoly()
    if n == 0:
        return _jack(m)
    p = BiPoly.z2() * _lower_n(m, n - 1)
    a = coeff_a_tilde(m, n - 1)
    if a:
        p = p - _lower_n(m - 1, n - 1).scale(a)
    c = coeff_c(n - 1)
    if c:
        p = p - _lower_n(m + 1, n - 2).scale(c)
    return p


@lru_cache(maxsize=None)
def _lower_m(m: int, n: int) -> BiPoly:
    if m < 0 or n < 0:
        return BiPoly()
    if m == 0:
        return _jack(n).swap_vars()
    p = BiPoly.z1() * _lower_m(m - 1, n)
    a = coeff_a_tilde(n, m - 1)
    if a:
        p = p - _lower_m(m - 1, n - 1).scale(a)
    c = coeff_c(m - 1)
    if c:
        p = p - _lower_m(m - 2, n + 1).scale(c)
    return p


def build_by_recurrence(m: int, n: int, direction: str = "lower-n") -> LabeledGegenbauer:
    """P_{m,n} by the n-lowering recurrence, or its z1<->z2 twin (``lower-m``)."""
    if m < 0 or n < 0:
        raise ValueError("indices must be nonnegative")
    if direction == "lower-n":
        return LabeledGegenbauer(m, n, _lower_n(m, n), "recurrence")
    if direction == "lower-m":
        return LabeledGegenbauer(m, n, _lower_m(m, n), "twin-recurrence")
    raise ValueError(f"unknown direction {direction!r}")


def clear_caches() -> None:
    for fn in (_jack_polys, _a1_polys, _jack, _lower_n, _lower_m):
        fn.cache_clear()
