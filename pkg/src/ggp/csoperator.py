"""The A2 Calogero-Sutherland operator and its triangular eigensolver.

The operator acts on a monomial z1^a z2^b as

    eps(a, b) z1^a z2^b - 3a(a-1) z1^(a-2) z2^(b+1)
                        - 3b(b-1) z1^(a+1) z2^(b-2) - 9ab z1^(a-1) z2^(b-1)

so it only lowers exponents by the negative roots (-2, 1), (1, -2) and
(-1, -1).  In the dominance order it is therefore upper triangular, and the
monic eigenfunction for (m, n) follows by back-substitution.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Optional

from .bipoly import BiPoly, Weight, export_key
from .scalar import ONE, KappaRational, PoleError

METHODS: tuple[str, ...] = ("eigensolver", "recurrence", "twin-recurrence", "genfunc")


@dataclass(frozen=True)
class LabeledGegenbauer:
    """A constructed P_{m,n}; ``kappa`` is None for symbolic kappa."""

    m: int
    n: int
    poly: BiPoly
    method: str = "eigensolver"
    kappa: Optional[Fraction] = None

    @property
    def symbolic(self) -> bool:
        return self.kappa is None


def eigenvalue(m: int, n: int) -> KappaRational:
    """m^2 + n^2 + mn + 3 kappa (m + n)."""
    return KappaRational.linear(m * m + n * n + m * n, 3 * (m + n))


def _transitions(a: int, b: int):
    """Off-diagonal images of z1^a z2^b as (target, integer coefficient)."""
    if a >= 2:
        yield (a - 2, b + 1), -3 * a * (a - 1)
    if b >= 2:
        yield (a + 1, b - 2), -3 * b * (b - 1)
    if a >= 1 and b >= 1:
        yield (a - 1, b - 1), -9 * a * b


def apply_operator(p: BiPoly) -> BiPoly:
    out: dict[tuple[int, int], KappaRational] = {}

    def put(w, c):
        out[w] = out[w] + c if w in out else c

    for (a, b), c in p.items():
        put((a, b), c * eigenvalue(a, b))
        for w, t in _transitions(a, b):
            put(w, c * t)
    return BiPoly._raw(out)


def dominance_leq(mu: tuple[int, int], lam: tuple[int, int]) -> bool:
    """True iff lam - mu is a nonnegative integer combination of the simple roots."""
    da, db = lam[0] - mu[0], lam[1] - mu[1]
    p3, q3 = 2 * da + db, da + 2 * db
    return p3 >= 0 and q3 >= 0 and p3 % 3 == 0 and q3 % 3 == 0


def support(lam: tuple[int, int]) -> list[Weight]:
    """Nonnegative weights dominated by ``lam``, by increasing height."""
    m, n = lam
    found = []
    for p in range(m + n + 1):
        for q in range(m + n + 1 - p):
            a, b = m - 2 * p + q, n + p - 2 * q
            if a >= 0 and b >= 0:
                found.append((p + q, export_key((a, b)), Weight(a, b)))
    found.sort()
    return [w for _, _, w in found]


def _check_kappa(kappa, allow_nonpositive: bool) -> Optional[Fraction]:
    if kappa is None:
        return None
    kappa = Fraction(kappa)
    if kappa <= 0 and not allow_nonpositive:
        raise ValueError(
            f"specialized kappa must be positive (got {kappa}); "
            "pass allow_nonpositive=True to override"
        )
    return kappa


def eigensolve(
    m: int, n: int, kappa=None, *, allow_nonpositive: bool = False
) -> LabeledGegenbauer:
    """Monic eigenfunction P_{m,n} of the operator, by back-substitution.

    With ``kappa`` given, the whole solve runs over Q at that value; a
    resonance (equal eigenvalues for a dominated weight) raises PoleError.
    """
    if m < 0 or n < 0:
        raise ValueError("indices must be nonnegative")
    kappa = _check_kappa(kappa, allow_nonpositive)
    return LabeledGegenbauer(m, n, _eigensolve(m, n, kappa), "eigensolver", kappa)


@lru_cache(maxsize=None)
def _eigensolve(m: int, n: int, kappa: Optional[Fraction]) -> BiPoly:
    def eps(a, b):
        if kappa is None:
            return eigenvalue(a, b)
        return KappaRational.const(_eval_linear(a, b, kappa))

    lam = (m, n)
    eps_lam = eps(m, n)
    coeffs: dict[Weight, KappaRational] = {}
    for w in support(lam):
        if w == lam:
            coeffs[w] = ONE
            continue
        a, b = w
        acc = None
        # sources nu with T(nu -> w) != 0
        for nu, t in (
            ((a + 2, b - 1), -3 * (a + 2) * (a + 1)),
            ((a - 1, b + 2), -3 * (b + 2) * (b + 1)),
            ((a + 1, b + 1), -9 * (a + 1) * (b + 1)),
        ):
            c = coeffs.get(nu)
            if c is not None and c:
                acc = c * t if acc is None else acc + c * t
        if acc is None or not acc:
            continue
        gap = eps_lam - eps(a, b)
        if not gap:
            if kappa is None:
                raise AssertionError(f"symbolic resonance at {w} below {lam}")
            raise PoleError(kappa, f"resonance between {lam} and {tuple(w)}")
        coeffs[w] = acc / gap
    return BiPoly._raw(coeffs)


def _eval_linear(a: int, b: int, r: Fraction) -> Fraction:
    return a * a + b * b + a * b + 3 * r * (a + b)
