"""Sparse bivariate polynomials in (z1, z2) with coefficients in Q(kappa)."""

from __future__ import annotations

from fractions import Fraction
from typing import Iterator, Mapping, NamedTuple

from .scalar import (
    ONE,
    ZERO,
    KappaRational,
    PoleError,
    Scalar,
    eval_kappa,
    shift_kappa,
)


class Weight(NamedTuple):
    """Exponent pair (a, b) of the monomial z1^a z2^b."""

    a: int
    b: int


def export_key(w: tuple[int, int]) -> tuple[int, int]:
    # descending total degree, then descending z1-degree
    return (-(w[0] + w[1]), -w[0])


def _coerce(c: Scalar) -> KappaRational:
    return c if isinstance(c, KappaRational) else KappaRational.const(c)


class BiPoly:
    """Immutable sparse polynomial ``sum c[a,b] z1^a z2^b``.

    Zero coefficients are never stored.  Iteration follows the export order
    (total degree descending, then z1-degree descending).
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[tuple[int, int], Scalar] | None = None):
        clean: dict[Weight, KappaRational] = {}
        for (a, b), c in (terms or {}).items():
            if a < 0 or b < 0:
                raise ValueError(f"negative exponent ({a}, {b})")
            c = _coerce(c)
            if c:
                clean[Weight(a, b)] = c
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict) -> "BiPoly":
        p = cls.__new__(cls)
        p._terms = {Weight(*w): c for w, c in terms.items() if c}
        p._hash = None
        return p

    @classmethod
    def z1(cls) -> "BiPoly":
        return cls({(1, 0): ONE})

    @classmethod
    def z2(cls) -> "BiPoly":
        return cls({(0, 1): ONE})

    @classmethod
    def const(cls, c: Scalar) -> "BiPoly":
        return cls({(0, 0): c})

    @classmethod
    def monomial(cls, a: int, b: int, c: Scalar = 1) -> "BiPoly":
        return cls({(a, b): c})

    # -- inspection ---------------------------------------------------------
    def items(self) -> list[tuple[Weight, KappaRational]]:
        return sorted(self._terms.items(), key=lambda kv: export_key(kv[0]))

    def __iter__(self) -> Iterator[Weight]:
        return iter(w for w, _ in self.items())

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def coefficient(self, w: tuple[int, int]) -> KappaRational:
        return self._terms.get(Weight(*w), ZERO)

    def support(self) -> set[Weight]:
        return set(self._terms)

    def degree(self) -> int:
        return max((a + b for a, b in self._terms), default=-1)

    # -- ring operations ----------------------------------------------------
    def __add__(self, other) -> "BiPoly":
        if not isinstance(other, BiPoly):
            other = BiPoly.const(other)
        out = dict(self._terms)
        for w, c in other._terms.items():
            out[w] = out[w] + c if w in out else c
        return BiPoly._raw(out)

    __radd__ = __add__

    def __neg__(self) -> "BiPoly":
        return BiPoly._raw({w: -c for w, c in self._terms.items()})

    def __sub__(self, other) -> "BiPoly":
        if not isinstance(other, BiPoly):
            other = BiPoly.const(other)
        return self + (-other)

    def __rsub__(self, other) -> "BiPoly":
        return (-self) + other

    def __mul__(self, other) -> "BiPoly":
        if not isinstance(other, BiPoly):
            return self.scale(other)
        out: dict[tuple[int, int], KappaRational] = {}
        for (a1, b1), c1 in self._terms.items():
            for (a2, b2), c2 in other._terms.items():
                w = (a1 + a2, b1 + b2)
                c = c1 * c2
                out[w] = out[w] + c if w in out else c
        return BiPoly._raw(out)

    def __rmul__(self, other) -> "BiPoly":
        return self.scale(other)

    def scale(self, s: Scalar) -> "BiPoly":
        s = _coerce(s)
        if not s:
            return BiPoly()
        return BiPoly._raw({w: c * s for w, c in self._terms.items()})

    def __eq__(self, other) -> bool:
        if isinstance(other, BiPoly):
            return self._terms == other._terms
        if isinstance(other, (int, Fraction, KappaRational)):
            return self == BiPoly.const(other)
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __repr__(self) -> str:
        return f"BiPoly({self})"

    def __str__(self) -> str:
        from .formats import bipoly_text

        return bipoly_text(self)

    # -- calculus and substitutions ----------------------------------------
    def partial(self, axis: int) -> "BiPoly":
        """Formal partial derivative in z1 (axis=1) or z2 (axis=2)."""
        if axis not in (1, 2):
            raise ValueError("axis must be 1 or 2")
        out = {}
        for (a, b), c in self._terms.items():
            e = a if axis == 1 else b
            if e:
                w = (a - 1, b) if axis == 1 else (a, b - 1)
                out[w] = c * e
        return BiPoly._raw(out)

    def shift_kappa(self, delta: int) -> "BiPoly":
        if delta == 0:
            return self
        return BiPoly._raw({w: shift_kappa(c, delta) for w, c in self._terms.items()})

    def swap_vars(self) -> "BiPoly":
        return BiPoly._raw({(b, a): c for (a, b), c in self._terms.items()})

    def specialize(self, r) -> "BiPoly":
        """Evaluate every coefficient at kappa = r (constant coefficients result)."""
        r = Fraction(r)
        out = {}
        for w, c in self.items():
            try:
                out[w] = KappaRational.const(eval_kappa(c, r))
            except PoleError:
                raise PoleError(r, f"coefficient of z1^{w.a} z2^{w.b}") from None
        return BiPoly._raw(out)

    def is_specialized(self) -> bool:
        return all(c.is_constant() for c in self._terms.values())


# functional spellings of the operations

def add(p: BiPoly, q: BiPoly) -> BiPoly:
    return p + q


def mul(p: BiPoly, q: BiPoly) -> BiPoly:
    return p * q


def scale(p: BiPoly, s: Scalar) -> BiPoly:
    return p.scale(s)


def partial(p: BiPoly, axis: int) -> BiPoly:
    return p.partial(axis)


def shift_kappa_poly(p: BiPoly, delta: int) -> BiPoly:
    return p.shift_kappa(delta)


def swap_vars(p: BiPoly) -> BiPoly:
    return p.swap_vars()


def specialize(p: BiPoly, r) -> BiPoly:
    return p.specialize(r)


def coefficient(p: BiPoly, w: tuple[int, int]) -> KappaRational:
    return p.coefficient(w)
