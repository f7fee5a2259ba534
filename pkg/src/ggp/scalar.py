"""Exact ground arithmetic: rationals, polynomials in kappa, and the field Q(kappa).

``KappaRational`` keeps its value as ``scale * N(k) / D(k)`` where ``N`` and ``D``
are primitive integer polynomials with positive leading coefficients and
``gcd(N, D) = 1``.  That form is unique, so equality is tuple equality, and it
converts trivially to the monic-denominator form used for export (see
:attr:`KappaRational.num` / :attr:`KappaRational.den`).
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Sequence, Union

Rational = Fraction
IntPoly = tuple  # ascending integer coefficients, no trailing zeros

_ONE: IntPoly = (1,)


class PoleError(ZeroDivisionError):
    """Raised when a rational function is evaluated at a root of its denominator."""

    def __init__(self, at: Fraction, detail: str = ""):
        self.at = Fraction(at)
        self.detail = detail
        msg = f"pole at kappa = {self.at}"
        if detail:
            msg += f" ({detail})"
        super().__init__(msg)


# ---------------------------------------------------------------------------
# integer polynomial kernel

def _trim(c: list) -> IntPoly:
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


def _ip_mul(a: IntPoly, b: IntPoly) -> IntPoly:
    if a == _ONE:
        return b
    if b == _ONE:
        return a
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return tuple(out)


def _ip_lincomb(s: int, a: IntPoly, t: int, b: IntPoly) -> IntPoly:
    n = max(len(a), len(b))
    out = [0] * n
    for i, x in enumerate(a):
        out[i] = s * x
    for i, y in enumerate(b):
        out[i] += t * y
    return _trim(out)


def _content(a: IntPoly) -> int:
    g = 0
    for x in a:
        g = math.gcd(g, x)
        if g == 1:
            break
    return g


def _primitive(a: IntPoly) -> tuple[int, IntPoly]:
    """Split ``a`` into signed content and primitive part with positive lead."""
    g = _content(a)
    if a[-1] < 0:
        g = -g
    if g == 1:
        return 1, a
    return g, tuple(x // g for x in a)


def _prem(a: IntPoly, b: IntPoly) -> IntPoly:
    """Pseudo-remainder of ``a`` by ``b``."""
    r = list(a)
    db = len(b) - 1
    lb = b[-1]
    while r and len(r) - 1 >= db:
        lr = r[-1]
        shift = len(r) - 1 - db
        r = [x * lb for x in r]
        for i, y in enumerate(b):
            r[i + shift] -= lr * y
        r = list(_trim(r))
    return tuple(r)


def _ip_gcd(a: IntPoly, b: IntPoly) -> IntPoly:
    """Monic-up-to-content gcd of two primitive polynomials (primitive Euclid)."""
    if len(a) == 1 or len(b) == 1:
        return _ONE
    if a == b:
        return a
    if len(a) < len(b):
        a, b = b, a
    while b:
        r = _prem(a, b)
        if not r:
            break
        a, b = b, _primitive(r)[1]
        if len(b) == 1:
            return _ONE
    return _primitive(b)[1]


def _ip_exquo(a: IntPoly, b: IntPoly) -> IntPoly:
    """Exact quotient ``a / b`` where ``b`` divides ``a`` in Z[k]."""
    if b == _ONE:
        return a
    r = list(a)
    db = len(b) - 1
    lb = b[-1]
    q = [0] * (len(a) - db)
    for k in range(len(q) - 1, -1, -1):
        coef, rem = divmod(r[k + db], lb)
        if rem:
            raise ArithmeticError("inexact polynomial division")
        q[k] = coef
        if coef:
            for i, y in enumerate(b):
                r[k + i] -= coef * y
    if any(r[:db]):
        raise ArithmeticError("inexact polynomial division")
    return tuple(q)


def _ip_taylor_shift(a: IntPoly, delta: int) -> IntPoly:
    """Coefficients of ``a(k + delta)``."""
    if delta == 0 or len(a) <= 1:
        return a
    c = list(a)
    n = len(c)
    for i in range(n - 1):
        for j in range(n - 2, i - 1, -1):
            c[j] += delta * c[j + 1]
    return tuple(c)


def _ip_eval(a: IntPoly, r: Fraction) -> Fraction:
    # Horner over the common denominator keeps this in integers.
    p, q = r.numerator, r.denominator
    acc = 0
    qk = 1
    for x in reversed(a):
        acc = acc * p + x * qk
        qk *= q
    return Fraction(acc, q ** (len(a) - 1)) if a else Fraction(0)


def _clear_denominators(coeffs: Sequence[Fraction]) -> tuple[Fraction, IntPoly]:
    """Write a rational polynomial as ``content * primitive`` (positive lead)."""
    coeffs = [Fraction(c) for c in coeffs]
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    if not coeffs:
        return Fraction(0), ()
    lcm = 1
    for c in coeffs:
        lcm = lcm * c.denominator // math.gcd(lcm, c.denominator)
    ints = tuple(int(c * lcm) for c in coeffs)
    g, prim = _primitive(ints)
    return Fraction(g, lcm), prim


# ---------------------------------------------------------------------------
# UniPoly

class UniPoly:
    """Univariate polynomial in kappa with rational coefficients, ascending order."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        c = [Fraction(x) for x in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self.coeffs: tuple[Fraction, ...] = tuple(c)

    @classmethod
    def kappa(cls) -> "UniPoly":
        return cls((0, 1))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def leading(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def __call__(self, r) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * r + c
        return acc

    def __add__(self, other: "UniPoly") -> "UniPoly":
        a, b = self.coeffs, other.coeffs
        n = max(len(a), len(b))
        return UniPoly(
            (a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n)
        )

    def __neg__(self) -> "UniPoly":
        return UniPoly(-c for c in self.coeffs)

    def __sub__(self, other: "UniPoly") -> "UniPoly":
        return self + (-other)

    def __mul__(self, other) -> "UniPoly":
        if not isinstance(other, UniPoly):
            return UniPoly(c * other for c in self.coeffs)
        if not self.coeffs or not other.coeffs:
            return UniPoly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, x in enumerate(self.coeffs):
            for j, y in enumerate(other.coeffs):
                out[i + j] += x * y
        return UniPoly(out)

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if isinstance(other, UniPoly):
            return self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"UniPoly({[str(c) for c in self.coeffs]})"


# ---------------------------------------------------------------------------
# KappaRational

class KappaRational:
    """Element of Q(kappa) in canonical reduced form.

    Build values with :func:`normalize`, :meth:`const`, :meth:`kappa` or
    :meth:`linear`; combine them with the usual arithmetic operators.
    """

    __slots__ = ("scale", "_n", "_d", "_hash")

    def __init__(self, scale: Fraction, n: IntPoly, d: IntPoly):
        # Trusted constructor: callers guarantee canonical form.
        self.scale = scale
        self._n = n
        self._d = d
        self._hash = None

    # -- constructors -------------------------------------------------------
    @classmethod
    def const(cls, value) -> "KappaRational":
        return cls(Fraction(value), _ONE, _ONE)

    @classmethod
    def kappa(cls) -> "KappaRational":
        return cls(Fraction(1), (0, 1), _ONE)

    @classmethod
    def linear(cls, a, b) -> "KappaRational":
        """The polynomial ``a + b*kappa``."""
        return _from_ints(Fraction(1), _trim([a, b]), _ONE) if b else cls.const(a)

    # -- canonical views ----------------------------------------------------
    @property
    def num(self) -> UniPoly:
        """Numerator over the monic denominator :attr:`den`."""
        if self.scale == 0:
            return UniPoly()
        s = self.scale / self._d[-1]
        return UniPoly(s * x for x in self._n)

    @property
    def den(self) -> UniPoly:
        lead = self._d[-1]
        return UniPoly(Fraction(x, lead) for x in self._d)

    def primitive_parts(self) -> tuple[Fraction, IntPoly, IntPoly]:
        """``(scale, N, D)`` with value ``scale*N/D`` and N, D primitive integer polys."""
        return self.scale, self._n, self._d

    def is_zero(self) -> bool:
        return self.scale == 0

    def is_constant(self) -> bool:
        return len(self._n) == 1 and len(self._d) == 1

    def is_polynomial(self) -> bool:
        return len(self._d) == 1

    # -- arithmetic ---------------------------------------------------------
    def __add__(self, other) -> "KappaRational":
        if not isinstance(other, KappaRational):
            other = KappaRational.const(other)
        if self.scale == 0:
            return other
        if other.scale == 0:
            return self
        d1, d2 = self._d, other._d
        if d1 == d2:
            g, a, b = d1, _ONE, _ONE
        else:
            g = _ip_gcd(d1, d2)
            a = _ip_exquo(d1, g)
            b = _ip_exquo(d2, g)
        s1, s2 = self.scale, other.scale
        lcm = s1.denominator * s2.denominator // math.gcd(s1.denominator, s2.denominator)
        i1 = s1.numerator * (lcm // s1.denominator)
        i2 = s2.numerator * (lcm // s2.denominator)
        num = _ip_lincomb(i1, _ip_mul(self._n, b), i2, _ip_mul(other._n, a))
        if not num:
            return ZERO
        c, num = _primitive(num)
        den = _ip_mul(g, _ip_mul(a, b))
        if g != _ONE:
            h = _ip_gcd(num, g)
            if h != _ONE:
                num = _ip_exquo(num, h)
                den = _ip_exquo(den, h)
        return KappaRational(Fraction(c, lcm), num, den)

    __radd__ = __add__

    def __neg__(self) -> "KappaRational":
        return KappaRational(-self.scale, self._n, self._d)

    def __sub__(self, other) -> "KappaRational":
        if not isinstance(other, KappaRational):
            other = KappaRational.const(other)
        return self + (-other)

    def __rsub__(self, other) -> "KappaRational":
        return (-self) + other

    def __mul__(self, other) -> "KappaRational":
        if not isinstance(other, KappaRational):
            if isinstance(other, (int, Fraction)):
                s = self.scale * other
                return KappaRational(s, self._n, self._d) if s else ZERO
            return NotImplemented
        if self.scale == 0 or other.scale == 0:
            return ZERO
        n1, d1, n2, d2 = self._n, self._d, other._n, other._d
        g1 = _ip_gcd(n1, d2)
        if g1 != _ONE:
            n1, d2 = _ip_exquo(n1, g1), _ip_exquo(d2, g1)
        g2 = _ip_gcd(n2, d1)
        if g2 != _ONE:
            n2, d1 = _ip_exquo(n2, g2), _ip_exquo(d1, g2)
        return KappaRational(self.scale * other.scale, _ip_mul(n1, n2), _ip_mul(d1, d2))

    __rmul__ = __mul__

    def inverse(self) -> "KappaRational":
        if self.scale == 0:
            raise ZeroDivisionError("inverse of zero in Q(kappa)")
        return KappaRational(1 / self.scale, self._d, self._n)

    def __truediv__(self, other) -> "KappaRational":
        if not isinstance(other, KappaRational):
            other = KappaRational.const(other)
        return self * other.inverse()

    def __rtruediv__(self, other) -> "KappaRational":
        return KappaRational.const(other) * self.inverse()

    # -- comparison ---------------------------------------------------------
    def __eq__(self, other) -> bool:
        if isinstance(other, KappaRational):
            return self.scale == other.scale and (
                self.scale == 0 or (self._n == other._n and self._d == other._d)
            )
        if isinstance(other, (int, Fraction)):
            return self.is_constant() and self.scale == other
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.scale, self._n, self._d))
        return self._hash

    def __bool__(self) -> bool:
        return self.scale != 0

    def __repr__(self) -> str:
        return f"KappaRational({self})"

    def __str__(self) -> str:
        from .formats import kappa_rational_text

        return kappa_rational_text(self)


ZERO = KappaRational(Fraction(0), _ONE, _ONE)
ONE = KappaRational(Fraction(1), _ONE, _ONE)

Scalar = Union[KappaRational, int, Fraction]


def _from_ints(scale: Fraction, n: IntPoly, d: IntPoly) -> KappaRational:
    """Canonicalise ``scale*n/d`` for arbitrary nonzero integer polynomials."""
    if not d:
        raise ZeroDivisionError("zero denominator")
    if not n or scale == 0:
        return ZERO
    cn, n = _primitive(n)
    cd, d = _primitive(d)
    g = _ip_gcd(n, d)
    if g != _ONE:
        n, d = _ip_exquo(n, g), _ip_exquo(d, g)
    return KappaRational(scale * Fraction(cn, cd), n, d)


def normalize(num: UniPoly, den: UniPoly) -> KappaRational:
    """Canonical element of Q(kappa) equal to ``num/den``."""
    if den.is_zero():
        raise ZeroDivisionError("zero denominator in normalize")
    cn, n = _clear_denominators(num.coeffs)
    if cn == 0:
        return ZERO
    cd, d = _clear_denominators(den.coeffs)
    return _from_ints(cn / cd, n, d)


def pochhammer(m: int) -> KappaRational:
    """Rising factorial (kappa)_m = kappa (kappa+1) ... (kappa+m-1)."""
    if m < 0:
        raise ValueError("pochhammer index must be nonnegative")
    p: IntPoly = _ONE
    for j in range(m):
        p = _ip_mul(p, (j, 1))
    return KappaRational(Fraction(1), p, _ONE)


def shift_kappa(x: KappaRational, delta: int) -> KappaRational:
    """Substitute kappa -> kappa + delta.

    Integer Taylor shifts are automorphisms of Z[k] fixing leading
    coefficients, so the canonical form survives without another gcd.
    """
    if delta == 0 or x.scale == 0:
        return x
    return KappaRational(
        x.scale, _ip_taylor_shift(x._n, delta), _ip_taylor_shift(x._d, delta)
    )


def eval_kappa(x: KappaRational, r) -> Fraction:
    """Exact value of ``x`` at kappa = r; raises :class:`PoleError` on a pole."""
    r = Fraction(r)
    d = _ip_eval(x._d, r)
    if d == 0:
        raise PoleError(r)
    if x.scale == 0:
        return Fraction(0)
    return x.scale * _ip_eval(x._n, r) / d
