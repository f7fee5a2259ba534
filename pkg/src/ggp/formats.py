"""Text, LaTeX and JSON renderings of scalars and polynomials.

JSON is the machine interface and is byte-stable; text and LaTeX are for
people.
"""

from __future__ import annotations

import json
from fractions import Fraction

from .bipoly import BiPoly
from .csoperator import LabeledGegenbauer
from .scalar import KappaRational, UniPoly, normalize


def rational_str(x: Fraction) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def parse_rational(s: str) -> Fraction:
    """Parse ``p`` or ``p/q`` exactly; floats and garbage raise ValueError."""
    s = s.strip()
    num, sep, den = s.partition("/")
    try:
        p = int(num)
        q = int(den) if sep else 1
    except ValueError:
        raise ValueError(f"malformed rational {s!r}") from None
    if q == 0:
        raise ValueError(f"malformed rational {s!r}: zero denominator")
    return Fraction(p, q)


# ---------------------------------------------------------------------------
# integer-polynomial rendering shared by text and latex

def _intpoly(coeffs, var: str, mul: str) -> str:
    parts = []
    for k in range(len(coeffs) - 1, -1, -1):
        c = coeffs[k]
        if c == 0:
            continue
        sign = "-" if c < 0 else "+"
        mag = abs(c)
        if k == 0:
            body = str(mag)
        else:
            pw = var if k == 1 else (f"{var}^{k}" if "\\" not in var else f"{var}^{{{k}}}")
            body = pw if mag == 1 else f"{mag}{mul}{pw}"
        parts.append((sign, body))
    out = ""
    for i, (sign, body) in enumerate(parts):
        if i == 0:
            out = body if sign == "+" else "-" + body
        else:
            out += sign + body
    return out or "0"


def _split(x: KappaRational) -> tuple[int, tuple, tuple]:
    """Sign and integer numerator/denominator polynomials, no common content."""
    scale, n, d = x.primitive_parts()
    sign = -1 if scale < 0 else 1
    p, q = abs(scale.numerator), scale.denominator
    return sign, tuple(p * c for c in n), tuple(q * c for c in d)


def _is_one(poly: tuple) -> bool:
    return poly == (1,)


def _nterms(poly: tuple) -> int:
    return sum(1 for c in poly if c)


def kappa_rational_text(x: KappaRational, var: str = "k") -> str:
    if x.is_zero():
        return "0"
    sign, n, d = _split(x)
    s = _intpoly(n, var, "*")
    if not _is_one(d):
        if _nterms(n) > 1:
            s = f"({s})"
        ds = _intpoly(d, var, "*")
        # a bare integer or monic power of kappa needs no parentheses
        if len(d) > 1 and (_nterms(d) > 1 or d[-1] != 1):
            ds = f"({ds})"
        s += "/" + ds
    elif sign < 0 and _nterms(n) > 1:
        s = f"({s})"
    return ("-" if sign < 0 else "") + s


def _monomial(a: int, b: int, latex: bool) -> str:
    parts = []
    for i, e in ((1, a), (2, b)):
        if e == 0:
            continue
        base = f"z_{{{i}}}" if latex else f"z{i}"
        if e > 1:
            base += f"^{{{e}}}" if latex else f"^{e}"
        parts.append(base)
    return ("" if latex else "*").join(parts)


def _coeff_latex(n: tuple, d: tuple) -> str:
    ns = _intpoly(n, "\\kappa", "")
    if _is_one(d):
        return ns
    return f"\\frac{{{ns}}}{{{_intpoly(d, chr(92) + 'kappa', '')}}}"


def _render(p: BiPoly, latex: bool) -> str:
    pieces = []
    for (a, b), c in p.items():
        sign, n, d = _split(c)
        mono = _monomial(a, b, latex)
        if latex:
            body = _coeff_latex(n, d)
            if not mono and _nterms(n) > 1 and _is_one(d) and (sign < 0 or pieces):
                body = f"\\left({body}\\right)"
            if mono:
                if body == "1":
                    body = mono
                elif _nterms(n) > 1 and _is_one(d):
                    body = f"\\left({body}\\right){mono}"
                else:
                    body = body + mono
        else:
            body = kappa_rational_text(-c if sign < 0 else c)
            if not mono and _nterms(n) > 1 and _is_one(d) and (sign < 0 or pieces):
                body = f"({body})"
            if mono:
                if body == "1":
                    body = mono
                elif _nterms(n) > 1 and _is_one(d):
                    body = f"({body})*{mono}"
                else:
                    body = f"{body}*{mono}"
        pieces.append((sign, body))
    if not pieces:
        return "0"
    out = ("-" if pieces[0][0] < 0 else "") + pieces[0][1]
    for sign, body in pieces[1:]:
        out += (" - " if sign < 0 else " + ") + body
    return out


def bipoly_text(p: BiPoly) -> str:
    return _render(p, latex=False)


def bipoly_latex(p: BiPoly) -> str:
    return _render(p, latex=True)


# ---------------------------------------------------------------------------
# JSON

def _kappa_json(g: LabeledGegenbauer) -> dict:
    if g.kappa is None:
        return {"kind": "symbolic"}
    return {"kind": "rational", "value": rational_str(g.kappa)}


def to_dict(g: LabeledGegenbauer) -> dict:
    terms = []
    for (a, b), c in g.poly.items():
        terms.append(
            {
                "e1": a,
                "e2": b,
                "num": [rational_str(x) for x in c.num.coeffs],
                "den": [rational_str(x) for x in c.den.coeffs],
            }
        )
    return {
        "family": "A2",
        "m": g.m,
        "n": g.n,
        "kappa": _kappa_json(g),
        "method": g.method,
        "terms": terms,
    }


def export_json(g: LabeledGegenbauer) -> str:
    return json.dumps(to_dict(g), separators=(",", ":"))


def from_dict(d: dict) -> LabeledGegenbauer:
    if d.get("family") != "A2":
        raise ValueError(f"unsupported family {d.get('family')!r}")
    kind = d["kappa"]["kind"]
    if kind == "symbolic":
        kappa = None
    elif kind == "rational":
        kappa = parse_rational(d["kappa"]["value"])
    else:
        raise ValueError(f"unknown kappa kind {kind!r}")
    terms = {}
    for t in d["terms"]:
        num = UniPoly(parse_rational(s) for s in t["num"])
        den = UniPoly(parse_rational(s) for s in t["den"])
        terms[(int(t["e1"]), int(t["e2"]))] = normalize(num, den)
    return LabeledGegenbauer(int(d["m"]), int(d["n"]), BiPoly(terms), d["method"], kappa)


def parse_json(text: str) -> LabeledGegenbauer:
    return from_dict(json.loads(text))
