"""Exact construction and certification of A2 generalized Gegenbauer polynomials."""

__version__ = "0.1.0"

from .scalar import (  # noqa: E402
    KappaRational,
    PoleError,
    UniPoly,
    eval_kappa,
    normalize,
    pochhammer,
    shift_kappa,
)
from .bipoly import BiPoly, Weight  # noqa: E402
from .csoperator import (  # noqa: E402
    LabeledGegenbauer,
    apply_operator,
    dominance_leq,
    eigensolve,
    eigenvalue,
    support,
)
from .families import (  # noqa: E402
    a1_row,
    build_by_recurrence,
    coeff_A,
    coeff_a_tilde,
    coeff_B,
    coeff_c,
    jack_row,
)
