"""High-precision decimal helpers shared by the weight validators and region code.

All non-rational arithmetic in this package (square roots, logarithms,
exponentials) runs in a :mod:`decimal` context whose precision defaults to 50
significant digits and can be overridden through the ``QBF_PRECISION``
environment variable.
"""

from __future__ import annotations

import os
from decimal import Context, Decimal
from fractions import Fraction

DEFAULT_DIGITS = 50
_ENV_VAR = "QBF_PRECISION"


def working_digits(digits: int | None = None) -> int:
    """Resolve the number of significant digits for high-precision work."""
    if digits is None:
        raw = os.environ.get(_ENV_VAR)
        if raw:
            try:
                digits = int(raw)
            except ValueError:
                raise ValueError(f"{_ENV_VAR} must be an integer digit count, got {raw!r}")
        else:
            digits = DEFAULT_DIGITS
    if digits < 10:
        raise ValueError(f"precision must be at least 10 digits, got {digits}")
    return digits


def make_context(digits: int | None = None) -> Context:
    return Context(prec=working_digits(digits))


def to_decimal(x, ctx: Context) -> Decimal:
    """Convert int/str/float/Fraction/Decimal to Decimal in the given context.

    Floats go through their shortest decimal repr, so 0.3 means 3/10.
    """
    if isinstance(x, Decimal):
        return ctx.plus(x)
    if isinstance(x, Fraction):
        return ctx.divide(Decimal(x.numerator), Decimal(x.denominator))
    if isinstance(x, float):
        return ctx.plus(Decimal(repr(x)))
    return ctx.plus(Decimal(x))


def sqrt_fraction(fr: Fraction, ctx: Context) -> Decimal:
    if fr < 0:
        raise ValueError("square root of a negative rational")
    return ctx.sqrt(to_decimal(fr, ctx))


def render(x: Decimal, digits: int) -> str:
    """Deterministic fixed-significance rendering of a Decimal."""
    ctx = Context(prec=digits)
    return str(ctx.plus(x))
