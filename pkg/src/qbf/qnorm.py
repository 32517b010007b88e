"""Norm formulas as exact exponent arithmetic.

Every operator norm here is a power q^e with an exact rational exponent e, so
norms are carried as exponents and never as evaluated powers (q^{-(lam,mu)}
overflows floating point almost immediately).  Two routes are provided for
the same quantity and are cross-checked in the test suite:

* the closed form, exponent -(lam, mu);
* the fusion route, which enumerates the tensor components nu of mu (x) lam,
  forms E(nu) = (mu, mu+2rho) + (lam, lam+2rho) - (nu, nu+2rho) and takes half
  of the minimal exponent (the supremum of q^E over components, square-rooted).

The minimum is attained exactly at nu = lam + mu, which makes the two routes
agree identically.
"""

from __future__ import annotations

from dataclasses import dataclass
from decimal import Decimal
from fractions import Fraction

from . import precision
from .fusion import tensor_decompose
from .root_system import RootSystem, Weight


@dataclass(frozen=True)
class QExponent:
    """The quantity q^value for the session's q in (0, 1).

    Ordering of the represented norms is the reverse of the ordering of the
    exponents: a smaller exponent means a larger norm.
    """

    value: Fraction

    def q_power(self, q, digits: int | None = None) -> Decimal:
        """Render q^value as a high-precision decimal."""
        ctx = precision.make_context(digits)
        qd = precision.to_decimal(_check_q(q), ctx)
        e = precision.to_decimal(self.value, ctx)
        return ctx.exp(ctx.multiply(e, ctx.ln(qd)))

    def __str__(self) -> str:
        return f"q^({self.value})"


def _check_q(q) -> Fraction:
    qf = Fraction(repr(q)) if isinstance(q, float) else Fraction(q)
    if not 0 < qf < 1:
        raise ValueError(f"deformation parameter q must satisfy 0 < q < 1, got {q}")
    return qf


@dataclass(frozen=True)
class SessionConfig:
    """Deformation parameter and rendering precision for a run.

    Floats are canonicalised through their decimal repr, so q=0.3 is exactly
    3/10.  ``precision`` is the number of significant digits used when a
    rational power of q is rendered as a decimal.
    """

    q: Fraction
    precision: int = 12

    def __init__(self, q, precision: int = 12):
        object.__setattr__(self, "q", _check_q(q))
        if precision < 1:
            raise ValueError("precision must be a positive digit count")
        object.__setattr__(self, "precision", int(precision))


def lminus_norm_exponent(rs: RootSystem, lam, mu) -> QExponent:
    """Exponent of the closed-form norm q^{-(lam, mu)}."""
    lam = rs.check_dominant(lam)
    mu = rs.check_dominant(mu)
    return QExponent(-rs.inner_product(lam, mu))


@dataclass(frozen=True)
class RMatrixExponentDetails:
    """Fusion-route exponent data: E(nu) per component and the minimiser."""

    lam: Weight
    mu: Weight
    exponent: Fraction            # half of the minimal E(nu)
    table: tuple[tuple[Weight, int, Fraction], ...]   # (nu, mult, E(nu))
    minimizer: Weight
    ties: tuple[Weight, ...]      # all nu attaining the minimal E(nu)


def rmatrix_exponent_details(rs: RootSystem, lam, mu) -> RMatrixExponentDetails:
    lam = rs.check_dominant(lam)
    mu = rs.check_dominant(mu)
    base = rs.casimir(mu) + rs.casimir(lam)
    table = []
    for nu, m in tensor_decompose(rs, mu, lam).components.items():
        table.append((nu, m, base - rs.casimir(nu)))
    emin = min(e for _, _, e in table)
    ties = tuple(nu for nu, _, e in table if e == emin)
    return RMatrixExponentDetails(
        lam=lam,
        mu=mu,
        exponent=emin / 2,
        table=tuple(table),
        minimizer=ties[0],
        ties=ties,
    )


def rmatrix_sup_exponent(rs: RootSystem, lam, mu) -> QExponent:
    """Exponent of the norm via the R-matrix eigenvalue route.

    Deliberately recomputed through the fusion decomposition rather than the
    closed form, as an in-library cross-check.
    """
    return QExponent(rmatrix_exponent_details(rs, lam, mu).exponent)


def i_norm_exponent(rs: RootSystem, lam, mu) -> QExponent:
    """Exponent of the positive-operator norm, exactly twice the closed form."""
    return QExponent(2 * lminus_norm_exponent(rs, lam, mu).value)
