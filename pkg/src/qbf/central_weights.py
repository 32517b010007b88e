"""Central weight candidates on the dual and their validation.

A function w from dominant weights to (0, inf) is a symmetric central weight
precisely when

* Z1:  w(mu) >= 1 for every dominant mu,
* Z2:  w(nu) <= w(lam) w(mu) whenever nu occurs in lam (x) mu,
* SYM: w(mu) = w(conjugate(mu)).

Z2 quantifies over infinitely many fusion triples, so the validator only ever
certifies "verified up to height H".  Comparisons run in the log domain with
a relative tolerance of 1e-12; whenever a built-in family permits an exact
squared-rational reformulation, comparisons within tolerance of equality are
settled exactly instead of trusting floating point.

Built-in families:

* ``beta_norm(beta)``: w(mu) = beta^{|mu|} with |mu| = (mu, mu)^{1/2}, a
  central weight for every beta >= 1;
* ``lst(beta)``: w(mu) = exp(beta c(mu)^{1/2}) with c the quadratic Casimir,
  a central weight for every beta >= 0;
* ``table``: explicit positive values per dominant weight.
"""

from __future__ import annotations

from dataclasses import dataclass
from decimal import Context, Decimal
from fractions import Fraction
from typing import Mapping, NamedTuple

from . import precision
from .fusion import tensor_decompose
from .root_system import RootSystem, Weight

LOG_TOLERANCE = Decimal("1e-12")


@dataclass(frozen=True)
class CentralWeightSpec:
    """Symbolic description of a candidate weight function on dominant weights."""

    kind: str  # "beta_norm" | "lst" | "table"
    beta: Decimal | None = None
    table: Mapping[Weight, Decimal] | None = None

    @classmethod
    def beta_norm(cls, beta) -> "CentralWeightSpec":
        b = _to_positive_decimal(beta, "beta")
        return cls(kind="beta_norm", beta=b)

    @classmethod
    def lst(cls, beta) -> "CentralWeightSpec":
        b = _to_decimal(beta)
        if b < 0:
            raise ValueError(f"lst weights need beta >= 0, got {beta}")
        return cls(kind="lst", beta=b)

    @classmethod
    def from_table(cls, table: Mapping) -> "CentralWeightSpec":
        entries = {}
        for mu, value in table.items():
            v = _to_positive_decimal(value, f"table value at {tuple(mu)}")
            entries[tuple(int(c) for c in mu)] = v
        return cls(kind="table", table=entries)

    def describe(self) -> str:
        if self.kind == "table":
            return f"table({len(self.table)} entries)"
        return f"{self.kind}(beta={self.beta})"


def _to_decimal(x) -> Decimal:
    if isinstance(x, float):
        return Decimal(repr(x))
    if isinstance(x, Fraction):
        return precision.to_decimal(x, precision.make_context())
    return Decimal(x)


def _to_positive_decimal(x, name: str) -> Decimal:
    d = _to_decimal(x)
    if d <= 0:
        raise ValueError(f"{name} must be strictly positive, got {x}")
    return d


class WeightValue(NamedTuple):
    value: Decimal
    log: Decimal


def eval_weight(rs: RootSystem, spec: CentralWeightSpec, mu, digits: int | None = None) -> WeightValue:
    """Evaluate w(mu) and log w(mu) in high precision.

    beta_norm with beta < 1 is permitted here (the Z1 check will fail); a
    missing table entry raises.
    """
    mu = rs.check_dominant(mu)
    ctx = precision.make_context(digits)
    log = _log_weight(rs, spec, mu, ctx)
    if log is None:
        raise KeyError(f"weight table has no entry for {mu}")
    return WeightValue(ctx.exp(log), log)


def _log_weight(rs: RootSystem, spec: CentralWeightSpec, mu: Weight, ctx: Context) -> Decimal | None:
    if spec.kind == "beta_norm":
        norm = precision.sqrt_fraction(rs.norm_sq(mu), ctx)
        return ctx.multiply(norm, ctx.ln(precision.to_decimal(spec.beta, ctx)))
    if spec.kind == "lst":
        if spec.beta == 0:
            return Decimal(0)
        root = precision.sqrt_fraction(rs.casimir(mu), ctx)
        return ctx.multiply(precision.to_decimal(spec.beta, ctx), root)
    value = spec.table.get(mu)
    return None if value is None else ctx.ln(precision.to_decimal(value, ctx))


@dataclass(frozen=True)
class Violation:
    condition: str              # "Z1" | "Z2" | "SYM"
    weights: tuple[Weight, ...]  # (mu,) or (lam, mu, nu) or (mu, conj)
    lhs: Decimal
    rhs: Decimal


@dataclass(frozen=True)
class ValidationReport:
    spec: CentralWeightSpec
    passed: bool
    violations: tuple[Violation, ...]
    truncation_height: int
    notes: tuple[str, ...] = ()


def _triangle_compare(a: Fraction, b: Fraction, c: Fraction) -> int:
    """Exact sign of sqrt(a) - (sqrt(b) + sqrt(c)) for nonnegative rationals."""
    s = a - b - c
    if s <= 0:
        if s == 0 and b * c == 0:
            return 0
        return -1
    d = s * s - 4 * b * c
    return -1 if d < 0 else (0 if d == 0 else 1)


def _z2_exact(rs: RootSystem, spec: CentralWeightSpec,
              lam: Weight, mu: Weight, nu: Weight) -> bool | None:
    """Exact Z2 verdict for the built-in families, None when unavailable."""
    if spec.kind == "table":
        return None
    if spec.beta == (1 if spec.kind == "beta_norm" else 0):
        return True  # w is identically 1
    if spec.kind == "beta_norm":
        rel = _triangle_compare(rs.norm_sq(nu), rs.norm_sq(lam), rs.norm_sq(mu))
        if spec.beta < 1:
            return rel >= 0  # log beta < 0 reverses the inequality
        return rel <= 0
    rel = _triangle_compare(rs.casimir(nu), rs.casimir(lam), rs.casimir(mu))
    return rel <= 0


def validate_central_weight(rs: RootSystem, spec: CentralWeightSpec, height: int,
                            digits: int | None = None) -> ValidationReport:
    """Check Z1, Z2 and symmetry for all fusion triples up to the given height.

    A passing report certifies the conditions on the truncated fusion graph
    only; for table weights nothing is claimed beyond the covered triples.
    """
    if height < 1:
        raise ValueError("truncation height must be >= 1")
    ctx = precision.make_context(digits)
    tol = LOG_TOLERANCE
    notes: list[str] = [f"verified up to height {height}"]
    violations: list[Violation] = []
    weights = rs.dominant_weights_up_to(height)
    zero = (0,) * rs.rank

    logs: dict[Weight, Decimal | None] = {}

    def log_of(mu: Weight) -> Decimal | None:
        if mu not in logs:
            logs[mu] = _log_weight(rs, spec, mu, ctx)
        return logs[mu]

    skipped = 0

    # Z1: w(mu) >= 1, i.e. log w(mu) >= 0.
    for mu in weights:
        lw = log_of(mu)
        if lw is None:
            skipped += 1
            continue
        if lw < -tol * max(Decimal(1), abs(lw)):
            violations.append(Violation("Z1", (mu,), ctx.exp(lw), Decimal(1)))

    # Z2: w(nu) <= w(lam) w(mu) over the truncated fusion graph.
    for lam in weights:
        llam = log_of(lam)
        for mu in weights:
            lmu = log_of(mu)
            if llam is None or lmu is None:
                skipped += 1
                continue
            rhs = ctx.add(llam, lmu)
            for nu, _m in tensor_decompose(rs, lam, mu).components.items():
                lnu = log_of(nu)
                if lnu is None:
                    skipped += 1
                    continue
                gap = ctx.subtract(lnu, rhs)
                scale = max(Decimal(1), abs(lnu), abs(rhs))
                if abs(gap) <= tol * scale:
                    exact = _z2_exact(rs, spec, lam, mu, nu)
                    if exact is False:
                        violations.append(Violation("Z2", (lam, mu, nu), lnu, rhs))
                elif gap > 0:
                    exact = _z2_exact(rs, spec, lam, mu, nu)
                    if exact is not True:
                        violations.append(Violation("Z2", (lam, mu, nu), lnu, rhs))

    # SYM: w(mu) = w(conjugate(mu)).
    for mu in weights:
        conj = rs.conjugate_weight(mu)
        if spec.kind in ("beta_norm", "lst"):
            # |mu| and c(mu) are conjugation invariants; check them exactly.
            same = (rs.norm_sq(mu) == rs.norm_sq(conj)
                    and rs.casimir(mu) == rs.casimir(conj))
            if not same:
                violations.append(Violation("SYM", (mu, conj),
                                            log_of(mu) or Decimal(0),
                                            log_of(conj) or Decimal(0)))
            continue
        lw, lc = log_of(mu), log_of(conj)
        if lw is None or lc is None:
            skipped += 1
            continue
        if abs(ctx.subtract(lw, lc)) > tol * max(Decimal(1), abs(lw), abs(lc)):
            violations.append(Violation("SYM", (mu, conj), lw, lc))

    if spec.kind == "table":
        w0 = spec.table.get(zero)
        if w0 is not None and w0 != 1:
            notes.append(f"informational: w(0) = {w0} != 1 (not enforced)")
        if skipped:
            notes.append(f"informational: {skipped} comparisons skipped, table entries missing")

    violations.sort(key=lambda v: (v.condition, v.weights))
    return ValidationReport(
        spec=spec,
        passed=not violations,
        violations=tuple(violations),
        truncation_height=height,
        notes=tuple(notes),
    )


@dataclass(frozen=True)
class SubadditivityReport:
    passed: bool
    truncation_height: int
    triples_checked: int
    min_slack: Decimal | None
    witness: tuple[Weight, Weight, Weight] | None
    violations: tuple[tuple[Weight, Weight, Weight], ...] = ()


def casimir_subadditivity_check(rs: RootSystem, height: int,
                                digits: int | None = None) -> SubadditivityReport:
    """Verify c(nu)^{1/2} <= c(lam)^{1/2} + c(mu)^{1/2} for fusion triples.

    The verdict for each triple is decided exactly in squared-rational form;
    the reported slack is evaluated with high-precision square roots.
    """
    if height < 1:
        raise ValueError("truncation height must be >= 1")
    ctx = precision.make_context(digits)
    weights = rs.dominant_weights_up_to(height)
    roots: dict[Weight, Decimal] = {}

    def root_of(mu: Weight) -> Decimal:
        if mu not in roots:
            roots[mu] = precision.sqrt_fraction(rs.casimir(mu), ctx)
        return roots[mu]

    checked = 0
    min_slack: Decimal | None = None
    witness = None
    violations: list[tuple[Weight, Weight, Weight]] = []
    for i, lam in enumerate(weights):
        for mu in weights[i:]:
            for nu, _m in tensor_decompose(rs, lam, mu).components.items():
                checked += 1
                if _triangle_compare(rs.casimir(nu), rs.casimir(lam), rs.casimir(mu)) > 0:
                    violations.append((lam, mu, nu))
                slack = ctx.subtract(ctx.add(root_of(lam), root_of(mu)), root_of(nu))
                if min_slack is None or slack < min_slack:
                    min_slack = slack
                    witness = (lam, mu, nu)
    return SubadditivityReport(
        passed=not violations,
        truncation_height=height,
        triples_checked=checked,
        min_slack=min_slack,
        witness=witness,
        violations=tuple(violations),
    )
