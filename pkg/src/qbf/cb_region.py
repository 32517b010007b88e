"""Decision procedure for completely bounded extension of the dual representations.

For deformation parameter q in (0, 1) and weight-family parameter beta >= 1,
the representation labelled by a dominant weight lam extends completely
boundedly if and only if q^{-|lam|} <= beta, equivalently

    norm_sq(lam) <= t^2   with   t = log(beta) / log(1/q).

The decision depends on lam only; the compact-side representation never
enters, which is why the API takes no such argument.  The boundary |lam| = t
counts as extending.  Comparisons run at 50-digit (configurable) precision
with a relative guard of 1e-30; decisions inside the guard are flagged as
boundary cases so a sharp-threshold misclassification cannot pass silently.

Each decision carries a certificate: an extending lam has
q^{-(lam,mu)} <= beta^{|mu|} for every mu, with the supremum 1 attained at
mu = 0; a non-extending lam has a divergence ray mu_m = m*lam along which the
ratio grows geometrically with factor exp((lam,lam) log(1/q) - |lam| log beta).
"""

from __future__ import annotations

from dataclasses import dataclass
from decimal import Context, Decimal
from fractions import Fraction

from . import precision
from .qnorm import SessionConfig
from .root_system import RootSystem, Weight

BOUNDARY_GUARD = Decimal("1e-30")


@dataclass(frozen=True)
class Certificate:
    kind: str                      # "bound" | "divergence"
    bound: Decimal | None = None   # sup over mu of the ratio, <= 1
    attained_at: Weight | None = None
    ray_base: Weight | None = None
    growth_factor: Decimal | None = None


@dataclass(frozen=True)
class CBDecision:
    lam: Weight
    beta: Decimal
    q: Fraction
    extends: bool
    boundary: bool
    norm_sq: Fraction
    threshold_sq: Decimal
    beta_min: Decimal              # smallest beta for which lam extends: q^{-|lam|}
    certificate: Certificate


def _to_beta(beta) -> Decimal:
    if isinstance(beta, float):
        b = Decimal(repr(beta))
    elif isinstance(beta, Fraction):
        b = precision.to_decimal(beta, precision.make_context())
    else:
        b = Decimal(beta)
    if b < 1:
        raise ValueError(f"beta must be >= 1 (weights require w >= 1), got {beta}")
    return b


def _log_inv_q(cfg: SessionConfig, ctx: Context) -> Decimal:
    return ctx.minus(ctx.ln(precision.to_decimal(cfg.q, ctx)))


def cb_extends(rs: RootSystem, cfg: SessionConfig, beta, lam,
               digits: int | None = None) -> CBDecision:
    """Decide whether the representation labelled by lam admits a CB extension."""
    lam = rs.check_dominant(lam)
    b = _to_beta(beta)
    ctx = precision.make_context(digits)
    log_b = ctx.ln(b)
    log_inv_q = _log_inv_q(cfg, ctx)
    t = ctx.divide(log_b, log_inv_q)
    t_sq = ctx.multiply(t, t)

    ns = rs.norm_sq(lam)
    ns_dec = precision.to_decimal(ns, ctx)
    lam_norm = precision.sqrt_fraction(ns, ctx)
    beta_min = ctx.exp(ctx.multiply(lam_norm, log_inv_q))

    diff = ctx.subtract(ns_dec, t_sq)
    scale = max(Decimal(1), ns_dec, t_sq)
    boundary = abs(diff) <= BOUNDARY_GUARD * scale
    extends = boundary or diff <= 0

    if extends:
        cert = Certificate(kind="bound", bound=Decimal(1), attained_at=(0,) * rs.rank)
    else:
        growth = ctx.exp(ctx.subtract(ctx.multiply(ns_dec, log_inv_q),
                                      ctx.multiply(lam_norm, log_b)))
        cert = Certificate(kind="divergence", ray_base=lam, growth_factor=growth)
    return CBDecision(
        lam=lam,
        beta=b,
        q=cfg.q,
        extends=extends,
        boundary=boundary,
        norm_sq=ns,
        threshold_sq=t_sq,
        beta_min=beta_min,
        certificate=cert,
    )


def cb_region_enumerate(rs: RootSystem, cfg: SessionConfig, beta, height: int,
                        digits: int | None = None) -> list[CBDecision]:
    """Decisions for every dominant lam with coordinates <= height.

    Ordered by total coordinate sum, then lexicographically.
    """
    if height < 0:
        raise ValueError("height must be >= 0")
    return [cb_extends(rs, cfg, beta, lam, digits=digits)
            for lam in rs.dominant_weights_up_to(height)]


@dataclass(frozen=True)
class ScanReport:
    lam: Weight
    beta: Decimal
    height: int
    max_log_ratio: Decimal
    argmax: Weight
    ray: tuple[Decimal, ...]       # log-ratio along mu = m*lam, m = 1..len(ray)
    decision: CBDecision
    consistent: bool


def sup_ratio_scan(rs: RootSystem, cfg: SessionConfig, beta, lam, height: int,
                   ray_steps: int = 8, digits: int | None = None) -> ScanReport:
    """Empirical scan of the log-ratio r(mu) = (lam,mu) log(1/q) - |mu| log(beta).

    Reports the maximum over all dominant mu up to the given height, the
    maximiser, and the restriction of r to the ray mu = m*lam.  The report is
    marked consistent when it matches the closed-form decision: bounded by 0
    for an extending lam, strictly increasing along the ray otherwise.
    """
    lam = rs.check_dominant(lam)
    decision = cb_extends(rs, cfg, beta, lam, digits=digits)
    ctx = precision.make_context(digits)
    log_b = ctx.ln(decision.beta)
    log_inv_q = _log_inv_q(cfg, ctx)

    def log_ratio(mu: Weight) -> Decimal:
        ip = precision.to_decimal(rs.inner_product(lam, mu), ctx)
        norm = precision.sqrt_fraction(rs.norm_sq(mu), ctx)
        return ctx.subtract(ctx.multiply(ip, log_inv_q), ctx.multiply(norm, log_b))

    best: Decimal | None = None
    argmax: Weight | None = None
    for mu in rs.dominant_weights_up_to(height):
        r = log_ratio(mu)
        if best is None or r > best:
            best, argmax = r, mu

    ray = tuple(log_ratio(tuple(m * c for c in lam)) for m in range(1, ray_steps + 1))

    eps = Decimal(10) ** -(ctx.prec - 10)
    if decision.extends:
        consistent = best <= eps
    else:
        consistent = all(b - a > eps for a, b in zip(ray, ray[1:])) and ray[-1] > 0
    return ScanReport(
        lam=lam,
        beta=decision.beta,
        height=height,
        max_log_ratio=best,
        argmax=argmax,
        ray=ray,
        decision=decision,
        consistent=consistent,
    )
