"""Weight systems of irreducible representations.

Multiplicities are computed on the dominant chamber with Freudenthal's
recursion and expanded to full Weyl orbits on demand.  The module also
provides a character-product decomposition (multiply two weight systems
pointwise, then repeatedly strip the highest remaining weight) which serves
as an independent cross-check for the fusion algorithm at small heights.

The per-highest-weight memo tables are only published once an entry is fully
computed, so concurrent readers never observe partial results.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import product as iproduct

from .root_system import RootSystem, Weight


@dataclass(frozen=True)
class Character:
    """Dominant-chamber-compressed weight system of one irreducible."""

    highest_weight: Weight
    dominant: dict[Weight, int]
    dim: int

    def multiplicity(self, rs: RootSystem, weight) -> int:
        w = rs.check_weight(weight)
        return self.dominant.get(rs.dominant_representative(w)[0], 0)


def _dominant_candidates(rs: RootSystem, mu: Weight) -> list[Weight]:
    """Dominant nu with mu - nu a nonnegative integer combination of simple roots.

    The combination coefficients are bounded by k_j <= (mu, w_j)/d_j, with w_j
    the fundamental weights, so a finite box suffices.
    """
    N = rs.rank
    bounds = []
    for j in range(N):
        pairing = sum(rs.gram[i][j] * mu[i] for i in range(N))
        bounds.append(int(pairing / rs.symmetrizers[j]))
    cols = rs.simple_roots
    out = []
    for ks in iproduct(*(range(b + 1) for b in bounds)):
        nu = tuple(
            mu[i] - sum(k * cols[j][i] for j, k in enumerate(ks) if k)
            for i in range(N)
        )
        if all(c >= 0 for c in nu):
            out.append(nu)
    return out


def weight_multiplicities(rs: RootSystem, mu) -> Character:
    """Weight system of the irreducible with highest weight mu.

    Freudenthal's recursion, processed in order of decreasing
    (nu + rho, nu + rho) so every multiplicity referenced on the right-hand
    side is already known.  The result stores dominant multiplicities only.
    """
    return _weight_multiplicities(rs, rs.check_dominant(mu))


@lru_cache(maxsize=None)
def _weight_multiplicities(rs: RootSystem, mu: Weight) -> Character:
    den_ip = rs._ip_scaled
    mu_norm = den_ip(mu, mu)
    shifted_mu = tuple(c + 1 for c in mu)
    mu_rho_norm = den_ip(shifted_mu, shifted_mu)

    def rho_norm(nu: Weight) -> int:
        shifted = tuple(c + 1 for c in nu)
        return den_ip(shifted, shifted)

    candidates = _dominant_candidates(rs, mu)
    candidates.sort(key=lambda nu: (-rho_norm(nu), nu))

    mults: dict[Weight, int] = {}
    for nu in candidates:
        if nu == mu:
            mults[mu] = 1
            continue
        total = 0
        for alpha in rs.positive_roots:
            k = 1
            while True:
                xi = tuple(c + k * a for c, a in zip(nu, alpha))
                if den_ip(xi, xi) > mu_norm:
                    break
                m = mults.get(rs.dominant_representative(xi)[0], 0)
                if m:
                    total += m * den_ip(xi, alpha)
                k += 1
        if total:
            denom = mu_rho_norm - rho_norm(nu)
            m, r = divmod(2 * total, denom)
            if r:
                raise AssertionError(f"non-integer Freudenthal multiplicity at {nu}")
            mults[nu] = m

    dim = sum(m * len(rs.weyl_orbit(nu)) for nu, m in mults.items())
    expected = rs.weyl_dim(mu)
    if dim != expected:
        raise AssertionError(f"character of {mu} has size {dim}, Weyl dimension {expected}")
    return Character(mu, mults, dim)


def full_weights(rs: RootSystem, mu) -> dict[Weight, int]:
    """Orbit-expanded weight system {weight: multiplicity}. Treat as read-only."""
    return _full_weights(rs, rs.check_dominant(mu))


@lru_cache(maxsize=None)
def _full_weights(rs: RootSystem, mu: Weight) -> dict[Weight, int]:
    char = _weight_multiplicities(rs, mu)
    out: dict[Weight, int] = {}
    for nu, m in char.dominant.items():
        for w in rs.weyl_orbit(nu):
            out[w] = m
    return out


def _height_key(rs: RootSystem, w: Weight) -> tuple:
    # (w, rho) strictly decreases when a positive root is subtracted, so
    # descending height processes maximal weights first; lex breaks ties
    # between incomparable weights of equal height.
    rho = (1,) * rs.rank
    return (-rs._ip_scaled(w, rho), tuple(-c for c in w))


def character_product_decompose(rs: RootSystem, lam, mu) -> "FusionDecomposition":
    """Decompose the pointwise product of two characters.

    Computes the product's dominant multiplicities by convolving the smaller
    weight system against the larger, then repeatedly strips the highest
    remaining weight.  Contract-identical to fusion.tensor_decompose; intended
    as an independent cross-check at small heights.
    """
    from .fusion import FusionDecomposition  # deferred: fusion imports this module

    lam = rs.check_dominant(lam)
    mu = rs.check_dominant(mu)
    small, big = (lam, mu) if rs.weyl_dim(lam) <= rs.weyl_dim(mu) else (mu, lam)
    fw_small = full_weights(rs, small)
    fw_big = full_weights(rs, big)

    top = tuple(a + b for a, b in zip(lam, mu))
    candidates = _dominant_candidates(rs, top)
    remaining: dict[Weight, int] = {}
    for eta in candidates:
        total = 0
        for w, m in fw_small.items():
            n = fw_big.get(tuple(e - c for e, c in zip(eta, w)))
            if n:
                total += m * n
        if total:
            remaining[eta] = total

    components: dict[Weight, int] = {}
    for eta in sorted(candidates, key=lambda w: _height_key(rs, w)):
        m = remaining.get(eta, 0)
        if m == 0:
            continue
        if m < 0:
            raise AssertionError(f"negative residual multiplicity {m} at {eta}")
        components[eta] = m
        for nu, mult in _weight_multiplicities(rs, eta).dominant.items():
            remaining[nu] = remaining.get(nu, 0) - m * mult
    leftovers = {w: m for w, m in remaining.items() if m}
    if leftovers:
        raise AssertionError(f"character product did not resolve: {leftovers}")
    return FusionDecomposition.from_parts(rs, lam, mu, components)
