"""Tensor-product (fusion) decomposition via the Brauer-Klimyk algorithm.

For dominant lam, mu the product V(lam) (x) V(mu) decomposes into irreducibles
with multiplicities.  The algorithm runs over the weight system of the factor
with smaller Weyl dimension: each weight w contributes its multiplicity, with
the sign of the Weyl element moving lam + w + rho back into the (strict)
dominant chamber; contributions on a chamber wall cancel and are dropped.
Negative intermediate sums are normal; a nonpositive final entry would be an
internal error, never a user error.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .characters import full_weights
from .root_system import RootSystem, Weight


@dataclass(frozen=True)
class FusionDecomposition:
    """Multiplicities {nu: m_nu} of the irreducibles inside lam (x) mu."""

    lam: Weight
    mu: Weight
    components: dict[Weight, int]

    @classmethod
    def from_parts(cls, rs: RootSystem, lam: Weight, mu: Weight,
                   components: dict[Weight, int]) -> "FusionDecomposition":
        ordered = dict(sorted(components.items(), key=lambda kv: (-sum(kv[0]), kv[0])))
        cartan = tuple(a + b for a, b in zip(lam, mu))
        if ordered.get(cartan) != 1:
            raise AssertionError(f"Cartan component {cartan} missing or mult != 1 in {ordered}")
        if any(m <= 0 for m in ordered.values()):
            raise AssertionError(f"nonpositive fusion multiplicity in {ordered}")
        return cls(lam, mu, ordered)

    def dimension(self, rs: RootSystem) -> int:
        return sum(m * rs.weyl_dim(nu) for nu, m in self.components.items())

    def __iter__(self):
        return iter(self.components.items())


def tensor_decompose(rs: RootSystem, lam, mu) -> FusionDecomposition:
    """Brauer-Klimyk decomposition of V(lam) (x) V(mu)."""
    lam = rs.check_dominant(lam)
    mu = rs.check_dominant(mu)
    # The decomposition is symmetric in (lam, mu); cache one orientation.
    components = _tensor_components(rs, *sorted((lam, mu)))
    return FusionDecomposition.from_parts(rs, lam, mu, dict(components))


@lru_cache(maxsize=None)
def _tensor_components(rs: RootSystem, lam: Weight, mu: Weight) -> tuple[tuple[Weight, int], ...]:
    expand, anchor = (lam, mu) if rs.weyl_dim(lam) <= rs.weyl_dim(mu) else (mu, lam)
    shifted = tuple(c + 1 for c in anchor)
    acc: dict[Weight, int] = {}
    for w, m in full_weights(rs, expand).items():
        x = tuple(s + c for s, c in zip(shifted, w))
        y, sign, singular = rs.dominant_representative(x)
        if singular:
            continue
        nu = tuple(c - 1 for c in y)
        acc[nu] = acc.get(nu, 0) + sign * m
    return tuple((nu, m) for nu, m in acc.items() if m)


def contains_trivial(rs: RootSystem, lam, mu) -> bool:
    """Whether the trivial representation occurs in lam (x) mu.

    This happens exactly when mu is the conjugate weight of lam.
    """
    lam = rs.check_dominant(lam)
    mu = rs.check_dominant(mu)
    zero = (0,) * rs.rank
    return zero in tensor_decompose(rs, lam, mu).components
