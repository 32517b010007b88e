"""Exact root-system data and weight-lattice geometry.

Everything here is computed over exact rationals in the basis of fundamental
weights.  Conventions:

* Cartan matrices use ``A[i][j] = 2(a_i, a_j)/(a_i, a_i)`` with Bourbaki node
  numbering for every series.
* The bilinear form is normalised so that in each simple factor the shortest
  root ``a`` satisfies ``(a, a) = 2``; the symmetrizers are
  ``d_i = (a_i, a_i)/2`` and ``diag(d) . A`` is symmetric.
* A weight is a plain tuple of integers (coefficients in the fundamental
  weight basis).  Dominance means all coordinates are nonnegative.

Semisimple (non-simple) types are supported as products of simple factors,
assembled block-diagonally with zero cross-factor form, e.g. ``"B2xA1"``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import product as iproduct
from math import lcm

Weight = tuple[int, ...]
RationalScalar = Fraction

_MIN_RANK = {"A": 1, "B": 2, "C": 3, "D": 4}
_FIXED_RANKS = {"E": (6, 7, 8), "F": (4,), "G": (2,)}

_POSITIVE_ROOT_COUNTS = {
    "A": lambda n: n * (n + 1) // 2,
    "B": lambda n: n * n,
    "C": lambda n: n * n,
    "D": lambda n: n * (n - 1),
    "E": lambda n: {6: 36, 7: 63, 8: 120}[n],
    "F": lambda n: 24,
    "G": lambda n: 6,
}


class LieTypeError(ValueError):
    """Raised for an invalid series/rank combination or a malformed type string."""


@dataclass(frozen=True)
class LieType:
    """An ordered product of simple factors, e.g. A2 or B2xA1."""

    factors: tuple[tuple[str, int], ...]

    def __post_init__(self) -> None:
        if not self.factors:
            raise LieTypeError("a Lie type needs at least one simple factor")
        for series, rank in self.factors:
            _validate_factor(series, rank)

    @classmethod
    def parse(cls, text: str) -> "LieType":
        factors = []
        for part in str(text).strip().split("x"):
            m = re.fullmatch(r"\s*([A-Ga-g])\s*(\d+)\s*", part)
            if not m:
                raise LieTypeError(f"cannot parse Lie type factor {part!r}")
            factors.append((m.group(1).upper(), int(m.group(2))))
        return cls(tuple(factors))

    def __str__(self) -> str:
        return "x".join(f"{s}{r}" for s, r in self.factors)

    @property
    def rank(self) -> int:
        return sum(r for _, r in self.factors)


def _validate_factor(series: str, rank: int) -> None:
    if series in _MIN_RANK:
        if rank < _MIN_RANK[series]:
            raise LieTypeError(
                f"invalid factor {series}{rank}: {series} series requires rank >= {_MIN_RANK[series]}"
            )
    elif series in _FIXED_RANKS:
        if rank not in _FIXED_RANKS[series]:
            allowed = ",".join(map(str, _FIXED_RANKS[series]))
            raise LieTypeError(f"invalid factor {series}{rank}: {series} allows rank {allowed}")
    else:
        raise LieTypeError(f"invalid factor {series}{rank}: unknown series {series!r}")


def _simple_cartan(series: str, rank: int) -> tuple[list[list[int]], list[int]]:
    """Cartan matrix and symmetrizers of one simple factor (Bourbaki numbering)."""
    A = [[2 if i == j else 0 for j in range(rank)] for i in range(rank)]

    def bond(i: int, j: int, aij: int = -1, aji: int = -1) -> None:
        A[i][j] = aij
        A[j][i] = aji

    d = [1] * rank
    if series == "A":
        for i in range(rank - 1):
            bond(i, i + 1)
    elif series == "B":
        for i in range(rank - 2):
            bond(i, i + 1)
        bond(rank - 2, rank - 1, -1, -2)  # a_rank is the short root
        d = [2] * (rank - 1) + [1]
    elif series == "C":
        for i in range(rank - 2):
            bond(i, i + 1)
        bond(rank - 2, rank - 1, -2, -1)  # a_rank is the long root
        d = [1] * (rank - 1) + [2]
    elif series == "D":
        for i in range(rank - 2):
            bond(i, i + 1)
        bond(rank - 3, rank - 1)
    elif series == "E":
        # Bourbaki: chain 1-3-4-5-6(-7)(-8), node 2 hangs off node 4.
        chain = [0] + list(range(2, rank))
        for a, b in zip(chain, chain[1:]):
            bond(a, b)
        bond(1, 3)
    elif series == "F":
        bond(0, 1)
        bond(1, 2, -1, -2)  # a3, a4 short
        bond(2, 3)
        d = [2, 2, 1, 1]
    elif series == "G":
        bond(0, 1, -3, -1)  # a1 short, a2 long
        d = [1, 3]
    return A, d


def _invert_rational(mat: list[list[Fraction]]) -> list[list[Fraction]]:
    """Gauss-Jordan inverse of a small exact-rational matrix."""
    n = len(mat)
    aug = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
           for i, row in enumerate(mat)]
    for col in range(n):
        pivot = next(r for r in range(col, n) if aug[r][col] != 0)
        aug[col], aug[pivot] = aug[pivot], aug[col]
        pv = aug[col][col]
        aug[col] = [x / pv for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col]:
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
    return [row[n:] for row in aug]


def _is_positive_definite(mat: list[list[Fraction]]) -> bool:
    """Sylvester criterion by exact Gaussian elimination."""
    n = len(mat)
    work = [list(row) for row in mat]
    for k in range(n):
        if work[k][k] <= 0:
            return False
        for r in range(k + 1, n):
            f = work[r][k] / work[k][k]
            work[r] = [x - f * y for x, y in zip(work[r], work[k])]
    return True


class RootSystem:
    """Immutable root-system data for a (product of) simple Lie type(s).

    Instances are created through :func:`build_root_system`, are safe to share
    between threads, and all methods are pure functions of their arguments.
    """

    def __init__(self, lie_type: LieType):
        self.lie_type = lie_type
        blocks = [_simple_cartan(s, r) for s, r in lie_type.factors]
        N = lie_type.rank
        self.rank = N

        cartan = [[0] * N for _ in range(N)]
        d: list[int] = []
        offset = 0
        slices = []
        for (A, dd) in blocks:
            r = len(dd)
            for i in range(r):
                for j in range(r):
                    cartan[offset + i][offset + j] = A[i][j]
            d.extend(dd)
            slices.append((offset, offset + r))
            offset += r
        self._factor_slices: tuple[tuple[int, int], ...] = tuple(slices)
        self.cartan: tuple[tuple[int, ...], ...] = tuple(tuple(row) for row in cartan)
        self.symmetrizers: tuple[int, ...] = tuple(d)

        # Gram matrix of fundamental weights: G.A = D, hence G = D.A^{-1}.
        ainv = _invert_rational([[Fraction(x) for x in row] for row in cartan])
        gram = [[Fraction(d[i]) * ainv[i][j] for j in range(N)] for i in range(N)]
        self.gram: tuple[tuple[Fraction, ...], ...] = tuple(tuple(row) for row in gram)

        # Scaled integer copy of the Gram matrix for hot loops.
        den = lcm(*[x.denominator for row in gram for x in row])
        self._gram_den = den
        self._gram_num: tuple[tuple[int, ...], ...] = tuple(
            tuple(int(x * den) for x in row) for row in gram
        )

        # Simple roots are the columns of the Cartan matrix.
        self.simple_roots: tuple[Weight, ...] = tuple(
            tuple(cartan[j][i] for j in range(N)) for i in range(N)
        )
        self.rho: Weight = (1,) * N
        self.positive_roots: tuple[Weight, ...] = self._generate_positive_roots(ainv)

        # Per positive root a: integer vector v with dot(x, v) = (x, a) * den.
        self._proot_pairing = tuple(
            tuple(sum(self._gram_num[i][j] * a[j] for j in range(N)) for i in range(N))
            for a in self.positive_roots
        )
        self._rho_pairing = tuple(sum(v) for v in self._proot_pairing)

        self._self_check()

    # -- construction ------------------------------------------------------

    def _generate_positive_roots(self, ainv) -> tuple[Weight, ...]:
        # Reflection closure of the simple roots is the full root set.
        roots: set[Weight] = set(self.simple_roots)
        frontier = list(self.simple_roots)
        while frontier:
            nxt = []
            for r in frontier:
                for i in range(self.rank):
                    s = self._reflect(r, i)
                    if s not in roots:
                        roots.add(s)
                        nxt.append(s)
            frontier = nxt
        positive = []
        for r in roots:
            coeffs = [sum(ainv[i][j] * r[j] for j in range(self.rank)) for i in range(self.rank)]
            if all(c >= 0 for c in coeffs):
                positive.append((sum(coeffs), r))
        positive.sort()
        return tuple(r for _, r in positive)

    def _self_check(self) -> None:
        N = self.rank
        A, d = self.cartan, self.symmetrizers
        for i in range(N):
            for j in range(N):
                if d[i] * A[i][j] != d[j] * A[j][i]:
                    raise AssertionError("diag(d).A is not symmetric")
        if not _is_positive_definite([list(row) for row in self.gram]):
            raise AssertionError("Gram matrix is not positive definite")
        expected = sum(_POSITIVE_ROOT_COUNTS[s](r) for s, r in self.lie_type.factors)
        if len(self.positive_roots) != expected:
            raise AssertionError(
                f"positive root count {len(self.positive_roots)} != classical {expected}"
            )
        for lo, hi in self._factor_slices:
            shortest = min(
                self.norm_sq(a) for a in self.positive_roots
                if any(a[i] for i in range(lo, hi))
            )
            if shortest != 2:
                raise AssertionError(f"shortest root has squared length {shortest}, not 2")
        two_rho = [0] * N
        for a in self.positive_roots:
            for i in range(N):
                two_rho[i] += a[i]
        if tuple(two_rho) != tuple(2 * c for c in self.rho):
            raise AssertionError("positive roots do not sum to 2*rho")

    # -- basic geometry ----------------------------------------------------

    def check_weight(self, x) -> Weight:
        t = tuple(int(c) for c in x)
        if len(t) != self.rank:
            raise ValueError(
                f"weight {tuple(x)} has length {len(t)}, expected rank {self.rank}"
            )
        return t

    def check_dominant(self, x) -> Weight:
        t = self.check_weight(x)
        if any(c < 0 for c in t):
            raise ValueError(f"weight {t} is not dominant")
        return t

    def is_dominant(self, x) -> bool:
        return all(c >= 0 for c in self.check_weight(x))

    def inner_product(self, x, y) -> Fraction:
        """Bilinear form (x, y) in the normalisation with short roots of length^2 = 2."""
        x, y = self.check_weight(x), self.check_weight(y)
        return Fraction(self._ip_scaled(x, y), self._gram_den)

    def _ip_scaled(self, x: Weight, y: Weight) -> int:
        g = self._gram_num
        return sum(x[i] * sum(g[i][j] * y[j] for j in range(self.rank)) for i in range(self.rank))

    def norm_sq(self, x) -> Fraction:
        """(x, x); the squared length |x|^2, always a nonnegative rational."""
        return self.inner_product(x, x)

    def casimir(self, mu) -> Fraction:
        """Quadratic Casimir eigenvalue (mu, mu + 2 rho) of a dominant weight."""
        mu = self.check_dominant(mu)
        shifted = tuple(c + 2 for c in mu)
        return self.inner_product(mu, shifted)

    def weyl_dim(self, mu) -> int:
        """Dimension of the irreducible with highest weight mu (Weyl formula)."""
        mu = self.check_dominant(mu)
        shifted = tuple(c + 1 for c in mu)
        dim = Fraction(1)
        for v, rho_a in zip(self._proot_pairing, self._rho_pairing):
            dim *= Fraction(sum(shifted[i] * v[i] for i in range(self.rank)), rho_a)
        if dim.denominator != 1:
            raise AssertionError(f"Weyl dimension of {mu} is not an integer: {dim}")
        return int(dim)

    # -- Weyl group --------------------------------------------------------

    def _reflect(self, x: Weight, i: int) -> Weight:
        c = x[i]
        A = self.cartan
        return tuple(x[j] - c * A[j][i] for j in range(self.rank))

    def dominant_representative(self, x) -> tuple[Weight, int, bool]:
        """Reflect x into the dominant chamber.

        Returns ``(weight, sign, singular)`` where sign is (-1)^(number of
        simple reflections applied) and singular is True when the result lies
        on a chamber wall (some coordinate is zero).  The singular flag is
        what the fusion algorithm consumes on rho-shifted inputs; callers on
        the unshifted lattice can ignore it.
        """
        y = list(self.check_weight(x))
        A = self.cartan
        N = self.rank
        sign = 1
        while True:
            for i in range(N):
                if y[i] < 0:
                    break
            else:
                return tuple(y), sign, any(c == 0 for c in y)
            c = y[i]
            for j in range(N):
                y[j] -= c * A[j][i]
            sign = -sign

    def conjugate_weight(self, mu) -> Weight:
        """Highest weight of the conjugate representation: the dominant form of -mu."""
        mu = self.check_dominant(mu)
        return self.dominant_representative(tuple(-c for c in mu))[0]

    def weyl_orbit(self, x) -> list[Weight]:
        """The full Weyl orbit of x, sorted for determinism."""
        start = self.check_weight(x)
        seen = {start}
        frontier = [start]
        while frontier:
            nxt = []
            for w in frontier:
                for i in range(self.rank):
                    if w[i] != 0:
                        r = self._reflect(w, i)
                        if r not in seen:
                            seen.add(r)
                            nxt.append(r)
            frontier = nxt
        return sorted(seen)

    # -- enumeration -------------------------------------------------------

    def dominant_weights_up_to(self, height: int) -> list[Weight]:
        """All dominant weights with every coordinate <= height.

        Sorted by total coordinate sum, then lexicographically; this is the
        deterministic enumeration order used by validators and the CLI.
        """
        if height < 0:
            raise ValueError("height must be >= 0")
        count = (height + 1) ** self.rank
        if count > 5_000_000:
            raise ValueError(
                f"enumerating {count} dominant weights for {self.lie_type} at height "
                f"{height} is not desk scale; lower the height"
            )
        weights = list(iproduct(range(height + 1), repeat=self.rank))
        weights.sort(key=lambda w: (sum(w), w))
        return [tuple(w) for w in weights]

    def __repr__(self) -> str:
        return f"RootSystem({self.lie_type})"


@lru_cache(maxsize=None)
def _build_cached(canonical: str) -> RootSystem:
    return RootSystem(LieType.parse(canonical))


def build_root_system(lie_type: LieType | str) -> RootSystem:
    """Construct (and cache) the root system for a type like ``"A2"`` or ``"B2xA1"``."""
    if isinstance(lie_type, LieType):
        canonical = str(lie_type)
    else:
        canonical = str(LieType.parse(lie_type))
    return _build_cached(canonical)
