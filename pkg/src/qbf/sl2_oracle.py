"""Independent numeric check of the central norm formula for rank one.

Builds explicit U_q(sl2) irreducibles, the (finitely truncated) R-matrix on
V(m) (x) V(n), and the positive block (R21 R)^{-1}, then compares its spectrum
with the fusion-predicted eigenvalues q^{E(nu)} and its largest eigenvalue
with the closed form q^{-mn} (so the norm is q^{-mn/2}).

Generator conventions on the weight basis e_0..e_n:

    E e_j = [j]_q e_{j-1},   F e_j = [n-j]_q e_{j+1},   K e_j = q^{n-2j} e_j,

with q-integers [k]_q = (q^k - q^{-k})/(q - q^{-1}).  The R-matrix is

    R = q^{H(x)H/2} . sum_k q^{k(k-1)/2} (q-q^{-1})^k / [k]_q!  E^k (x) F^k,

truncated at k = min(m, n) by nilpotency, with q^{H(x)H/2} acting on a pair of
weight vectors as q^{(wt_i wt_j)/2}; E^k acts on the first (m) leg.  R21 is
the same series with the legs of E and F exchanged.

Everything is first constructed exactly: for rational q the entries of R live
in Q(sqrt(q)), represented as pairs a + b sqrt(q), and all square roots cancel
in the product R21 R, which is therefore an exact rational matrix.  It is
block diagonal over total-weight subspaces of dimension <= min(m,n)+1, and
block b is self-adjoint for the inner product with diagonal weights d^2
determined by the compact-form star structure (E* = FK).  The eigenvalue
multiset is certified exactly per block (annihilating polynomial plus power
traces); floating point is used only where it is reliable, i.e. for the
largest eigenvalue and for residuals of well-scaled identities.  A dense
eigensolve of the full block would lose the small eigenvalues entirely: the
condition number reaches q^{-84} ~ 1e44 at q = 0.3, m = n = 6.
"""

from __future__ import annotations

from dataclasses import dataclass
from decimal import Decimal
from fractions import Fraction

import numpy as np

from . import precision
from .qnorm import rmatrix_exponent_details
from .root_system import build_root_system

MAX_SPIN_LABEL = 8  # dimension cap keeping the float renderings trustworthy

Pair = tuple[Fraction, Fraction]  # a + b sqrt(q)


def _check_q(q) -> Fraction:
    qf = Fraction(repr(q)) if isinstance(q, float) else Fraction(q)
    if not 0 < qf < 1:
        raise ValueError(f"deformation parameter q must satisfy 0 < q < 1, got {q}")
    return qf


def _qint(q: Fraction, k: int) -> Fraction:
    return sum(q ** (k - 1 - 2 * i) for i in range(k))


@dataclass(frozen=True)
class Sl2Rep:
    """Irreducible U_q(sl2) representation of highest weight n (dimension n+1)."""

    q: Fraction
    n: int
    e: np.ndarray
    f: np.ndarray
    k: np.ndarray
    e_exact: tuple[tuple[Fraction, ...], ...]
    f_exact: tuple[tuple[Fraction, ...], ...]
    k_exact: tuple[tuple[Fraction, ...], ...]

    @property
    def dim(self) -> int:
        return self.n + 1


def build_sl2_rep(q, n: int) -> Sl2Rep:
    """Generator matrices for the (n+1)-dimensional irreducible."""
    qf = _check_q(q)
    if n < 0:
        raise ValueError("highest weight label n must be >= 0")
    if n > MAX_SPIN_LABEL:
        raise ValueError(f"n = {n} exceeds the oracle cap {MAX_SPIN_LABEL}")
    d = n + 1
    E = [[Fraction(0)] * d for _ in range(d)]
    F = [[Fraction(0)] * d for _ in range(d)]
    K = [[Fraction(0)] * d for _ in range(d)]
    for j in range(d):
        K[j][j] = qf ** (n - 2 * j)
        if j >= 1:
            E[j - 1][j] = _qint(qf, j)
        if j < n:
            F[j + 1][j] = _qint(qf, n - j)
    to_np = lambda M: np.array([[float(x) for x in row] for row in M], dtype=float)
    return Sl2Rep(
        q=qf, n=n,
        e=to_np(E), f=to_np(F), k=to_np(K),
        e_exact=tuple(map(tuple, E)),
        f_exact=tuple(map(tuple, F)),
        k_exact=tuple(map(tuple, K)),
    )


def relation_residuals(rep: Sl2Rep) -> dict[str, float]:
    """Operator-norm residuals of the defining relations, from the float matrices.

    Residuals are relative to the scale of the compared products: the
    relations hold exactly over the rationals (see _exact_relations_hold), so
    the float residual only measures rounding, and at q = 0.3, n = 8 the
    products reach norm ~1e8 where an absolute 1e-10 is unattainable in
    double precision.
    """
    q = float(rep.q)
    e, f, k = rep.e, rep.f, rep.k
    kinv = np.diag(1.0 / np.diag(k))
    comm = e @ f - f @ e
    target = (k - kinv) / (q - 1.0 / q)

    def rel(lhs, rhs):
        scale = max(1.0, np.linalg.norm(lhs, 2), np.linalg.norm(rhs, 2))
        return float(np.linalg.norm(lhs - rhs, 2) / scale)

    return {
        "KE=q2EK": rel(k @ e, q ** 2 * (e @ k)),
        "KF=q-2FK": rel(k @ f, q ** -2 * (f @ k)),
        "EF-FE": rel(comm, target),
    }


def _exact_relations_hold(rep: Sl2Rep) -> bool:
    q, d = rep.q, rep.n + 1
    E, F, K = rep.e_exact, rep.f_exact, rep.k_exact

    def mul(A, B):
        return [[sum(A[i][t] * B[t][j] for t in range(d)) for j in range(d)] for i in range(d)]

    ke, ek = mul(K, E), mul(E, K)
    kf, fk = mul(K, F), mul(F, K)
    ef, fe = mul(E, F), mul(F, E)
    for i in range(d):
        for j in range(d):
            if ke[i][j] != q ** 2 * ek[i][j]:
                return False
            if kf[i][j] * q ** 2 != fk[i][j]:
                return False
            target = (K[j][j] - 1 / K[j][j]) / (q - 1 / q) if i == j else Fraction(0)
            if ef[i][j] - fe[i][j] != target:
                return False
    return True


# -- exact Q(sqrt(q)) helpers -------------------------------------------------

def _half_power(q: Fraction, p: int) -> Pair:
    """q^{p/2} as a pair a + b sqrt(q)."""
    if p % 2 == 0:
        return (q ** (p // 2), Fraction(0))
    return (Fraction(0), q ** ((p - 1) // 2))


def _pair_scale(x: Pair, c: Fraction) -> Pair:
    return (x[0] * c, x[1] * c)


def _block_indices(m: int, n: int) -> list[list[tuple[int, int]]]:
    """Tensor indices (i, j) grouped by s = i + j (constant total weight)."""
    return [[(i, s - i) for i in range(max(0, s - n), min(m, s) + 1)]
            for s in range(m + n + 1)]


def _series_coeffs(q: Fraction, kmax: int) -> list[Fraction]:
    out = []
    fact = Fraction(1)
    for k in range(kmax + 1):
        if k > 0:
            fact *= _qint(q, k)
        out.append(q ** (k * (k - 1) // 2) * (q - 1 / q) ** k / fact)
    return out


def _r_block(q: Fraction, m: int, n: int, idx: list[tuple[int, int]], flip: bool) -> list[list[Pair]]:
    """One total-weight block of (pi_m (x) pi_n)(R), or of R21 when flip is set."""
    coeffs = _series_coeffs(q, min(m, n))
    size = len(idx)
    out = [[(Fraction(0), Fraction(0))] * size for _ in range(size)]
    for col, (ic, jc) in enumerate(idx):
        for row, (ir, jr) in enumerate(idx):
            k = ic - ir if not flip else ir - ic
            if k < 0 or k > min(m, n):
                continue
            if not flip:
                # E^k on the m-leg (ir = ic - k), F^k on the n-leg (jr = jc + k)
                amp = Fraction(1)
                for t in range(k):
                    amp *= _qint(q, ic - t) * _qint(q, n - jc - t)
            else:
                # F^k on the m-leg (ir = ic + k), E^k on the n-leg (jr = jc - k)
                amp = Fraction(1)
                for t in range(k):
                    amp *= _qint(q, m - ic - t) * _qint(q, jc - t)
            if amp == 0:
                continue
            wrow = (m - 2 * ir) * (n - 2 * jr)
            out[row][col] = _pair_scale(_half_power(q, wrow), coeffs[k] * amp)
    return out


def _pair_block_mul(A: list[list[Pair]], B: list[list[Pair]], q: Fraction) -> list[list[Pair]]:
    size = len(A)
    out = [[None] * size for _ in range(size)]
    for i in range(size):
        for j in range(size):
            s0 = Fraction(0)
            s1 = Fraction(0)
            for t in range(size):
                a, b = A[i][t]
                c, d = B[t][j]
                s0 += a * c + b * d * q
                s1 += a * d + b * c
            out[i][j] = (s0, s1)
    return out


def _invert_block(M: list[list[Fraction]]) -> list[list[Fraction]]:
    size = len(M)
    aug = [list(row) + [Fraction(int(i == j)) for j in range(size)] for i, row in enumerate(M)]
    for col in range(size):
        piv = next(r for r in range(col, size) if aug[r][col] != 0)
        aug[col], aug[piv] = aug[piv], aug[col]
        pv = aug[col][col]
        aug[col] = [x / pv for x in aug[col]]
        for r in range(size):
            if r != col and aug[r][col]:
                fct = aug[r][col]
                aug[r] = [x - fct * y for x, y in zip(aug[r], aug[col])]
    return [row[size:] for row in aug]


def _dsq_leg(q: Fraction, n: int) -> list[Fraction]:
    # d_{j+1}^2/d_j^2 = q^{-(n-2j)} [j+1]/[n-j]: unitarises the basis for E* = FK.
    out = [Fraction(1)]
    for j in range(n):
        out.append(out[-1] * _qint(q, j + 1) / (_qint(q, n - j) * q ** (n - 2 * j)))
    return out


@dataclass(frozen=True)
class RMatrixBlock:
    """The R-matrix on V(m) (x) V(n) and the positive product block (R21 R).

    ``matrix`` is rendered in the plain weight basis of the generator
    matrices; ``r21r`` is rendered in the orthonormalised basis (conjugated by
    the diagonal sqrt(D^2)), which is where the product is a self-adjoint
    positive definite matrix.
    """

    q: Fraction
    m: int
    n: int
    matrix: np.ndarray                    # (pi_m (x) pi_n)(R), float rendering
    r21r: np.ndarray                      # (pi_m (x) pi_n)(R21 R), self-adjoint rendering
    blocks: tuple[tuple[tuple[int, int], ...], ...]   # total-weight index groups
    r21r_exact: tuple                     # per-block exact rational matrices
    dsq: tuple[Fraction, ...]             # diagonal of the unitarising D^2

    @property
    def dim(self) -> int:
        return (self.m + 1) * (self.n + 1)


def build_rmatrix_block(q, m: int, n: int) -> RMatrixBlock:
    """Exact-and-float construction of R and R21 R on V(m) (x) V(n).

    Raises if the sqrt(q) parts of R21 R fail to cancel or if the product is
    not self-adjoint for the exact D^2 inner product (both would indicate a
    convention bug, not a numerical issue).
    """
    qf = _check_q(q)
    for label in (m, n):
        if label < 0 or label > MAX_SPIN_LABEL:
            raise ValueError(f"spin labels must lie in 0..{MAX_SPIN_LABEL}, got {label}")
    dn = n + 1
    dim = (m + 1) * (n + 1)
    idx_blocks = _block_indices(m, n)
    dm_sq = _dsq_leg(qf, m)
    dn_sq = _dsq_leg(qf, n)
    dsq = [Fraction(0)] * dim
    for i in range(m + 1):
        for j in range(n + 1):
            dsq[i * dn + j] = dm_sq[i] * dn_sq[j]

    r_float = np.zeros((dim, dim))
    r21r_float = np.zeros((dim, dim))
    sqrt_q = float(qf) ** 0.5
    exact_blocks = []
    for idx in idx_blocks:
        rb = _r_block(qf, m, n, idx, flip=False)
        rb21 = _r_block(qf, m, n, idx, flip=True)
        prod = _pair_block_mul(rb21, rb, qf)
        for (row, (ir, jr)) in enumerate(idx):
            a = ir * dn + jr
            for (col, (ic, jc)) in enumerate(idx):
                b = ic * dn + jc
                pa, pb = rb[row][col]
                r_float[a, b] = float(pa) + float(pb) * sqrt_q
                ra, rbad = prod[row][col]
                if rbad != 0:
                    raise AssertionError("sqrt(q) parts of R21 R did not cancel")
                r21r_float[a, b] = float(ra)
        rational = [[prod[i][j][0] for j in range(len(idx))] for i in range(len(idx))]
        size = len(idx)
        for i in range(size):
            ai = idx[i][0] * dn + idx[i][1]
            for j in range(size):
                aj = idx[j][0] * dn + idx[j][1]
                if dsq[ai] * rational[i][j] != rational[j][i] * dsq[aj]:
                    raise AssertionError("R21 R is not self-adjoint for the D^2 inner product")
        exact_blocks.append(tuple(tuple(row) for row in rational))

    d_float = np.sqrt(np.array([float(x) for x in dsq]))
    r21r_sym = r21r_float * (d_float[:, None] / d_float[None, :])

    return RMatrixBlock(
        q=qf, m=m, n=n,
        matrix=r_float,
        r21r=r21r_sym,
        blocks=tuple(tuple(idx) for idx in idx_blocks),
        r21r_exact=tuple(exact_blocks),
        dsq=tuple(dsq),
    )


@dataclass(frozen=True)
class EigenRow:
    nu: int                   # fusion component (m + n - 2j)
    exponent: int             # E(nu) for the inverse block
    multiplicity: int         # dim V(nu)
    value: Decimal            # q^{E(nu)}
    verified_exact: bool


@dataclass(frozen=True)
class OracleReport:
    q: Fraction
    m: int
    n: int
    tol: float
    passed: bool
    norm_computed: Decimal        # sqrt of the largest eigenvalue of (R21 R)^{-1}
    norm_expected: Decimal        # q^{-mn/2}
    norm_rel_error: Decimal
    eigen_rows: tuple[EigenRow, ...]
    exact_multiset_match: bool
    relation_residual: float
    symmetry_residual: float
    min_eigenvalue: Decimal       # exact smallest eigenvalue of the inverse block
    failures: tuple[str, ...] = ()


def verify_norm_formula(q, m: int, n: int, tol: float = 1e-8,
                        digits: int | None = None) -> OracleReport:
    """Full oracle run for one (q, m, n) triple.

    Checks, in order: the generator relations (exactly and in float), the
    exact eigenvalue multiset of the (R21 R)^{-1} block against the
    fusion-predicted exponents with their isotypical multiplicities, and the
    operator norm sqrt(Lambda_max) against q^{-mn/2} within tol.
    """
    if tol <= 0:
        raise ValueError("tol must be positive")
    qf = _check_q(q)
    ctx = precision.make_context(digits)
    failures: list[str] = []

    rep_m = build_sl2_rep(qf, m)
    rep_n = build_sl2_rep(qf, n)
    rel = max(max(relation_residuals(r).values()) for r in (rep_m, rep_n))
    if not (_exact_relations_hold(rep_m) and _exact_relations_hold(rep_n)):
        failures.append("generator relations fail in exact arithmetic")

    block = build_rmatrix_block(qf, m, n)

    # Fusion-predicted exponents, via the general-rank machinery on A1.
    rs = build_root_system("A1")
    details = rmatrix_exponent_details(rs, (n,), (m,))
    predicted: dict[int, tuple[int, int]] = {}
    for (nu,), mult, e in details.table:
        if mult != 1 or e.denominator != 1:
            failures.append(f"unexpected fusion data at nu={nu}")
        predicted[nu] = (int(e), rs.weyl_dim((nu,)))

    # Exact spectrum certification, block by block over total weight.
    exact_ok = True
    inverse_blocks = []
    for idx, exact in zip(block.blocks, block.r21r_exact):
        inv = _invert_block([list(row) for row in exact])
        inverse_blocks.append(inv)
        s = idx[0][0] + idx[0][1]
        w = abs(m + n - 2 * s)
        eigs = [qf ** predicted[nu][0] for nu in sorted(predicted, reverse=True) if nu >= w]
        size = len(idx)
        if len(eigs) != size:
            exact_ok = False
            failures.append(f"block at weight {m + n - 2 * s}: {len(eigs)} predicted vs size {size}")
            continue
        # Annihilating polynomial with distinct predicted roots ...
        acc = [[Fraction(int(i == j)) for j in range(size)] for i in range(size)]
        for c in eigs:
            shifted = [[inv[i][j] - (c if i == j else 0) for j in range(size)] for i in range(size)]
            acc = [[sum(acc[i][t] * shifted[t][j] for t in range(size)) for j in range(size)]
                   for i in range(size)]
        if any(x != 0 for row in acc for x in row):
            exact_ok = False
            failures.append(f"annihilating polynomial fails on weight-{m + n - 2 * s} block")
            continue
        # ... plus power traces pin every multiplicity to one inside the block.
        power = [[Fraction(int(i == j)) for j in range(size)] for i in range(size)]
        for p in range(1, size):
            power = [[sum(power[i][t] * inv[t][j] for t in range(size)) for j in range(size)]
                     for i in range(size)]
            if sum(power[i][i] for i in range(size)) != sum(c ** p for c in eigs):
                exact_ok = False
                failures.append(f"trace of power {p} mismatches on weight-{m + n - 2 * s} block")
                break

    eigen_rows = []
    for nu in sorted(predicted, reverse=True):
        e, mult = predicted[nu]
        value = ctx.power(precision.to_decimal(qf, ctx), e)
        eigen_rows.append(EigenRow(nu=nu, exponent=e, multiplicity=mult,
                                   value=value, verified_exact=exact_ok))
    total_mult = sum(mult for _, mult in predicted.values())
    if total_mult != (m + 1) * (n + 1):
        exact_ok = False
        failures.append("isotypical multiplicities do not fill the tensor product")

    # Numeric route for the largest eigenvalue of the inverse block: assemble
    # the exact inverse, symmetrise with D = sqrt(D^2), then eigvalsh.  The
    # largest eigenvalue of a symmetric matrix is reliable in double precision.
    dim = block.dim
    dn = n + 1
    inv_full = np.zeros((dim, dim))
    for idx, inv in zip(block.blocks, inverse_blocks):
        for i, (ir, jr) in enumerate(idx):
            for j, (ic, jc) in enumerate(idx):
                inv_full[ir * dn + jr, ic * dn + jc] = float(inv[i][j])
    d_float = np.sqrt(np.array([float(x) for x in block.dsq]))
    sym = inv_full * (d_float[:, None] / d_float[None, :])
    symmetry_residual = float(np.linalg.norm(sym - sym.T, 2) / np.linalg.norm(sym, 2))
    lam_max = float(np.linalg.eigvalsh((sym + sym.T) / 2.0)[-1])

    norm_computed = ctx.sqrt(precision.to_decimal(repr(lam_max), ctx))
    half = Fraction(m * n, 2)
    qd = precision.to_decimal(qf, ctx)
    norm_expected = ctx.exp(ctx.multiply(precision.to_decimal(-half, ctx), ctx.ln(qd)))
    rel_err = abs(ctx.divide(ctx.subtract(norm_computed, norm_expected), norm_expected))

    if rel > 1e-10:
        failures.append(f"relation residual {rel:.3e} exceeds 1e-10")
    if not exact_ok:
        failures.append("exact eigenvalue multiset certification failed")
    if rel_err > Decimal(repr(tol)):
        failures.append(f"norm mismatch: {norm_computed} vs {norm_expected}")

    min_exponent = max(e for e, _ in predicted.values())
    min_eig = ctx.power(qd, min_exponent)

    return OracleReport(
        q=qf, m=m, n=n, tol=tol,
        passed=not failures,
        norm_computed=norm_computed,
        norm_expected=norm_expected,
        norm_rel_error=rel_err,
        eigen_rows=tuple(eigen_rows),
        exact_multiset_match=exact_ok,
        relation_residual=rel,
        symmetry_residual=symmetry_residual,
        min_eigenvalue=min_eig,
        failures=tuple(failures),
    )
