"""kE_r-modules: r pairwise-commuting nilpotent operators with x_i^p = 0.

Covers the forgetful functor from graded representations, Jordan types,
radical/socle series, the radical powers of the group algebra itself,
twists by invertible coordinate changes, endomorphism algebras, and
isomorphism / indecomposability testing with certified positives."""

from __future__ import annotations

import json
from dataclasses import dataclass
from math import comb

import numpy as np

from .linalg import (
    FpMatrix,
    PrimeField,
    image_basis,
    kernel_basis,
    quotient_projection,
    rank,
)
from .monomials import monomials
from .reps import BeilinsonRep, ConfigMismatch, ProjPoint, proj_points
from .search import find_invertible


@dataclass(frozen=True)
class ErModule:
    """A module over k[x_1..x_r]/(x_1^p..x_r^p): commuting nilpotent ops."""

    p: int
    r: int
    dim: int
    ops: tuple[FpMatrix, ...]

    def __post_init__(self):
        PrimeField(self.p)
        if self.r < 2:
            raise ValueError("require r >= 2")
        if len(self.ops) != self.r:
            raise ValueError(f"need {self.r} operators")
        for op in self.ops:
            if op.p != self.p or (op.rows, op.cols) != (self.dim, self.dim):
                raise ValueError("operator shape or modulus mismatch")
        object.__setattr__(self, "ops", tuple(self.ops))

    def same_config(self, other: "ErModule") -> bool:
        return (self.p, self.r) == (other.p, other.r)

    def to_json(self) -> str:
        return json.dumps(
            {
                "p": self.p,
                "r": self.r,
                "dim": self.dim,
                "ops": [op.tolist() for op in self.ops],
            }
        )

    @staticmethod
    def from_json(text: str) -> "ErModule":
        d = json.loads(text)
        p, r, dim = d["p"], d["r"], d["dim"]
        ops = tuple(
            FpMatrix(p, np.asarray(arr, dtype=np.int64).reshape(dim, dim))
            for arr in d["ops"]
        )
        return ErModule(p, r, dim, ops)


def validate_module(m: ErModule) -> list[str]:
    """Invariant violations: non-commuting pairs or non-vanishing p-th powers."""
    problems = []
    for i in range(m.r):
        for j in range(i + 1, m.r):
            if m.ops[i] @ m.ops[j] != m.ops[j] @ m.ops[i]:
                problems.append(f"operators {i + 1} and {j + 1} do not commute")
    for i, op in enumerate(m.ops):
        power = FpMatrix.identity(m.p, m.dim)
        for _ in range(m.p):
            power = power @ op
        if not power.is_zero():
            problems.append(f"operator {i + 1} is not nilpotent of order <= p")
    return problems


@dataclass(frozen=True)
class JordanType:
    """Multiset of Jordan block sizes; counts[i] blocks of size i+1."""

    counts: tuple[int, ...]

    def __post_init__(self):
        c = tuple(int(x) for x in self.counts)
        while c and c[-1] == 0:
            c = c[:-1]
        object.__setattr__(self, "counts", c)

    @property
    def total(self) -> int:
        return sum((i + 1) * a for i, a in enumerate(self.counts))

    def blocks(self, size: int) -> int:
        return self.counts[size - 1] if 1 <= size <= len(self.counts) else 0

    def __str__(self) -> str:
        parts = [
            f"{a}[{i + 1}]"
            for i, a in reversed(list(enumerate(self.counts)))
            if a
        ]
        return " + ".join(parts) if parts else "0"


# ---------------------------------------------------------------------------
# the forgetful functor

def forget(rep: BeilinsonRep) -> ErModule:
    """Sum the graded components; each variable acts block-subdiagonally."""
    if rep.p < rep.n:
        raise ValueError(f"forget requires p >= n, got p={rep.p} < n={rep.n}")
    dim = rep.total_dim
    offs = np.concatenate([[0], np.cumsum(rep.dims)])
    ops = []
    for l in range(rep.r):
        a = np.zeros((dim, dim), dtype=np.int64)
        for i in range(rep.n - 1):
            a[offs[i + 1]:offs[i + 2], offs[i]:offs[i + 1]] = rep.maps[i][l].a
        ops.append(FpMatrix(rep.p, a))
    return ErModule(rep.p, rep.r, dim, tuple(ops))


# ---------------------------------------------------------------------------
# Jordan types

def point_operator(m: ErModule, alpha: ProjPoint) -> FpMatrix:
    if alpha.p != m.p or alpha.r != m.r:
        raise ConfigMismatch("alpha over wrong (p, r)")
    acc = FpMatrix.zeros(m.p, m.dim, m.dim)
    for l, c in enumerate(alpha.coords):
        if c:
            acc = acc + m.ops[l].scale(c)
    return acc


def jordan_type(m: ErModule, alpha: ProjPoint) -> JordanType:
    """Block sizes of the nilpotent operator attached to alpha, from the
    rank sequence of its powers: a_i = r_{i-1} - 2 r_i + r_{i+1}."""
    nil = point_operator(m, alpha)
    ranks = [m.dim]
    power = nil
    for _ in range(m.p):
        ranks.append(rank(power))
        if ranks[-1] == 0:
            break
        power = power @ nil
    while len(ranks) < m.p + 2:
        ranks.append(0)
    counts = tuple(
        ranks[i - 1] - 2 * ranks[i] + ranks[i + 1] for i in range(1, m.p + 1)
    )
    jt = JordanType(counts)
    assert jt.total == m.dim
    return jt


def jt_formula(n: int, d: int, r: int) -> JordanType:
    """Closed-form Jordan type of the Loewy-length-d slice modules:
    C(r+n-d-1, n-d) blocks of size d plus C(r+n-2-i, n-i) blocks of each
    size i < d."""
    if d > n:
        raise ValueError(f"requires d <= n, got d={d} > n={n}")
    if d < 1:
        raise ValueError("requires d >= 1")
    counts = [0] * d
    counts[d - 1] = comb(r + n - d - 1, n - d)
    for i in range(1, d):
        counts[i - 1] = comb(r + n - 2 - i, n - i)
    return JordanType(tuple(counts))


def has_constant_jordan_type(m: ErModule) -> tuple[bool, JordanType | None]:
    """Exhaustive check over the rational projective points."""
    jts = {jordan_type(m, a) for a in proj_points(m.p, m.r)}
    if len(jts) == 1:
        return True, next(iter(jts))
    return False, None


# ---------------------------------------------------------------------------
# radical and socle

def radical(m: ErModule) -> FpMatrix:
    """Column basis of rad M = sum of the operator images."""
    stacked = m.ops[0]
    for op in m.ops[1:]:
        stacked = stacked.hstack(op)
    return image_basis(stacked)


def socle(m: ErModule) -> FpMatrix:
    """Column basis of soc M = intersection of the operator kernels."""
    stacked = m.ops[0]
    for op in m.ops[1:]:
        stacked = stacked.vstack(op)
    return kernel_basis(stacked)


def rad_series(m: ErModule) -> list[int]:
    """Dimensions of rad^0 M >= rad^1 M >= ... down to 0."""
    dims = [m.dim]
    basis = FpMatrix.identity(m.p, m.dim)
    while basis.cols:
        pushed = None
        for op in m.ops:
            piece = op @ basis
            pushed = piece if pushed is None else pushed.hstack(piece)
        basis = image_basis(pushed)
        dims.append(basis.cols)
        if basis.cols == 0:
            break
    return dims


def soc_series(m: ErModule) -> list[int]:
    """Dimensions of 0 <= soc^1 M <= soc^2 M <= ... up to M."""
    dims = [0]
    basis = FpMatrix.zeros(m.p, m.dim, 0)
    while basis.cols < m.dim:
        pi, _ = quotient_projection(basis)
        stacked = None
        for op in m.ops:
            piece = pi @ op
            stacked = piece if stacked is None else stacked.vstack(piece)
        basis = kernel_basis(stacked)
        dims.append(basis.cols)
    return dims


def loewy_length(m: ErModule) -> int:
    return len(rad_series(m)) - 1


# ---------------------------------------------------------------------------
# the group algebra and its radical powers

def group_algebra_radical_power(p: int, r: int, s: int) -> ErModule:
    """The s-th radical power of kE_r on its truncated monomial basis.

    Basis: exponent tuples in [0, p-1]^r of total degree >= s; each
    variable acts by exponent bump, vanishing past exponent p-1.  s runs
    from 0 (the regular module, dimension p^r) to r(p-1)+1 (zero)."""
    PrimeField(p)
    top = r * (p - 1) + 1
    if not 0 <= s <= top:
        raise ValueError(f"require 0 <= s <= {top}, got s={s}")
    basis = [
        e
        for deg in range(s, top)
        for e in monomials(r, deg)
        if all(x <= p - 1 for x in e)
    ]
    index = {e: i for i, e in enumerate(basis)}
    dim = len(basis)
    ops = []
    for l in range(r):
        a = np.zeros((dim, dim), dtype=np.int64)
        for j, e in enumerate(basis):
            if e[l] + 1 <= p - 1:
                bumped = tuple(x + (1 if t == l else 0) for t, x in enumerate(e))
                a[index[bumped], j] = 1
        ops.append(FpMatrix(p, a))
    return ErModule(p, r, dim, tuple(ops))


# ---------------------------------------------------------------------------
# twists

def twist(m: ErModule, g: FpMatrix) -> ErModule:
    """The coordinate-change twist: new x_l = sum_t (g^{-1})_{tl} x_t."""
    if g.p != m.p or (g.rows, g.cols) != (m.r, m.r):
        raise ValueError("twist needs an r x r matrix over the same field")
    ginv = invert(g)
    ops = []
    for l in range(m.r):
        acc = FpMatrix.zeros(m.p, m.dim, m.dim)
        for t in range(m.r):
            c = int(ginv.a[t, l])
            if c:
                acc = acc + m.ops[t].scale(c)
        ops.append(acc)
    return ErModule(m.p, m.r, m.dim, tuple(ops))


def invert(g: FpMatrix) -> FpMatrix:
    from .linalg import solve_matrix

    if g.rows != g.cols:
        raise ValueError("only square matrices invert")
    inv = solve_matrix(g, FpMatrix.identity(g.p, g.rows))
    if inv is None or rank(g) != g.rows:
        raise ValueError("matrix is singular")
    return inv


def random_invertible(p: int, n: int, rng: np.random.Generator) -> FpMatrix:
    while True:
        g = FpMatrix.random(p, n, n, rng)
        if rank(g) == n:
            return g


# ---------------------------------------------------------------------------
# hom spaces, endomorphism algebras, isomorphism, indecomposability

def hom_modules(m: ErModule, n: ErModule) -> list[FpMatrix]:
    """Basis of the intertwiner space {phi : phi x_l = x_l' phi for all l}."""
    if not m.same_config(n):
        raise ConfigMismatch("hom requires matching (p, r)")
    p = m.p
    total = n.dim * m.dim
    if total == 0:
        return []
    blocks = []
    for l in range(m.r):
        # row-major vec: vec(phi A - B phi) = (I (x) A^T - B (x) I) vec(phi)
        row = np.kron(np.eye(n.dim, dtype=np.int64), m.ops[l].a.T) - np.kron(
            n.ops[l].a, np.eye(m.dim, dtype=np.int64)
        )
        blocks.append(row % p)
    ker = kernel_basis(FpMatrix(p, np.vstack(blocks)))
    return [
        FpMatrix(p, ker.a[:, c].reshape(n.dim, m.dim)) for c in range(ker.cols)
    ]


def is_isomorphic(m: ErModule, n: ErModule, seed: int = 0, budget: int = 200,
                  enumerate_threshold: int = 10**6) -> str:
    """'yes' | 'no' | 'probably_not'.

    Quick certified rejections by dimension, Jordan types at every rational
    point and radical-series dimensions; then an invertible element is
    searched in Hom(m, n).  'yes' is always certified by a witness; 'no'
    after the quick rejections is certified only by exhausted enumeration."""
    if not m.same_config(n):
        raise ConfigMismatch("isomorphism requires matching (p, r)")
    if m.dim != n.dim:
        return "no"
    if m.dim == 0:
        return "yes"
    for alpha in proj_points(m.p, m.r):
        if jordan_type(m, alpha) != jordan_type(n, alpha):
            return "no"
    if rad_series(m) != rad_series(n):
        return "no"
    basis = hom_modules(m, n)
    if not basis:
        return "no"

    def combine(coeffs):
        acc = FpMatrix.zeros(m.p, n.dim, m.dim)
        for c, phi in zip(coeffs, basis):
            if c:
                acc = acc + phi.scale(c)
        return acc

    return find_invertible(
        m.p, len(basis), combine, lambda phi: rank(phi) == m.dim, seed, budget,
        enumerate_threshold,
    )


@dataclass(frozen=True)
class EndReport:
    dimension: int
    commutative: bool
    local: bool
    regime: str  # "deterministic" or "heuristic"


def _is_nilpotent(phi: FpMatrix) -> bool:
    power = phi
    steps = 1
    while steps < phi.rows:
        if power.is_zero():
            return True
        power = power @ power
        steps *= 2
    return power.is_zero()


def end_algebra(m: ErModule, seed: int = 0, trials: int = 50,
                sweep_limit: int = 12) -> tuple[list[FpMatrix], EndReport]:
    """Endomorphism basis with commutativity and locality flags.

    Commutativity is exact (all basis pairs).  For dim End <= sweep_limit
    the locality flag is decided by a deterministic sweep checking every
    basis element is a scalar plus a nilpotent; in the commutative case
    that certifies a local ring with residue field F_p.  Above the limit a
    randomized sweep over sampled elements is used and flagged heuristic."""
    basis = hom_modules(m, m)
    h = len(basis)
    commutative = all(
        basis[i] @ basis[j] == basis[j] @ basis[i]
        for i in range(h)
        for j in range(i + 1, h)
    )

    def scalar_plus_nilpotent(phi: FpMatrix) -> bool:
        eye = FpMatrix.identity(m.p, m.dim)
        return any(_is_nilpotent(phi - eye.scale(c)) for c in range(m.p))

    if h <= sweep_limit:
        local = all(scalar_plus_nilpotent(phi) for phi in basis)
        regime = "deterministic"
    else:
        rng = np.random.default_rng(seed)
        local = True
        for _ in range(trials):
            coeffs = rng.integers(0, m.p, size=h)
            acc = FpMatrix.zeros(m.p, m.dim, m.dim)
            for c, phi in zip(coeffs, basis):
                if c:
                    acc = acc + phi.scale(int(c))
            if not scalar_plus_nilpotent(acc):
                local = False
                break
        regime = "heuristic"
    return basis, EndReport(h, commutative, local, regime)


@dataclass(frozen=True)
class IndecResult:
    verdict: str  # "yes" | "decomposable" | "probably_yes"
    summand_dims: tuple[int, int] | None = None


def _fitting_split(phi_power: FpMatrix, total: int) -> tuple[int, int] | None:
    r1 = rank(phi_power)
    if 0 < r1 < total:
        return (total - r1, r1)
    return None


def is_indecomposable(m, seed: int = 0, trials: int = 40) -> IndecResult:
    """Certified 'yes' when dim End = 1; otherwise randomized Fitting:
    a sampled endomorphism whose stable power is neither zero nor
    invertible certifies a direct decomposition."""
    if isinstance(m, BeilinsonRep):
        from .reps import hom_space

        if m.total_dim == 0:
            raise ValueError("the zero module is neither")
        basis = hom_space(m, m)
        total = m.total_dim

        def power(coeffs):
            acc = [FpMatrix.zeros(m.p, d, d) for d in m.dims]
            for c, phi in zip(coeffs, basis):
                if c:
                    acc = [a + f.scale(c) for a, f in zip(acc, phi)]
            out = np.zeros((total, total), dtype=np.int64)
            offs = np.concatenate([[0], np.cumsum(m.dims)])
            for v, blk in enumerate(acc):
                out[offs[v]:offs[v + 1], offs[v]:offs[v + 1]] = blk.a
            return FpMatrix(m.p, out)

        p = m.p
    elif isinstance(m, ErModule):
        if m.dim == 0:
            raise ValueError("the zero module is neither")
        basis = hom_modules(m, m)
        total = m.dim

        def power(coeffs):
            acc = FpMatrix.zeros(m.p, total, total)
            for c, phi in zip(coeffs, basis):
                if c:
                    acc = acc + phi.scale(c)
            return acc

        p = m.p
    else:
        raise TypeError("expected a BeilinsonRep or an ErModule")

    h = len(basis)
    if h == 1:
        return IndecResult("yes")

    def stable_power(phi: FpMatrix) -> FpMatrix:
        acc = phi
        steps = 1
        while steps < total:
            acc = acc @ acc
            steps *= 2
        return acc

    for idx in range(h):
        coeffs = tuple(1 if t == idx else 0 for t in range(h))
        split = _fitting_split(stable_power(power(coeffs)), total)
        if split:
            return IndecResult("decomposable", split)
    rng = np.random.default_rng(seed)
    for _ in range(trials):
        coeffs = tuple(int(c) for c in rng.integers(0, p, size=h))
        if not any(coeffs):
            continue
        split = _fitting_split(stable_power(power(coeffs)), total)
        if split:
            return IndecResult("decomposable", split)
    if h <= 12:
        # Deterministic certification: when End is commutative and every
        # basis element is scalar plus nilpotent, End is local, so the
        # module is indecomposable.
        mats = [
            power(tuple(1 if t == idx else 0 for t in range(h)))
            for idx in range(h)
        ]
        commutative = all(
            mats[i] @ mats[j] == mats[j] @ mats[i]
            for i in range(h)
            for j in range(i + 1, h)
        )
        eye = FpMatrix.identity(p, total)
        if commutative and all(
            any(_is_nilpotent(phi - eye.scale(c)) for c in range(p))
            for phi in mats
        ):
            return IndecResult("yes")
    return IndecResult("probably_yes")
