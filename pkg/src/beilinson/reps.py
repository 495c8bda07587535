"""Representations of the generalized Beilinson algebra B(n,r).

A representation assigns a vector space to each of the n vertices and r
matrices to each of the n-1 arrow levels, subject to the commutativity
relations between consecutive levels.  The distinguished families here
(projectives, injectives, simples, M- and W-modules, the projective-line
family of arrow cokernels) are all built on the shared graded-lex
monomial bases from :mod:`beilinson.monomials`, so their matrices are
bit-reproducible.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .linalg import (
    DimensionMismatch,
    FpMatrix,
    PrimeField,
    image_basis,
    kernel_basis,
    quotient_projection,
    rank,
    solve_matrix,
)
from .monomials import (
    dim_degree,
    linear_form_power_matrix,
    multiplication_matrix,
)


class ConfigMismatch(ValueError):
    """Operands live over different (p, n, r) configurations."""


@dataclass(frozen=True)
class ProjPoint:
    """A point of P^{r-1}(F_p): r residues, first nonzero coordinate 1."""

    p: int
    coords: tuple[int, ...]

    def __post_init__(self):
        p = self.p
        c = tuple(int(x) % p for x in self.coords)
        nz = [i for i, x in enumerate(c) if x]
        if not nz:
            raise ValueError("projective point needs a nonzero coordinate")
        inv = pow(c[nz[0]], -1, p)
        object.__setattr__(self, "coords", tuple((x * inv) % p for x in c))

    @property
    def r(self) -> int:
        return len(self.coords)


@lru_cache(maxsize=None)
def proj_points(p: int, r: int) -> tuple[ProjPoint, ...]:
    """All of P^{r-1}(F_p) in lexicographic order of normalized coordinates."""
    PrimeField(p)
    seen = set()
    for lead in range(r):
        import itertools

        for tail in itertools.product(range(p), repeat=r - lead - 1):
            seen.add((0,) * lead + (1,) + tail)
    pts = tuple(ProjPoint(p, c) for c in sorted(seen))
    assert len(pts) == (p**r - 1) // (p - 1)
    return pts


@dataclass(frozen=True)
class BeilinsonRep:
    """A B(n,r)-representation: per-vertex dims and per-level arrow matrices.

    maps[i][l-1] has shape dims[i+1] x dims[i] and carries the l-th arrow
    from vertex i to vertex i+1."""

    p: int
    n: int
    r: int
    dims: tuple[int, ...]
    maps: tuple[tuple[FpMatrix, ...], ...]

    def __post_init__(self):
        PrimeField(self.p)
        if self.n < 2 or self.r < 2:
            raise ValueError("require n >= 2 and r >= 2")
        dims = tuple(int(d) for d in self.dims)
        if len(dims) != self.n or any(d < 0 for d in dims):
            raise ValueError("dims must list n non-negative vertex dimensions")
        if len(self.maps) != self.n - 1:
            raise ValueError("need one arrow family per level")
        for i, level in enumerate(self.maps):
            if len(level) != self.r:
                raise ValueError(f"level {i} must carry {self.r} arrows")
            for m in level:
                if m.p != self.p:
                    raise ConfigMismatch("arrow matrix over wrong field")
                if (m.rows, m.cols) != (dims[i + 1], dims[i]):
                    raise DimensionMismatch(
                        f"arrow at level {i} has shape {m.rows}x{m.cols}, "
                        f"expected {dims[i + 1]}x{dims[i]}"
                    )
        object.__setattr__(self, "dims", dims)
        object.__setattr__(self, "maps", tuple(tuple(level) for level in self.maps))

    @property
    def total_dim(self) -> int:
        return sum(self.dims)

    def same_config(self, other: "BeilinsonRep") -> bool:
        return (self.p, self.n, self.r) == (other.p, other.n, other.r)

    def to_json(self) -> str:
        return json.dumps(
            {
                "p": self.p,
                "n": self.n,
                "r": self.r,
                "dims": list(self.dims),
                "maps": [[m.tolist() for m in level] for level in self.maps],
            }
        )

    @staticmethod
    def from_json(text: str) -> "BeilinsonRep":
        d = json.loads(text)
        p, n, r = d["p"], d["n"], d["r"]
        dims = [int(x) for x in d["dims"]]
        maps = tuple(
            tuple(
                FpMatrix(p, np.asarray(arr, dtype=np.int64).reshape(dims[i + 1], dims[i]))
                for arr in level
            )
            for i, level in enumerate(d["maps"])
        )
        return BeilinsonRep(p, n, r, tuple(dims), maps)


# ---------------------------------------------------------------------------
# validation

def validate(rep: BeilinsonRep) -> list[tuple[int, tuple[int, int]]]:
    """Commutativity violations as (level, (arrow l, arrow k)); [] when ok."""
    violations = []
    for i in range(rep.n - 2):
        for l in range(rep.r):
            for k in range(l + 1, rep.r):
                lhs = rep.maps[i + 1][l] @ rep.maps[i][k]
                rhs = rep.maps[i + 1][k] @ rep.maps[i][l]
                if lhs != rhs:
                    violations.append((i, (l + 1, k + 1)))
    return violations


# ---------------------------------------------------------------------------
# distinguished families

def _graded_monomial_rep(p: int, n: int, r: int, degree_of_vertex) -> BeilinsonRep:
    """Rep whose vertex v carries the full degree-degree_of_vertex(v) piece
    of k[x_1..x_r] and whose arrows act as variable multiplication."""
    dims = tuple(dim_degree(r, degree_of_vertex(v)) for v in range(n))
    maps = []
    for i in range(n - 1):
        d = degree_of_vertex(i)
        level = []
        for l in range(1, r + 1):
            if dims[i] == 0 or dims[i + 1] == 0:
                level.append(FpMatrix.zeros(p, dims[i + 1], dims[i]))
            else:
                level.append(multiplication_matrix(p, r, d, l))
        maps.append(tuple(level))
    return BeilinsonRep(p, n, r, dims, tuple(maps))


def projective(p: int, n: int, r: int, i: int) -> BeilinsonRep:
    """The indecomposable projective P(i): monomials of degree v-i at vertex v."""
    if not 0 <= i <= n - 1:
        raise ValueError(f"vertex index {i} out of range for n={n}")
    return _graded_monomial_rep(p, n, r, lambda v: v - i)


def injective(p: int, n: int, r: int, i: int) -> BeilinsonRep:
    """The indecomposable injective I(i) = D(P(n-1-i))."""
    if not 0 <= i <= n - 1:
        raise ValueError(f"vertex index {i} out of range for n={n}")
    return dualize(projective(p, n, r, n - 1 - i))


def simple(p: int, n: int, r: int, i: int) -> BeilinsonRep:
    """The simple S(i), one-dimensional at vertex i."""
    if not 0 <= i <= n - 1:
        raise ValueError(f"vertex index {i} out of range for n={n}")
    dims = tuple(1 if v == i else 0 for v in range(n))
    maps = tuple(
        tuple(FpMatrix.zeros(p, dims[v + 1], dims[v]) for _ in range(r))
        for v in range(n - 1)
    )
    return BeilinsonRep(p, n, r, dims, maps)


def m_module(p: int, n: int, r: int, m: int, d: int) -> BeilinsonRep:
    """The Loewy-length-d slice of the polynomial ring with top degree m-1,
    supported on vertices [n-d, n-1]; vertex v carries the degree-(m-n+v)
    monomials and the arrows act by variable multiplication."""
    if not 2 <= d:
        raise ValueError(f"requires d >= 2, got d={d}")
    if not d <= n:
        raise ValueError(f"requires d <= n, got d={d} > n={n}")
    if not n <= p:
        raise ValueError(f"requires n <= p, got n={n} > p={p}")
    if not d <= m:
        raise ValueError(f"requires d <= m, got d={d} > m={m}")
    return _graded_monomial_rep(p, n, r, lambda v: m - n + v if v >= n - d else -1)


def w_module(p: int, n: int, r: int, m: int, d: int) -> BeilinsonRep:
    """Linear dual of the corresponding M-module; supported on [0, d-1]."""
    return dualize(m_module(p, n, r, m, d))


def dualize(rep: BeilinsonRep) -> BeilinsonRep:
    """Vertex-reversing linear dual: dims reversed, arrows transposed."""
    n = rep.n
    dims = tuple(reversed(rep.dims))
    maps = tuple(
        tuple(rep.maps[n - 2 - i][l].transpose() for l in range(rep.r))
        for i in range(n - 1)
    )
    return BeilinsonRep(rep.p, n, rep.r, dims, maps)


def x_module(p: int, n: int, r: int, alpha: ProjPoint, i: int, j: int = 1) -> BeilinsonRep:
    """Cokernel of right multiplication by the j-th power of the linear form
    with coefficients alpha, as a map P(i+j) -> P(i).

    Quotient bases are the complement of the column-reduced image pivots in
    the graded-lex monomial basis, so the result is deterministic."""
    if not 0 <= i <= n - 2:
        raise ValueError(f"require 0 <= i <= n-2, got i={i}")
    if not 1 <= j <= n - i - 1:
        raise ValueError(f"require 1 <= j <= n-i-1, got j={j}")
    if alpha.p != p or alpha.r != r:
        raise ConfigMismatch("alpha over wrong (p, r)")
    coeffs = alpha.coords
    projections = []
    sections = []
    dims = []
    for v in range(n):
        if v < i:
            pi_v, complement = FpMatrix.zeros(p, 0, 0), []
        else:
            u = linear_form_power_matrix(p, r, coeffs, j, v - i - j)
            pi_v, complement = quotient_projection(u)
        sec = np.zeros((pi_v.cols, len(complement)), dtype=np.int64)
        for a_idx, c in enumerate(complement):
            sec[c, a_idx] = 1
        projections.append(pi_v)
        sections.append(FpMatrix(p, sec))
        dims.append(len(complement))
    big = projective(p, n, r, i)
    maps = []
    for v in range(n - 1):
        level = []
        for l in range(r):
            if dims[v] == 0 or dims[v + 1] == 0:
                level.append(FpMatrix.zeros(p, dims[v + 1], dims[v]))
                continue
            # representatives of the quotient basis are the non-pivot
            # standard basis vectors recorded by quotient_projection
            a = projections[v + 1] @ big.maps[v][l] @ sections[v]
            # well-definedness: the image subspace must be a subrepresentation
            u_v = linear_form_power_matrix(p, r, coeffs, j, v - i - j)
            check = projections[v + 1] @ big.maps[v][l] @ u_v
            assert check.is_zero(), "arrow image left the subrepresentation"
            level.append(a)
        maps.append(tuple(level))
    return BeilinsonRep(p, n, r, tuple(dims), tuple(maps))


# ---------------------------------------------------------------------------
# operators and hom spaces

def alpha_operator(rep: BeilinsonRep, alpha: ProjPoint) -> list[FpMatrix]:
    """Step matrices of the nilpotent operator attached to alpha: the i-th
    entry is sum_l alpha_l * maps[i][l], of shape dims[i+1] x dims[i]."""
    if alpha.p != rep.p or alpha.r != rep.r:
        raise ConfigMismatch("alpha over wrong (p, r)")
    steps = []
    for i in range(rep.n - 1):
        acc = FpMatrix.zeros(rep.p, rep.dims[i + 1], rep.dims[i])
        for l, c in enumerate(alpha.coords):
            if c:
                acc = acc + rep.maps[i][l].scale(c)
        steps.append(acc)
    return steps


def step_power_rank(rep: BeilinsonRep, alpha: ProjPoint, j: int) -> int:
    """Rank of the j-th power of the alpha operator: the sum over start
    levels of the ranks of the j-fold step composites."""
    steps = alpha_operator(rep, alpha)
    total = 0
    for i in range(rep.n - j):
        comp = steps[i]
        for t in range(1, j):
            comp = steps[i + t] @ comp
        total += rank(comp)
    return total


def hom_space(x: BeilinsonRep, y: BeilinsonRep) -> list[tuple[FpMatrix, ...]]:
    """Basis of the intertwiner space Hom(x, y), each element a tuple of
    per-vertex matrices phi_v with phi_{v+1} x.maps = y.maps phi_v."""
    if not x.same_config(y):
        raise ConfigMismatch("hom_space requires matching (p, n, r)")
    p, n = x.p, x.n
    sizes = [y.dims[v] * x.dims[v] for v in range(n)]
    offs = np.concatenate([[0], np.cumsum(sizes)])
    total = int(offs[-1])
    blocks = []
    for v in range(n - 1):
        for l in range(x.r):
            a_x = x.maps[v][l].a
            a_y = y.maps[v][l].a
            row = np.zeros((y.dims[v + 1] * x.dims[v], total), dtype=np.int64)
            if row.shape[0] == 0:
                continue
            # row-major vec: vec(phi A) = (I (x) A^T) vec(phi)
            if sizes[v + 1]:
                row[:, offs[v + 1]:offs[v + 2]] = np.kron(
                    np.eye(y.dims[v + 1], dtype=np.int64), a_x.T
                )
            if sizes[v]:
                row[:, offs[v]:offs[v + 1]] -= np.kron(a_y, np.eye(x.dims[v], dtype=np.int64))
            blocks.append(row % p)
    if total == 0:
        return []
    if blocks:
        system = FpMatrix(p, np.vstack(blocks))
        ker = kernel_basis(system)
    else:
        ker = FpMatrix.identity(p, total)
    basis = []
    for c in range(ker.cols):
        vec = ker.a[:, c]
        phi = tuple(
            FpMatrix(p, vec[offs[v]:offs[v + 1]].reshape(y.dims[v], x.dims[v]))
            for v in range(n)
        )
        basis.append(phi)
    return basis


def direct_sum(x: BeilinsonRep, y: BeilinsonRep) -> BeilinsonRep:
    if not x.same_config(y):
        raise ConfigMismatch("direct_sum requires matching (p, n, r)")
    p = x.p
    dims = tuple(a + b for a, b in zip(x.dims, y.dims))
    maps = []
    for i in range(x.n - 1):
        level = []
        for l in range(x.r):
            blk = np.zeros((dims[i + 1], dims[i]), dtype=np.int64)
            blk[: x.dims[i + 1], : x.dims[i]] = x.maps[i][l].a
            blk[x.dims[i + 1]:, x.dims[i]:] = y.maps[i][l].a
            level.append(FpMatrix(p, blk))
        maps.append(tuple(level))
    return BeilinsonRep(p, x.n, x.r, dims, tuple(maps))


def support(rep: BeilinsonRep) -> tuple[int, int] | None:
    """(min, max) vertex with nonzero dimension, or None for the zero rep."""
    nz = [v for v, d in enumerate(rep.dims) if d]
    if not nz:
        return None
    return nz[0], nz[-1]


def is_standardly_graded(rep: BeilinsonRep) -> bool:
    """True iff the rep is generated by its lowest nonzero component."""
    supp = support(rep)
    if supp is None:
        return True
    lo, hi = supp
    span = FpMatrix.identity(rep.p, rep.dims[lo])
    for v in range(lo, hi):
        pushed = None
        for l in range(rep.r):
            piece = rep.maps[v][l] @ span
            pushed = piece if pushed is None else pushed.hstack(piece)
        span = image_basis(pushed)
        if span.cols < rep.dims[v + 1]:
            return False
    return True


def is_costandardly_graded(rep: BeilinsonRep) -> bool:
    """True iff the rep is cogenerated by its highest nonzero component."""
    return is_standardly_graded(dualize(rep))


def image_rep(phi: tuple[FpMatrix, ...], x: BeilinsonRep, y: BeilinsonRep) -> BeilinsonRep:
    """The image of an intertwiner phi: x -> y, as a subrepresentation of y."""
    bases = [image_basis(phi_v) for phi_v in phi]
    return sub_rep(y, bases)


def sub_rep(y: BeilinsonRep, bases: list[FpMatrix]) -> BeilinsonRep:
    """Subrepresentation of y spanned vertex-wise by the given column bases.

    The bases must be arrow-stable; the induced arrow matrices are solved
    for exactly and the stability is asserted."""
    p = y.p
    dims = tuple(b.cols for b in bases)
    maps = []
    for v in range(y.n - 1):
        level = []
        for l in range(y.r):
            target = y.maps[v][l] @ bases[v]
            coords = solve_matrix(bases[v + 1], target)
            assert coords is not None, "subspaces are not arrow-stable"
            level.append(coords)
        maps.append(tuple(level))
    return BeilinsonRep(p, y.n, y.r, dims, tuple(maps))


# ---------------------------------------------------------------------------
# isomorphism testing for representations (shared search with kE_r-modules)

def rep_isomorphic(x: BeilinsonRep, y: BeilinsonRep, seed: int = 0, budget: int = 200,
                   enumerate_threshold: int = 10**6):
    """Graded isomorphism verdict: 'yes' | 'no' | 'probably_not'.

    'yes' is certified by an explicit vertex-wise invertible intertwiner;
    'no' is certified by a dimension-vector mismatch or by exhausting the
    coefficient enumeration of the hom space."""
    from .search import find_invertible  # local import to avoid a cycle

    if not x.same_config(y):
        raise ConfigMismatch("isomorphism requires matching (p, n, r)")
    if x.dims != y.dims:
        return "no"
    if x.total_dim == 0:
        return "yes"
    basis = hom_space(x, y)
    if not basis:
        return "no"

    def combine(coeffs):
        acc = [FpMatrix.zeros(x.p, y.dims[v], x.dims[v]) for v in range(x.n)]
        for c, phi in zip(coeffs, basis):
            if c:
                acc = [a + m.scale(c) for a, m in zip(acc, phi)]
        return acc

    def invertible(phi):
        return all(rank(phi_v) == x.dims[v] for v, phi_v in enumerate(phi))

    return find_invertible(x.p, len(basis), combine, invertible, seed, budget,
                           enumerate_threshold)
