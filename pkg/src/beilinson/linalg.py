"""Exact dense linear algebra over a prime field F_p.

All matrices are dense, row-major numpy int64 arrays with entries reduced
into [0, p).  Every value is immutable after construction and every
operation is a pure function, so callers may share and parallelize freely.
Entry magnitudes must satisfy (p-1)^2 * max_dim < 2^63, which holds for
any machine-word prime at the dimensions this library targets.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

import numpy as np


class DimensionMismatch(ValueError):
    """Raised when operand shapes are incompatible."""


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


@dataclass(frozen=True)
class PrimeField:
    """The field F_p for a prime modulus p (checked by trial division)."""

    p: int

    def __post_init__(self):
        if not is_prime(self.p):
            raise ValueError(f"modulus {self.p} is not prime")

    def inv(self, x: int) -> int:
        # pow with exponent -1 runs the extended Euclidean algorithm
        return pow(int(x) % self.p, -1, self.p)


def _as_array(entries, rows: int, cols: int, p: int) -> np.ndarray:
    a = np.asarray(entries, dtype=np.int64).reshape(rows, cols) % p
    a.setflags(write=False)
    return a


@dataclass(frozen=True)
class FpMatrix:
    """Immutable dense matrix over F_p."""

    p: int
    a: np.ndarray = field(compare=False)

    def __post_init__(self):
        if not is_prime(self.p):
            raise ValueError(f"modulus {self.p} is not prime")
        arr = np.asarray(self.a, dtype=np.int64)
        if arr.ndim != 2:
            raise DimensionMismatch("FpMatrix requires a 2-d array")
        arr = arr % self.p
        arr.setflags(write=False)
        object.__setattr__(self, "a", arr)

    # -- construction helpers -------------------------------------------
    @staticmethod
    def zeros(p: int, rows: int, cols: int) -> "FpMatrix":
        return FpMatrix(p, np.zeros((rows, cols), dtype=np.int64))

    @staticmethod
    def identity(p: int, n: int) -> "FpMatrix":
        return FpMatrix(p, np.eye(n, dtype=np.int64))

    @staticmethod
    def from_rows(p: int, rows) -> "FpMatrix":
        arr = np.asarray(rows, dtype=np.int64)
        if arr.ndim == 1:
            arr = arr.reshape(1, -1)
        return FpMatrix(p, arr)

    @staticmethod
    def random(p: int, rows: int, cols: int, rng: np.random.Generator) -> "FpMatrix":
        return FpMatrix(p, rng.integers(0, p, size=(rows, cols), dtype=np.int64))

    # -- basic structure -------------------------------------------------
    @property
    def rows(self) -> int:
        return self.a.shape[0]

    @property
    def cols(self) -> int:
        return self.a.shape[1]

    def transpose(self) -> "FpMatrix":
        return FpMatrix(self.p, self.a.T.copy())

    @property
    def T(self) -> "FpMatrix":
        return self.transpose()

    def __eq__(self, other) -> bool:
        if not isinstance(other, FpMatrix):
            return NotImplemented
        return (
            self.p == other.p
            and self.a.shape == other.a.shape
            and bool(np.array_equal(self.a, other.a))
        )

    def __hash__(self):
        return hash((self.p, self.a.shape, self.a.tobytes()))

    def __matmul__(self, other: "FpMatrix") -> "FpMatrix":
        if self.p != other.p:
            raise DimensionMismatch("mixed moduli")
        if self.cols != other.rows:
            raise DimensionMismatch(
                f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}"
            )
        return FpMatrix(self.p, (self.a @ other.a) % self.p)

    def __add__(self, other: "FpMatrix") -> "FpMatrix":
        if self.p != other.p or self.a.shape != other.a.shape:
            raise DimensionMismatch("shape or modulus mismatch in addition")
        return FpMatrix(self.p, (self.a + other.a) % self.p)

    def __sub__(self, other: "FpMatrix") -> "FpMatrix":
        if self.p != other.p or self.a.shape != other.a.shape:
            raise DimensionMismatch("shape or modulus mismatch in subtraction")
        return FpMatrix(self.p, (self.a - other.a) % self.p)

    def scale(self, c: int) -> "FpMatrix":
        return FpMatrix(self.p, (self.a * (c % self.p)) % self.p)

    def is_zero(self) -> bool:
        return not self.a.any()

    def hstack(self, other: "FpMatrix") -> "FpMatrix":
        if self.p != other.p or self.rows != other.rows:
            raise DimensionMismatch("hstack mismatch")
        return FpMatrix(self.p, np.hstack([self.a, other.a]))

    def vstack(self, other: "FpMatrix") -> "FpMatrix":
        if self.p != other.p or self.cols != other.cols:
            raise DimensionMismatch("vstack mismatch")
        return FpMatrix(self.p, np.vstack([self.a, other.a]))

    def tolist(self):
        return self.a.flatten().tolist()


def _rref(a: np.ndarray, p: int):
    """Reduced row echelon form mod p; returns (rref, pivot column list)."""
    m = a.copy() % p
    rows, cols = m.shape
    pivots = []
    row = 0
    for col in range(cols):
        if row >= rows:
            break
        nz = np.nonzero(m[row:, col])[0]
        if nz.size == 0:
            continue
        piv = row + nz[0]
        if piv != row:
            m[[row, piv]] = m[[piv, row]]
        m[row] = (m[row] * pow(int(m[row, col]), -1, p)) % p
        others = np.nonzero(m[:, col])[0]
        others = others[others != row]
        if others.size:
            m[others] = (m[others] - np.outer(m[others, col], m[row])) % p
        pivots.append(col)
        row += 1
    return m, pivots


def rref(m: FpMatrix):
    """Reduced row echelon form; returns (FpMatrix, pivot columns)."""
    r, pivots = _rref(m.a, m.p)
    return FpMatrix(m.p, r), pivots


def rank(m: FpMatrix) -> int:
    """F_p-rank via Gaussian elimination."""
    _, pivots = _rref(m.a, m.p)
    return len(pivots)


def kernel_basis(m: FpMatrix) -> FpMatrix:
    """Basis of the right null space, as columns; cols = cols(m) - rank(m)."""
    r, pivots = _rref(m.a, m.p)
    free = [c for c in range(m.cols) if c not in pivots]
    basis = np.zeros((m.cols, len(free)), dtype=np.int64)
    for idx, f in enumerate(free):
        basis[f, idx] = 1
        for t, pc in enumerate(pivots):
            basis[pc, idx] = (-r[t, f]) % m.p
    return FpMatrix(m.p, basis)


def image_basis(m: FpMatrix) -> FpMatrix:
    """Column basis of the column space (original pivot columns)."""
    _, pivots = _rref(m.a, m.p)
    return FpMatrix(m.p, m.a[:, pivots].copy())


def cokernel_projection(m: FpMatrix):
    """Surjection q with q @ m = 0 and rank(q) = rows(m) - rank(m).

    Returns (q, coker_dim)."""
    q = kernel_basis(m.transpose()).transpose()
    return q, q.rows


def solve(a: FpMatrix, b) -> np.ndarray | None:
    """Any solution x of a x = b, or None. b is a length-rows(a) vector."""
    bv = np.asarray(b, dtype=np.int64).reshape(-1) % a.p
    if bv.shape[0] != a.rows:
        raise DimensionMismatch("right-hand side length mismatch")
    sol = solve_matrix(a, FpMatrix(a.p, bv.reshape(-1, 1)))
    return None if sol is None else sol.a[:, 0].copy()


def solve_matrix(a: FpMatrix, b: FpMatrix) -> FpMatrix | None:
    """Any solution X of a X = b with matrix right-hand side, or None."""
    if a.p != b.p or a.rows != b.rows:
        raise DimensionMismatch("solve_matrix shape mismatch")
    aug = np.hstack([a.a, b.a])
    r, pivots = _rref(aug, a.p)
    if any(pc >= a.cols for pc in pivots):
        return None
    x = np.zeros((a.cols, b.cols), dtype=np.int64)
    for t, pc in enumerate(pivots):
        x[pc] = r[t, a.cols:]
    return FpMatrix(a.p, x)


def quotient_projection(basis: FpMatrix):
    """Projection onto the quotient of the ambient space by a column span.

    Given a (possibly non-reduced) spanning set U of a subspace of F_p^N
    as columns, returns (pi, complement) where pi is a (N - rank U) x N
    matrix whose kernel is exactly span(U) and complement lists the
    standard-basis indices whose classes form the quotient basis (the
    non-pivot rows of the column-reduced span)."""
    p, n = basis.p, basis.rows
    ech, pivots = _rref(basis.a.T, p)  # rows of ech span the column space
    k = len(pivots)
    ech = ech[:k]
    complement = [i for i in range(n) if i not in pivots]
    pi = np.zeros((len(complement), n), dtype=np.int64)
    for a_idx, c in enumerate(complement):
        pi[a_idx, c] = 1
        for t, pv in enumerate(pivots):
            pi[a_idx, pv] = (-ech[t, c]) % p
    return FpMatrix(p, pi), complement


def subspaces(p: int, d: int):
    """All subspaces of F_p^d, each as an FpMatrix of basis columns in RREF.

    Exhaustive enumeration; intended for very small d."""
    for k in range(d + 1):
        for pivots in itertools.combinations(range(d), k):
            free_slots = [
                (i, j)
                for i in range(k)
                for j in range(d)
                if j > pivots[i] and j not in pivots
            ]
            for vals in itertools.product(range(p), repeat=len(free_slots)):
                b = np.zeros((k, d), dtype=np.int64)
                for i in range(k):
                    b[i, pivots[i]] = 1
                for (i, j), v in zip(free_slots, vals):
                    b[i, j] = v
                yield FpMatrix(p, b.T.copy())
