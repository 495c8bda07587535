"""Shared test utilities."""

import numpy as np

from beilinson.linalg import FpMatrix, kernel_basis
from beilinson.reps import BeilinsonRep, validate


def random_valid_rep(p, n, r, max_dim, rng):
    """A representation satisfying the commutativity relations: the first
    level is free, later levels are sampled from the kernel of the linear
    system expressing the relations."""
    dims = tuple(int(rng.integers(1, max_dim + 1)) for _ in range(n))
    maps = []
    level0 = tuple(
        FpMatrix.random(p, dims[1], dims[0], rng) for _ in range(r)
    )
    maps.append(level0)
    for v in range(1, n - 1):
        rows_blocks = []
        d_prev, d_cur, d_next = dims[v - 1], dims[v], dims[v + 1]
        prev = maps[v - 1]
        # Unknowns: the r matrices B_l of shape d_next x d_cur, flattened
        # row-major and concatenated. Constraints: B_l A_k = B_k A_l.
        cols = r * d_next * d_cur
        rows = []
        for l in range(r):
            for k in range(l + 1, r):
                for i in range(d_next):
                    for j in range(d_prev):
                        row = np.zeros(cols, dtype=np.int64)
                        base_l = l * d_next * d_cur + i * d_cur
                        base_k = k * d_next * d_cur + i * d_cur
                        for t in range(d_cur):
                            row[base_l + t] += int(prev[k].a[t, j])
                            row[base_k + t] -= int(prev[l].a[t, j])
                        rows.append(row % p)
        if rows:
            system = FpMatrix(p, np.array(rows, dtype=np.int64) % p)
            null = kernel_basis(system)
            coeffs = rng.integers(0, p, size=null.cols)
            flat = (null.a @ coeffs) % p
        else:
            flat = rng.integers(0, p, size=cols)
        level = tuple(
            FpMatrix(
                p,
                np.asarray(flat[
                    l * d_next * d_cur:(l + 1) * d_next * d_cur
                ], dtype=np.int64).reshape(d_next, d_cur),
            )
            for l in range(r)
        )
        maps.append(level)
    rep = BeilinsonRep(p, n, r, dims, tuple(maps))
    assert validate(rep) == []
    return rep
