"""Shared randomized/exhaustive search for invertible hom-space elements.

Used by the isomorphism tests for both graded representations and
kE_r-modules.  A found invertible element certifies 'yes'.  'no' is
certified only when the full coefficient space of the hom basis has been
enumerated without success; otherwise the verdict degrades to
'probably_not' after the trial budget."""

from __future__ import annotations

import itertools

import numpy as np


def find_invertible(p: int, basis_size: int, combine, invertible, seed: int = 0,
                    budget: int = 200, enumerate_threshold: int = 10**6) -> str:
    """Search the span of a hom basis for an invertible element.

    combine(coeffs) builds the candidate from a coefficient tuple;
    invertible(candidate) decides it.  Returns 'yes', 'no' or
    'probably_not'."""
    if basis_size == 0:
        return "no"
    # cheap first passes: single basis elements, then random combinations
    for idx in range(basis_size):
        coeffs = tuple(1 if t == idx else 0 for t in range(basis_size))
        if invertible(combine(coeffs)):
            return "yes"
    rng = np.random.default_rng(seed)
    for _ in range(budget):
        coeffs = tuple(int(c) for c in rng.integers(0, p, size=basis_size))
        if any(coeffs) and invertible(combine(coeffs)):
            return "yes"
    if p**basis_size <= enumerate_threshold:
        for coeffs in itertools.product(range(p), repeat=basis_size):
            if any(coeffs) and invertible(combine(coeffs)):
                return "yes"
        return "no"
    return "probably_not"
