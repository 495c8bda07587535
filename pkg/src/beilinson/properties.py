"""Equal-images / equal-kernels / constant-rank decisions, by two routes.

The definition route inspects the step matrices of the point operators
directly.  The homological route computes Hom- and Ext-dimensions against
the materialized projective-line family of arrow-cokernel modules via the
intertwiner solver, sharing nothing with the definition route beyond the
exact linear algebra substrate.  All "for every point" quantifiers run
exhaustively over the rational points of P^{r-1}(F_p); reports carry the
field so the gap to an algebraically closed base field stays visible.
"""

from __future__ import annotations

import json
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

from .linalg import rank
from .reps import (
    BeilinsonRep,
    ProjPoint,
    alpha_operator,
    hom_space,
    proj_points,
    step_power_rank,
    x_module,
)


@dataclass(frozen=True)
class PropertyReport:
    property: str  # "EIP" | "EKP" | "CR1".. | "CJT"
    verdict: bool
    p: int
    witness: tuple[ProjPoint, int] | None = None  # (failing point, level)
    ranks: tuple[tuple[tuple[int, ...], int], ...] | None = None  # (coords, rank)

    def __post_init__(self):
        assert self.verdict or self.witness is not None

    def to_json(self) -> str:
        d = {
            "property": self.property,
            "verdict": self.verdict,
            "field": {"p": self.p, "note": "quantifiers over rational points only"},
        }
        if self.witness is not None:
            point, level = self.witness
            d["witness"] = {"alpha": list(point.coords), "level": level}
        if self.ranks is not None:
            d["ranks"] = [{"alpha": list(c), "rank": rk} for c, rk in self.ranks]
        return json.dumps(d)


def alpha_map(fn, points, jobs: int = 1):
    """Apply fn over projective points, merging in enumeration order."""
    if jobs <= 1:
        return [fn(a) for a in points]
    with ThreadPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(fn, points))


# ---------------------------------------------------------------------------
# definition route

def is_eip_def(m: BeilinsonRep, jobs: int = 1) -> PropertyReport:
    """Every step of every point operator surjective."""

    def probe(alpha):
        for i, step in enumerate(alpha_operator(m, alpha)):
            if rank(step) < m.dims[i + 1]:
                return alpha, i
        return None

    for hit in alpha_map(probe, proj_points(m.p, m.r), jobs):
        if hit is not None:
            return PropertyReport("EIP", False, m.p, witness=hit)
    return PropertyReport("EIP", True, m.p)


def is_ekp_def(m: BeilinsonRep, jobs: int = 1) -> PropertyReport:
    """Every step of every point operator injective."""

    def probe(alpha):
        for i, step in enumerate(alpha_operator(m, alpha)):
            if rank(step) < m.dims[i]:
                return alpha, i
        return None

    for hit in alpha_map(probe, proj_points(m.p, m.r), jobs):
        if hit is not None:
            return PropertyReport("EKP", False, m.p, witness=hit)
    return PropertyReport("EKP", True, m.p)


# ---------------------------------------------------------------------------
# homological route

_x_cache: dict = {}


def cached_x_module(p: int, n: int, r: int, alpha: ProjPoint, i: int, j: int = 1) -> BeilinsonRep:
    key = (p, n, r, alpha.coords, i, j)
    if key not in _x_cache:
        _x_cache[key] = x_module(p, n, r, alpha, i, j)
    return _x_cache[key]


def hom_dim_x(m: BeilinsonRep, alpha: ProjPoint, i: int, j: int = 1) -> int:
    """dim Hom(X, m) against the materialized arrow-cokernel module."""
    return len(hom_space(cached_x_module(m.p, m.n, m.r, alpha, i, j), m))


def ext_dim_x(m: BeilinsonRep, alpha: ProjPoint, i: int, j: int = 1) -> int:
    """dim Ext^1(X, m) from the length-one projective resolution of X:
    the Euler identity dim Ext = dim m_{i+j} - dim m_i + dim Hom(X, m)."""
    return m.dims[i + j] - m.dims[i] + hom_dim_x(m, alpha, i, j)


def is_eip_hom(m: BeilinsonRep, jobs: int = 1) -> PropertyReport:
    """Ext^1 against the whole degree-one family vanishes at every point."""

    def probe(alpha):
        for i in range(m.n - 1):
            if ext_dim_x(m, alpha, i) != 0:
                return alpha, i
        return None

    for hit in alpha_map(probe, proj_points(m.p, m.r), jobs):
        if hit is not None:
            return PropertyReport("EIP", False, m.p, witness=hit)
    return PropertyReport("EIP", True, m.p)


def is_ekp_hom(m: BeilinsonRep, jobs: int = 1) -> PropertyReport:
    """Hom from the whole degree-one family vanishes at every point."""

    def probe(alpha):
        for i in range(m.n - 1):
            if hom_dim_x(m, alpha, i) != 0:
                return alpha, i
        return None

    for hit in alpha_map(probe, proj_points(m.p, m.r), jobs):
        if hit is not None:
            return PropertyReport("EKP", False, m.p, witness=hit)
    return PropertyReport("EKP", True, m.p)


# ---------------------------------------------------------------------------
# constant rank / constant Jordan type

def constant_rank(m: BeilinsonRep, j: int, jobs: int = 1,
                  with_profile: bool = False) -> PropertyReport:
    """Rank of the j-fold step composites equal across all points."""
    if not 1 <= j <= m.n - 1:
        raise ValueError(f"require 1 <= j <= n-1, got j={j}")
    points = proj_points(m.p, m.r)
    ranks = alpha_map(lambda a: step_power_rank(m, a, j), points, jobs)
    profile = tuple((a.coords, rk) for a, rk in zip(points, ranks)) if with_profile else None
    tag = f"CR{j}"
    for a, rk in zip(points, ranks):
        if rk != ranks[0]:
            return PropertyReport(tag, False, m.p, witness=(a, j), ranks=profile)
    return PropertyReport(tag, True, m.p, ranks=profile)


def constant_jordan_type(m: BeilinsonRep, jobs: int = 1) -> PropertyReport:
    """Conjunction of constant j-rank over j = 1 .. n-1."""
    for j in range(1, m.n):
        rep = constant_rank(m, j, jobs)
        if not rep.verdict:
            return PropertyReport("CJT", False, m.p, witness=rep.witness)
    return PropertyReport("CJT", True, m.p)


def no_maps_check(eip_member: BeilinsonRep, ekp_member: BeilinsonRep) -> bool:
    """No nonzero maps from the equal-images side to the equal-kernels side."""
    return len(hom_space(eip_member, ekp_member)) == 0
