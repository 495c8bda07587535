"""Quiver representation constructions and functorial operations."""

import itertools
import json

import pytest

from beilinson import monomials
from beilinson.linalg import FpMatrix, rank
from beilinson.reps import (
    BeilinsonRep,
    ConfigMismatch,
    ProjPoint,
    alpha_operator,
    direct_sum,
    dualize,
    hom_space,
    image_rep,
    injective,
    is_costandardly_graded,
    is_standardly_graded,
    m_module,
    proj_points,
    projective,
    rep_isomorphic,
    simple,
    support,
    validate,
    w_module,
    x_module,
)


def count_monomials(r, degree):
    """Independent oracle: count exponent vectors by brute force."""
    if degree < 0:
        return 0
    return sum(
        1
        for exps in itertools.product(range(degree + 1), repeat=r)
        if sum(exps) == degree
    )


class TestMonomials:
    @pytest.mark.parametrize("r", [1, 2, 3, 4])
    @pytest.mark.parametrize("degree", [0, 1, 2, 3, 4])
    def test_dim_degree_matches_enumeration(self, r, degree):
        assert monomials.dim_degree(r, degree) == count_monomials(r, degree)
        assert len(monomials.monomials(r, degree)) == count_monomials(r, degree)

    def test_graded_lex_order(self):
        ms = monomials.monomials(3, 2)
        assert ms[0] == (2, 0, 0)
        assert ms[-1] == (0, 0, 2)
        assert ms == tuple(sorted(ms, reverse=True))

    def test_multiplication_matrix_shapes(self):
        m = monomials.multiplication_matrix(5, 3, 1, 1)
        assert (m.rows, m.cols) == (monomials.dim_degree(3, 2),
                                    monomials.dim_degree(3, 1))

    def test_multiplication_commutes(self):
        a = monomials.multiplication_matrix(5, 3, 1, 1)
        b0 = monomials.multiplication_matrix(5, 3, 0, 1)
        a2 = monomials.multiplication_matrix(5, 3, 1, 2)
        b1 = monomials.multiplication_matrix(5, 3, 0, 2)
        assert a @ b1 == a2 @ b0


class TestProjPoints:
    def test_normalization(self):
        assert ProjPoint(5, (2, 4, 0)).coords == (1, 2, 0)
        assert ProjPoint(5, (0, 3, 3)).coords == (0, 1, 1)

    def test_zero_rejected(self):
        with pytest.raises(ValueError):
            ProjPoint(5, (0, 0, 0))

    @pytest.mark.parametrize("p,r", [(2, 2), (3, 2), (5, 2), (2, 3), (3, 3), (5, 3)])
    def test_point_count(self, p, r):
        assert len(proj_points(p, r)) == (p ** r - 1) // (p - 1)

    def test_points_distinct(self):
        pts = proj_points(5, 3)
        assert len(set(pts)) == len(pts)


class TestFamilies:
    def test_projective_dims(self):
        assert projective(5, 3, 3, 0).dims == (1, 3, 6)
        assert projective(5, 3, 3, 1).dims == (0, 1, 3)
        assert projective(5, 3, 3, 2).dims == (0, 0, 1)

    def test_injective_dual_of_projective(self):
        for i in range(3):
            assert injective(5, 3, 3, i) == dualize(projective(5, 3, 3, 2 - i))

    def test_simple_dims(self):
        assert simple(5, 3, 2, 1).dims == (0, 1, 0)

    def test_relations_hold_on_families(self):
        for rep in (
            projective(5, 3, 3, 0),
            injective(5, 3, 3, 2),
            m_module(5, 3, 3, 3, 2),
            w_module(5, 3, 3, 4, 3),
            x_module(5, 3, 3, ProjPoint(5, (1, 2, 0)), 0, 1),
        ):
            assert validate(rep) == []

    def test_m_module_dims(self):
        m = m_module(5, 3, 3, 3, 2)
        assert m.dims == (0, 3, 6)
        assert sum(m.dims) == sum(
            count_monomials(3, d) for d in (1, 2)
        )

    def test_m_module_precondition(self):
        with pytest.raises(ValueError):
            m_module(3, 4, 2, 4, 2)  # n > p
        with pytest.raises(ValueError):
            m_module(5, 3, 2, 2, 3)  # d > m

    def test_w_is_dual_of_m(self):
        assert w_module(5, 3, 3, 3, 2) == dualize(m_module(5, 3, 3, 3, 2))

    def test_x_module_dims(self):
        x = x_module(5, 3, 3, ProjPoint(5, (1, 0, 0)), 0, 1)
        assert x.dims == (1, 2, 3)
        x2 = x_module(5, 3, 3, ProjPoint(5, (1, 1, 1)), 1, 1)
        assert x2.dims == (0, 1, 2)

    def test_x_module_wrong_point_config(self):
        with pytest.raises(ConfigMismatch):
            x_module(5, 3, 3, ProjPoint(3, (1, 0, 0)), 0, 1)


class TestDualize:
    def test_involution(self):
        for rep in (projective(5, 3, 3, 0), m_module(5, 3, 3, 4, 3)):
            assert dualize(dualize(rep)) == rep

    def test_reverses_dims(self):
        m = m_module(5, 3, 3, 3, 2)
        assert dualize(m).dims == tuple(reversed(m.dims))

    def test_grading_swap(self):
        m = m_module(5, 3, 3, 3, 2)
        assert is_costandardly_graded(m)
        assert is_standardly_graded(dualize(m))


class TestHomSpace:
    def test_end_of_simple_is_one_dimensional(self):
        s = simple(5, 3, 3, 1)
        assert len(hom_space(s, s)) == 1

    def test_no_maps_between_disjoint_supports(self):
        assert hom_space(simple(5, 3, 3, 0), simple(5, 3, 3, 2)) == []

    def test_hom_elements_are_intertwiners(self):
        p1 = projective(5, 3, 3, 1)
        m = m_module(5, 3, 3, 3, 2)
        basis = hom_space(p1, m)
        assert len(basis) == m.dims[1] == 3
        for phi in basis:
            for v in range(2):
                for arrow in range(3):
                    assert (phi[v + 1] @ p1.maps[v][arrow]
                            == m.maps[v][arrow] @ phi[v])

    def test_duality_preserves_hom_dimension(self):
        x = m_module(5, 3, 3, 3, 2)
        y = projective(5, 3, 3, 1)
        assert len(hom_space(x, y)) == len(hom_space(dualize(y), dualize(x)))

    def test_projective_hom_counts_dimension(self):
        # Hom(P(i), M) has dimension dim M_i.
        m = m_module(5, 3, 3, 3, 2)
        for i in range(3):
            assert len(hom_space(projective(5, 3, 3, i), m)) == m.dims[i]


class TestStructure:
    def test_support(self):
        assert support(m_module(5, 3, 3, 3, 2)) == (1, 2)
        assert support(simple(5, 3, 3, 0)) == (0, 0)

    def test_direct_sum_dims(self):
        a = simple(5, 3, 3, 0)
        b = m_module(5, 3, 3, 3, 2)
        s = direct_sum(a, b)
        assert s.dims == (1, 3, 6)
        assert validate(s) == []

    def test_image_rep_of_endomorphism(self):
        m = m_module(5, 3, 3, 3, 2)
        basis = hom_space(m, m)
        img = image_rep(basis[0], m, m)
        assert validate(img) == []
        assert all(img.dims[v] <= m.dims[v] for v in range(3))

    def test_alpha_operator_shapes(self):
        m = m_module(5, 3, 3, 3, 2)
        steps = alpha_operator(m, ProjPoint(5, (1, 2, 3)))
        assert len(steps) == 2
        assert (steps[0].rows, steps[0].cols) == (3, 0)
        assert (steps[1].rows, steps[1].cols) == (6, 3)


class TestSerialization:
    def test_round_trip_bit_exact(self):
        for rep in (
            projective(5, 3, 3, 0),
            m_module(7, 3, 2, 3, 2),
            x_module(5, 2, 3, ProjPoint(5, (1, 4, 2)), 0, 1),
        ):
            assert BeilinsonRep.from_json(rep.to_json()) == rep

    def test_schema_fields(self):
        doc = json.loads(m_module(5, 3, 3, 3, 2).to_json())
        assert set(doc) == {"p", "n", "r", "dims", "maps"}
        assert doc["dims"] == [0, 3, 6]


class TestRepIsomorphic:
    def test_self_iso(self):
        m = m_module(5, 2, 3, 3, 2)
        assert rep_isomorphic(m, m) == "yes"

    def test_dim_mismatch_is_certified_no(self):
        assert rep_isomorphic(simple(5, 3, 3, 0), simple(5, 3, 3, 1)) == "no"

    def test_conjugated_rep_recognized(self):
        m = m_module(3, 2, 2, 3, 2)
        assert m.dims == (2, 3)
        g0 = FpMatrix.from_rows(3, [[1, 1], [0, 2]])
        g1 = FpMatrix.from_rows(3, [[2, 0, 0], [0, 1, 1], [0, 0, 1]])
        from beilinson.linalg import solve_matrix
        g0_inv = solve_matrix(g0, FpMatrix.identity(3, 2))
        conj = BeilinsonRep(
            3, 2, 2, m.dims,
            (tuple(g1 @ a @ g0_inv for a in m.maps[0]),),
        )
        assert validate(conj) == []
        assert rep_isomorphic(m, conj) == "yes"
