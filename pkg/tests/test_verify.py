from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st
from sympy import Matrix as SMatrix

from dowkerlab.complex import compose_maps, from_facets, full_simplex, make_simplicial_map
from dowkerlab.dowker import dowker_complex, pi, pi_hat, rectangle_complex, swap_iso
from dowkerlab.errors import NotASimplex, NotInvertible
from dowkerlab.homology import (
    GF2,
    QQ,
    Matrix,
    check_fiber_hypothesis,
    check_functorial_dowker,
    chain_complex,
    cone_homology,
    homology,
    homology_map_matrix,
    induced_chain_map,
    is_quasi_isomorphism,
    psi_star,
)
from dowkerlab.relation import make_relation, random_morphism, transpose

from .conftest import relations

TRIANGLE_BOUNDARY = from_facets("abc", [("a", "b"), ("b", "c"), ("a", "c")])
HEXAGON = from_facets("012345", [(str(i), str((i + 1) % 6)) for i in range(5)] + [("0", "5")])
facet_lists = st.lists(st.sets(st.sampled_from("abcdef"), min_size=1, max_size=4), max_size=7)
FOLD = {"a": "a", "b": "a", "c": "c", "d": "c", "e": "e", "f": "e"}


def fold_map(K):
    L = from_facets("ace", [{FOLD[v] for v in f} for f in K.facets])
    return make_simplicial_map(K, L, FOLD)


def oracle_rank_on_homology(F, k):
    """rank of H_k(F) over Q as rank[f Z | B] - rank B, all via sympy."""
    Cs, Ct = chain_complex(F.source), chain_complex(F.target)
    if Cs.rank(k) == 0 or Ct.rank(k) == 0:
        return 0
    d = Cs.boundary(k)
    Z = SMatrix(d.to_dense()).nullspace() if d.nrows else [
        SMatrix.eye(Cs.rank(k))[:, j] for j in range(Cs.rank(k))
    ]
    f = SMatrix(induced_chain_map(F).at(k).to_dense())
    B = Ct.boundary(k + 1)
    Bm = SMatrix(B.to_dense()) if B.ncols else SMatrix.zeros(Ct.rank(k), 0)
    images = SMatrix.hstack(*[f * z for z in Z]) if Z else SMatrix.zeros(Ct.rank(k), 0)
    return SMatrix.hstack(images, Bm).rank() - Bm.rank()


def test_matrix_basics():
    I = Matrix.identity(2)
    A = Matrix(2, 2, ((Fraction(1), Fraction(2)), (Fraction(3), Fraction(4))))
    assert A @ I == A and A @ A.inverse() == I
    with pytest.raises(NotInvertible):
        Matrix(2, 2, ((Fraction(1), Fraction(2)), (Fraction(2), Fraction(4)))).inverse()
    with pytest.raises(NotInvertible):
        Matrix(1, 2, ((Fraction(1), Fraction(0)),)).inverse()
    assert Matrix(0, 0, ()).inverse() == Matrix(0, 0, ())
    assert Matrix(0, 3, ()).shape == (0, 3)


def test_matrix_over_gf2():
    A = Matrix(2, 2, ((1, 1), (0, 1)), GF2)
    assert A @ A == Matrix.identity(2, GF2)
    assert A.inverse() == A


def test_quasi_iso_examples():
    point = full_simplex(["a"])
    incl = make_simplicial_map(point, TRIANGLE_BOUNDARY, {"a": "a"})
    assert not is_quasi_isomorphism(incl)
    K = from_facets("abcd", [("a", "b", "c"), ("c", "d")])
    assert is_quasi_isomorphism(make_simplicial_map(K, full_simplex(["p"]), {v: "p" for v in "abcd"}))
    assert is_quasi_isomorphism(make_simplicial_map(K, K, {v: v for v in "abcd"}))


def test_degree_two_wrap():
    F = make_simplicial_map(HEXAGON, TRIANGLE_BOUNDARY, {str(i): "abc"[i % 3] for i in range(6)})
    assert not is_quasi_isomorphism(F)
    assert cone_homology(F).signature() == ((1, 0, (2,)),)
    assert homology_map_matrix(F, 1, QQ).rows in (((2,),), ((-2,),))
    assert homology_map_matrix(F, 1, GF2).rows == ((0,),)


def test_toy_quasi_isomorphisms(toy):
    assert is_quasi_isomorphism(pi(toy))
    assert is_quasi_isomorphism(pi_hat(toy))
    assert is_quasi_isomorphism(swap_iso(toy))


@settings(max_examples=40)
@given(relations(max_x=4, max_y=4))
def test_projections_quasi_iso(R):
    assert is_quasi_isomorphism(pi(R))
    assert is_quasi_isomorphism(pi_hat(R))


def test_homology_map_identity_and_constant():
    K = TRIANGLE_BOUNDARY
    idK = make_simplicial_map(K, K, {v: v for v in "abc"})
    assert homology_map_matrix(idK, 1) == Matrix.identity(1)
    assert homology_map_matrix(idK, 0) == Matrix.identity(1)
    const = make_simplicial_map(K, full_simplex(["p"]), {v: "p" for v in "abc"})
    assert homology_map_matrix(const, 1).shape == (0, 1)
    assert homology_map_matrix(const, 0).rows == ((1,),)


@settings(max_examples=40)
@given(facet_lists, st.integers(0, 2))
def test_homology_map_rank_matches_oracle(cands, k):
    F = fold_map(from_facets("abcdef", cands))
    M = homology_map_matrix(F, k, QQ)
    rank = SMatrix(M.rows).rank() if M.nrows and M.ncols else 0
    assert rank == oracle_rank_on_homology(F, k)


@settings(max_examples=40)
@given(facet_lists, st.integers(0, 2), st.sampled_from([QQ, GF2]))
def test_homology_is_functorial(cands, k, field):
    F = fold_map(from_facets("abcdef", cands))
    L = F.target
    squash = {"a": "a", "c": "a", "e": "e"}
    M = from_facets("ae", [{squash[v] for v in f} for f in L.facets])
    G = make_simplicial_map(L, M, squash)
    assert homology_map_matrix(compose_maps(G, F), k, field) == (
        homology_map_matrix(G, k, field) @ homology_map_matrix(F, k, field)
    )


def test_homology_functorial_through_collapse():
    # hexagon -> triangle boundary -> point
    F = make_simplicial_map(HEXAGON, TRIANGLE_BOUNDARY, {str(i): "abc"[i % 3] for i in range(6)})
    G = make_simplicial_map(TRIANGLE_BOUNDARY, full_simplex(["p"]), {v: "p" for v in "abc"})
    for k in (0, 1):
        assert homology_map_matrix(compose_maps(G, F), k) == (
            homology_map_matrix(G, k) @ homology_map_matrix(F, k)
        )


def test_psi_star_toy(toy):
    P1 = psi_star(toy, 1)
    assert P1.shape == (1, 1) and P1.is_invertible()
    assert psi_star(toy, 0) == Matrix.identity(1)
    assert psi_star(toy, 2).shape == (0, 0)
    assert psi_star(toy, 1, GF2).rows == ((1,),)


def test_psi_star_full_relation():
    full = make_relation("ab", "12", [(x, y) for x in "ab" for y in "12"])
    assert psi_star(full, 1).shape == (0, 0)
    assert psi_star(full, 0) == Matrix.identity(1)


def test_psi_star_disconnected():
    R = make_relation("ab", "12", [("a", "1"), ("b", "2")])
    P = psi_star(R, 0)
    assert P.shape == (2, 2) and P.is_invertible()


@settings(max_examples=30)
@given(relations(max_x=4, max_y=4), st.integers(0, 2), st.sampled_from([QQ, GF2]))
def test_psi_star_is_isomorphism(R, k, field):
    P = psi_star(R, k, field)
    assert P.nrows == P.ncols == homology(dowker_complex(R), coeff=field).betti(k)
    assert P.is_invertible()
    # the transpose construction inverts it
    assert psi_star(transpose(R), k, field) @ P == Matrix.identity(P.nrows, field)


def test_functorial_dowker_random():
    for seed in range(15):
        f = random_morphism(seed)
        for k in (0, 1):
            assert check_functorial_dowker(f, k, QQ)
            assert check_functorial_dowker(f, k, GF2)


def test_fiber_report_toy_edge(toy):
    rep = check_fiber_hypothesis(toy, ("a", "b"))
    assert rep.passed
    assert rep.witnesses == {"2"}
    assert rep.inverse_image == ("(a,2)", "(b,2)")
    assert rep.cover == [("a",), ("b",), ("a", "b")]
    assert set(rep.nerve.facets) == {("0", "2"), ("1", "2")}
    assert rep.sigma_vertex == "2" and rep.nerve_cone_point == "2"
    assert set(rep.fiber.facets) == {("(a,2)", "(a,4)"), ("(a,2)", "(b,2)"), ("(b,1)", "(b,2)")}


def test_fiber_report_toy_vertex(toy):
    rep = check_fiber_hypothesis(toy, ("d",))
    assert rep.passed
    assert rep.fiber.facets == (("(d,1)", "(d,3)"),)
    assert rep.witnesses == {"1", "3"}


def test_fiber_report_full_relation():
    full = make_relation("abc", "12", [(x, y) for x in "abc" for y in "12"])
    rep = check_fiber_hypothesis(full, ("a", "b", "c"))
    assert rep.passed
    # one facet per x: the τ containing it, always including σ itself ("6")
    assert rep.nerve.facets == (("0", "3", "4", "6"), ("1", "3", "5", "6"), ("2", "4", "5", "6"))
    assert rep.nerve_cone_point == "6"


def test_fiber_report_rejects_non_simplex(toy):
    with pytest.raises(NotASimplex):
        check_fiber_hypothesis(toy, ("a", "d"))


@settings(max_examples=30)
@given(relations(max_x=4, max_y=4))
def test_fiber_hypothesis_random(R):
    E = rectangle_complex(R)
    for s in dowker_complex(R).simplices():
        assert check_fiber_hypothesis(R, s, E).passed


def test_mod2_image_cancels():
    # the circle folds onto an edge, covering it twice: zero mod 2
    F = make_simplicial_map(
        TRIANGLE_BOUNDARY, from_facets("ac", [("a", "c")]), {"a": "a", "b": "a", "c": "c"}
    )
    assert homology_map_matrix(F, 1, GF2).shape == (0, 1)
    assert homology_map_matrix(F, 1, QQ).shape == (0, 1)
