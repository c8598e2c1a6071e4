import json
from itertools import combinations

import pytest
from hypothesis import given, strategies as st

from dowkerlab.complex import (
    complex_from_json,
    complex_to_dot,
    complex_to_json,
    compose_maps,
    cone_point,
    fiber,
    from_facets,
    full_simplex,
    identity_map,
    make_simplicial_map,
    nerve,
    simplex,
)
from dowkerlab.dowker import dowker_complex, pi, rectangle_complex
from dowkerlab.errors import EmptyCover, NotASimplex, NotSimplicial, UnknownVertex

TRIANGLE_BOUNDARY = from_facets("abc", [("a", "b"), ("b", "c"), ("a", "c")])


def all_simplices_brute(K):
    """Every non-empty subset of every facet."""
    out = set()
    for f in K.facets:
        for r in range(1, len(f) + 1):
            out.update(combinations(f, r))
    return out


def test_simplex_canonical():
    assert simplex(["c", "a", "b"]) == ("a", "b", "c")
    with pytest.raises(ValueError):
        simplex([])
    with pytest.raises(ValueError):
        simplex(["a", "a"])


def test_from_facets_absorbs():
    K = from_facets("abc", [("a", "b"), ("b",), ("a", "b", "c")])
    assert K.facets == (("a", "b", "c"),)


def test_from_facets_empty():
    K = from_facets([], [])
    assert K.facets == () and K.dimension == -1 and K.euler_characteristic() == 0


def test_from_facets_incomparable_kept():
    K = from_facets("abcd", [("b", "c", "d"), ("a", "b"), ("a", "c")])
    assert set(K.facets) == {("b", "c", "d"), ("a", "b"), ("a", "c")}


def test_from_facets_unknown_vertex():
    with pytest.raises(UnknownVertex):
        from_facets("ab", [("a", "z")])


facet_lists = st.lists(
    st.sets(st.sampled_from("abcdef"), min_size=1, max_size=4), max_size=6
)


@given(facet_lists)
def test_from_facets_idempotent(cands):
    K = from_facets("abcdef", cands)
    assert from_facets(K.vertex_set, K.facets) == K
    # facets pairwise incomparable
    for f, g in combinations(K.facets, 2):
        assert not set(f) <= set(g) and not set(g) <= set(f)


@given(facet_lists)
def test_contains_is_downward_closed(cands):
    K = from_facets("abcdef", cands)
    simplices = all_simplices_brute(K)
    for s in simplices:
        assert K.contains(s)
        for r in range(1, len(s)):
            for t in combinations(s, r):
                assert K.contains(t)
    for r in range(1, 4):
        for t in combinations("abcdef", r):
            assert K.contains(t) == (t in simplices)


def test_contains_examples(toy):
    assert full_simplex("abc").contains({"a", "c"})
    assert not from_facets("abc", [("a", "b"), ("b", "c")]).contains({"a", "c"})
    assert not dowker_complex(toy).contains({"a", "b", "c"})


def test_k_simplices():
    assert full_simplex("abc").k_simplices(1) == [("a", "b"), ("a", "c"), ("b", "c")]
    assert from_facets([], []).k_simplices(2) == []


def test_k_simplices_toy(toy):
    D = dowker_complex(toy)
    assert D.k_simplices(1) == [("a", "b"), ("a", "c"), ("b", "c"), ("b", "d"), ("c", "d")]


def test_euler_characteristic(toy):
    assert full_simplex("abc").euler_characteristic() == 1
    assert dowker_complex(toy).euler_characteristic() == 0
    assert rectangle_complex(toy).euler_characteristic() == 0


@given(facet_lists)
def test_euler_matches_brute_count(cands):
    K = from_facets("abcdef", cands)
    brute = sum((-1) ** (len(s) - 1) for s in all_simplices_brute(K))
    assert K.euler_characteristic() == brute


def test_isolated_vertices_not_simplices():
    K = from_facets("abz", [("a", "b")])
    assert "z" in K.vertex_set and "z" not in K.support
    assert not K.contains({"z"})
    assert K.k_simplices(0) == [("a",), ("b",)]


def test_simplicial_map_identity_and_constant():
    K = from_facets("abcd", [("a", "b", "c"), ("c", "d")])
    make_simplicial_map(K, K, {v: v for v in K.vertex_set})
    point = full_simplex(["p"])
    make_simplicial_map(K, point, {v: "p" for v in K.vertex_set})


def test_pi_is_simplicial(toy):
    E, D = rectangle_complex(toy), dowker_complex(toy)
    from dowkerlab.dowker import parse_pair_label

    make_simplicial_map(E, D, {v: parse_pair_label(v)[0] for v in E.vertex_set})


def test_not_simplicial_witness():
    K = full_simplex("ab")
    L = from_facets("pq", [("p",), ("q",)])
    with pytest.raises(NotSimplicial) as info:
        make_simplicial_map(K, L, {"a": "p", "b": "q"})
    assert info.value.facet == ("a", "b")


def test_map_unknown_vertex():
    K = full_simplex("ab")
    with pytest.raises(UnknownVertex):
        make_simplicial_map(K, K, {"a": "a"})
    with pytest.raises(UnknownVertex):
        make_simplicial_map(K, K, {"a": "a", "b": "zz"})


def test_fiber_identity_is_closure():
    K = from_facets("abcd", [("a", "b", "c"), ("c", "d")])
    F = identity_map(K)
    assert fiber(F, ("a", "c")).facets == (("a", "c"),)
    assert fiber(F, ("c",)).facets == (("c",),)


def test_fiber_toy_path(toy):
    fib = fiber(pi(toy), ("a", "b"))
    assert set(fib.facets) == {("(a,2)", "(a,4)"), ("(a,2)", "(b,2)"), ("(b,1)", "(b,2)")}


def test_fiber_toy_against_brute_force(toy):
    E = rectangle_complex(toy)
    F = pi(toy, E)
    brute = {
        t
        for t in all_simplices_brute(E)
        if set(t) <= {"(a,2)", "(a,4)", "(b,1)", "(b,2)"}
    }
    assert all_simplices_brute(fiber(F, ("a", "b"))) == brute


def test_fiber_constant_map_is_everything():
    K = from_facets("abcd", [("a", "b", "c"), ("c", "d")])
    F = make_simplicial_map(K, full_simplex(["v"]), {v: "v" for v in K.vertex_set})
    assert fiber(F, ("v",)) == K


def test_fiber_requires_simplex(toy):
    with pytest.raises(NotASimplex):
        fiber(pi(toy), ("a", "d"))


@given(facet_lists, st.sets(st.sampled_from("abcdef"), min_size=1, max_size=3))
def test_fiber_property(cands, sigma):
    K = from_facets("abcdef", cands)
    # fold vertices pairwise onto a smaller alphabet
    fold = {"a": "a", "b": "a", "c": "c", "d": "c", "e": "e", "f": "e"}
    L = from_facets("ace", [{fold[v] for v in f} for f in K.facets])
    F = make_simplicial_map(K, L, fold)
    target_sigma = {fold[v] for v in sigma}
    if not L.contains(target_sigma):
        return
    fib = fiber(F, target_sigma)
    for phi in fib.facets:
        assert set(F.image(phi)) <= target_sigma
    for t in all_simplices_brute(K):
        if set(F.image(t)) <= target_sigma:
            assert fib.contains(t)


def test_compose_maps():
    K = full_simplex("ab")
    F = identity_map(K)
    assert compose_maps(F, F).vertex_map == F.vertex_map


def test_nerve_single_and_disjoint():
    assert nerve([full_simplex("ab")]).facets == (("0",),)
    N = nerve([full_simplex("ab"), full_simplex("cd")])
    assert N.facets == (("0",), ("1",))


def test_nerve_toy_cover(toy):
    E = rectangle_complex(toy)
    cover = [
        from_facets(E.vertex_set, [("(a,2)", "(a,4)")]),
        from_facets(E.vertex_set, [("(b,1)", "(b,2)")]),
        from_facets(E.vertex_set, [("(a,2)", "(b,2)")]),
    ]
    N = nerve(cover)
    assert set(N.facets) == {("0", "2"), ("1", "2")}
    # the middle of the path lies in both facets
    assert cone_point(N) == "2"


def test_nerve_pairwise_intersecting_simplices_is_full():
    cover = [full_simplex(s) for s in ("abc", "cde", "ace")]
    N = nerve(cover)
    assert N.facets == (("0", "1", "2"),)


def test_nerve_intersection_is_simplexwise():
    # two triangle boundaries sharing only vertex a
    K1 = from_facets("abcde", [("a", "b"), ("b", "c"), ("a", "c")])
    K2 = from_facets("abcde", [("a", "d"), ("d", "e"), ("a", "e")])
    K3 = from_facets("abcde", [("e",)])
    N = nerve([K1, K2, K3])
    assert set(N.facets) == {("0", "1"), ("1", "2")}


def test_nerve_errors():
    with pytest.raises(EmptyCover):
        nerve([])
    with pytest.raises(EmptyCover):
        nerve([from_facets("a", [])])


def test_cone_point():
    assert cone_point(full_simplex("cab")) == "a"
    assert cone_point(TRIANGLE_BOUNDARY) is None
    assert cone_point(from_facets([], [])) is None


@given(facet_lists)
def test_cone_point_property(cands):
    K = from_facets("abcdef", cands)
    v = cone_point(K)
    if v is not None:
        for s in all_simplices_brute(K):
            assert K.contains(set(s) | {v})


def test_json_roundtrip(toy):
    K = dowker_complex(toy)
    text = complex_to_json(K)
    assert json.loads(text) == {
        "vertices": ["a", "b", "c", "d"],
        "facets": [["a", "b"], ["a", "c"], ["b", "c", "d"]],
    }
    assert complex_from_json(text) == K


def test_dot_export(toy):
    dot = complex_to_dot(dowker_complex(toy))
    assert dot.count(" -- ") == 5
    assert dot.count(";") - dot.count(" -- ") == 4
    dotE = complex_to_dot(rectangle_complex(toy))
    assert dotE.count(" -- ") == 9
    assert complex_to_dot(from_facets([], [])) == 'graph "K" {\n}\n'
