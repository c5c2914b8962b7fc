"""The decomposition operations: diagrams, special cases, theorems, structure."""

import random
from collections import Counter
from itertools import combinations

import pytest

from _helpers import random_complex
from polyco.decomp import (
    bbcg_cone_splitting,
    bbcg_wedge_splitting,
    coproduct_diagram,
    disjoint_union_decomp,
    evaluate_special,
    hilton_milnor,
    join_vertex_reduce,
    loop_decompose,
    loop_decompose_contractible,
    loop_decompose_wedge,
    porter_fiber,
    porter_loop_decomp,
    pullback_square,
    smash_coproduct,
)
from polyco.liealg import restricted_support
from polyco.scomplex import build, disjoint_union, join
from polyco.series import PoincareSeries, series_of
from polyco.spacexpr import (
    CP_INFINITY,
    POINT,
    Atom,
    Loop,
    PairAssignment,
    Product,
    Smash,
    Sphere,
    Susp,
    Wedge,
    conn,
    expr_equal,
    normalize,
    render,
    two_points,
)

S = Sphere
X1, X2, X3 = Atom("X1", 1), Atom("X2", 1), Atom("X3", 1)
A1, A2 = Atom("A1", 1), Atom("A2", 1)


def simplex(m):
    return build(m, [list(range(1, m + 1))])


def square():
    return build(4, [[1, 2], [2, 3], [3, 4], [1, 4]])


def const(spaces):
    return PairAssignment.constant_maps(spaces)


# ---------------------------------------------------------------------------
# diagrams and special cases
# ---------------------------------------------------------------------------


def test_coproduct_diagram_two_points():
    d = coproduct_diagram(two_points(), const([X1, X2]))
    assert d.objects[()] == POINT
    assert d.objects[(1,)] == X1
    assert d.objects[(2,)] == X2
    assert d.arrows[((1,), ())] == (1,)


def test_coproduct_diagram_simplex_initial_object():
    d = coproduct_diagram(simplex(2), const([X1, X2]))
    assert d.objects[(1, 2)] == Wedge((X1, X2))


def test_coproduct_diagram_path_fibrations_keeps_atoms():
    pairs = PairAssignment.path_fibrations([X1, X2])
    d = coproduct_diagram(two_points(), pairs)
    assert d.objects[()] == Wedge((X1, X2))
    left = d.objects[(1,)]
    assert isinstance(left, Wedge)
    assert left.children[0].contractible and left.children[1] == X2


def test_coproduct_diagram_arity_check():
    with pytest.raises(ValueError):
        coproduct_diagram(two_points(), const([X1]))


def test_evaluate_special_product_case():
    K = build(3, [[1], [2], [3]])
    assert evaluate_special(K, const([X1, X2, X3])) == Product((X1, X2, X3))


def test_evaluate_special_wedge_case():
    out = evaluate_special(simplex(3), const([X1, X2, X3]))
    assert out == Wedge((X1, X2, X3))
    # any pairs: the initial object decides
    pairs = PairAssignment.of([(X1, A1), (X2, A2), (X3, POINT)])
    assert evaluate_special(simplex(3), pairs) == Wedge((X1, X2, X3))


def test_evaluate_special_cojoin():
    pairs = PairAssignment.path_fibrations([X1, X2])
    out = evaluate_special(two_points(), pairs)
    assert out == Loop(Susp(Smash((Loop(X1), Loop(X2)))))


def test_evaluate_special_not_special():
    assert evaluate_special(square(), const([X1, X2, X1, X2])) is None


# ---------------------------------------------------------------------------
# porter and hilton-milnor
# ---------------------------------------------------------------------------


def test_porter_fiber_m2():
    fib = porter_fiber([X1, X2])
    assert fib == Susp(Smash((Loop(X1), Loop(X2))))


def test_porter_fiber_m3_multiplicities():
    fib = porter_fiber([X1, X2, X3])
    assert isinstance(fib, Wedge)
    counts = Counter(fib.children)
    pairs = [
        normalize(Susp(Smash((Loop(a), Loop(b)))))
        for a, b in combinations([X1, X2, X3], 2)
    ]
    triple = normalize(Susp(Smash((Loop(X1), Loop(X2), Loop(X3)))))
    assert all(counts[p] == 1 for p in pairs)
    assert counts[triple] == 2
    assert sum(counts.values()) == 5


def test_porter_fiber_m1_is_point():
    assert porter_fiber([X1]) == POINT


def test_porter_fiber_connectivity_error_names_vertex():
    with pytest.raises(ValueError, match="vertex 2"):
        porter_fiber([X1, S(1)])


def test_porter_loop_decomp():
    dec = porter_loop_decomp([S(3), S(3)])
    assert [render(f.expr) for f in dec.factors] == [
        "ΩS^3",
        "ΩS^3",
        "ΩΣ(ΩS^3^∧2)",
    ]
    assert porter_loop_decomp([X1]).factor_multiset() == Counter({Loop(X1): 1})
    # a point summand is absorbed
    dec = porter_loop_decomp([X1, POINT])
    assert dec.factor_multiset() == Counter({Loop(X1): 1})


def test_hilton_milnor_examples():
    dec = hilton_milnor([X1], 5)
    assert dec.factor_multiset() == Counter({Loop(Susp(X1)): 1})
    assert dec.truncation is None  # a single generator is a finite basis

    dec = hilton_milnor([X1, X2], 2)
    assert [render(f.expr) for f in dec.factors] == [
        "ΩΣX1",
        "ΩΣX2",
        "ΩΣ(X1 ∧ X2)",
    ]
    dec3 = hilton_milnor([X1, X2], 3)
    extra = [render(f.expr) for f in dec3.factors[3:]]
    assert extra == ["ΩΣ(X1 ∧ X2^∧2)", "ΩΣ(X1^∧2 ∧ X2)"]
    assert dec3.truncation == 3


def test_hilton_milnor_rejects_bad_weight():
    with pytest.raises(ValueError):
        hilton_milnor([X1], 0)


# ---------------------------------------------------------------------------
# smash coproduct diagrams
# ---------------------------------------------------------------------------


def test_smash_coproduct_absorbs_with_point_codomains():
    d = smash_coproduct(two_points(), const([X1, X2]), (1, 1))
    assert all(obj == POINT for obj in d.objects.values())


def test_smash_coproduct_path_fibrations():
    pairs = PairAssignment.path_fibrations([A1, A2])
    d = smash_coproduct(two_points(), pairs, (1, 1))
    assert d.objects[()] == Susp(Smash((Loop(A1), Loop(A2))))
    assert d.objects[(1,)] == POINT
    assert d.objects[(2,)] == POINT


def test_smash_coproduct_weights():
    K = build(2, [[1]])
    pairs = PairAssignment.of([(X1, A1), (X2, A2)])
    d = smash_coproduct(K, pairs, (2, 0))
    assert d.objects[(1,)] == Susp(Smash((Loop(X1), Loop(X1))))
    assert d.objects[()] == Susp(Smash((Loop(A1), Loop(A1))))
    with pytest.raises(ValueError):
        smash_coproduct(K, pairs, (0, 0))


# ---------------------------------------------------------------------------
# the general decomposition
# ---------------------------------------------------------------------------


def test_loop_decompose_two_points_constant():
    dec = loop_decompose(two_points(), const([X1, X2]), 3)
    assert dec.factor_multiset() == Counter({Loop(X1): 1, Loop(X2): 1})


def test_loop_decompose_edge_matches_porter():
    dec = loop_decompose(build(2, [[1, 2]]), const([X1, X2]), 1)
    assert dec.factor_multiset() == Counter(
        {Loop(X1): 1, Loop(X2): 1, Loop(Susp(Smash((Loop(X1), Loop(X2))))): 1}
    )


def test_loop_decompose_cojoin():
    pairs = PairAssignment.path_fibrations([A1, A2])
    dec = loop_decompose(two_points(), pairs, 1)
    assert len(dec.factors) == 1
    assert dec.factors[0].expr == Loop(Susp(Smash((Loop(A1), Loop(A2)))), 2)


def test_loop_decompose_mixed_pair_stays_symbolic():
    pairs = PairAssignment.of([(POINT, A1), (Atom("Y", 1), POINT)])
    dec = loop_decompose(two_points(), pairs, 1)
    brackets = dec.bracket_factors()
    assert len(brackets) == 1
    f = brackets[0]
    assert isinstance(f.expr, Loop) and isinstance(f.expr.child, Atom)
    assert f.diagram is not None
    assert f.diagram.objects[(2,)] == Susp(Smash((Loop(A1), Loop(Atom("Y", 1)))))


def test_loop_decompose_connectivity_validation():
    with pytest.raises(ValueError, match="vertex 1"):
        loop_decompose(two_points(), const([S(1), X2]), 1)


def test_loop_decompose_ghost_vertex_uses_codomain():
    # a vertex outside the complex contributes loops of its codomain
    K = build(2, [[1]])
    pairs = PairAssignment.of([(X1, POINT), (X2, A2)])
    dec = loop_decompose(K, pairs, 1)
    base = {f.provenance: f.expr for f in dec.factors if isinstance(f.provenance, int)}
    assert base[1] == Loop(X1)
    assert base[2] == Loop(A2)


# ---------------------------------------------------------------------------
# the wedge (all codomains a point) decomposition
# ---------------------------------------------------------------------------


def test_wedge_decomp_square_with_cp_infinity():
    dec = loop_decompose_wedge(square(), [CP_INFINITY] * 4, 1)
    assert dec.factor_multiset() == Counter({S(1): 4, Loop(S(3)): 4})
    # higher weight adds nothing: each edge alphabet has a single letter
    dec5 = loop_decompose_wedge(square(), [CP_INFINITY] * 4, 5)
    assert dec5.factor_multiset() == dec.factor_multiset()
    assert dec.truncation is None


def test_wedge_decomp_discrete():
    for m in range(1, 7):
        K = build(m, [[i] for i in range(1, m + 1)])
        spaces = [Atom(f"X{i}", 1) for i in range(1, m + 1)]
        dec = loop_decompose_wedge(K, spaces, 4)
        assert len(dec.factors) == m
        assert all(isinstance(f.provenance, int) for f in dec.factors)


def test_wedge_decomp_one_dimensional():
    K = build(3, [[1, 2], [2, 3]])
    dec = loop_decompose_wedge(K, [X1, X2, X3], 3)
    exprs = [render(f.expr) for f in dec.factors]
    assert exprs == [
        "ΩX1",
        "ΩX2",
        "ΩX3",
        "ΩΣ(ΩX1 ∧ ΩX2)",
        "ΩΣ(ΩX2 ∧ ΩX3)",
    ]


def test_wedge_decomp_dedup_across_overlapping_faces():
    # two triangles sharing the edge {2,3}: brackets supported on the shared
    # edge appear exactly once
    K = build(4, [[1, 2, 3], [2, 3, 4]])
    dec = loop_decompose_wedge(K, [X1, X2, X3, Atom("X4", 1)], 2)
    shared = [
        f
        for f in dec.bracket_factors()
        if all(g.subset == (2, 3) for g in f.provenance.leaves())
    ]
    assert len(shared) == 1


def test_wedge_decomp_monotone_in_weight():
    K = simplex(3)
    spaces = [X1, X2, X3]
    prev = loop_decompose_wedge(K, spaces, 1)
    for W in range(2, 5):
        cur = loop_decompose_wedge(K, spaces, W)
        assert cur.factors[: len(prev.factors)] == prev.factors
        prev = cur


def test_wedge_decomp_truncation_soundness():
    dec = loop_decompose_wedge(simplex(3), [S(2), S(3), S(2)], 3)
    for f in dec.bracket_factors():
        assert conn(f.expr) >= f.provenance.weight


# ---------------------------------------------------------------------------
# the contractible-domain decomposition
# ---------------------------------------------------------------------------


def path_pairs(codomains):
    return PairAssignment.path_fibrations(codomains)


def test_contractible_simplex_has_no_factors():
    dec = loop_decompose_contractible(simplex(3), path_pairs([A1, A2, Atom("A3", 1)]), 3)
    assert dec.factors == ()


def test_contractible_two_points_cojoin():
    dec = loop_decompose_contractible(two_points(), path_pairs([A1, A2]), 1)
    assert len(dec.factors) == 1
    f = dec.factors[0]
    assert f.expr == Loop(Susp(Smash((Loop(A1), Loop(A2)))), 2)
    # structurally equal to looping the special-case evaluation
    special = evaluate_special(two_points(), path_pairs([A1, A2]))
    assert expr_equal(f.expr, Loop(special))


def test_contractible_missing_face_filter():
    K = build(3, [[1, 2], [1, 3], [2, 3]])
    dec = loop_decompose_contractible(K, path_pairs([A1, A2, Atom("A3", 1)]), 3)
    assert len(dec.factors) > 0
    for f in dec.factors:
        assert restricted_support(f.provenance, [1, 2, 3]) == (1, 2, 3)


def test_contractible_rejects_solid_domain():
    pairs = PairAssignment.of([(X1, A1), (POINT, A2)])
    with pytest.raises(ValueError, match="vertex 1"):
        loop_decompose_contractible(two_points(), pairs, 1)


def test_contractible_uncertified_realization_stays_symbolic():
    # the square is not certified, so the mapping space survives unreduced
    pairs = path_pairs([A1, A2, Atom("A3", 1), Atom("A4", 1)])
    dec = loop_decompose_contractible(square(), pairs, 1)
    from polyco.spacexpr import MapFromSusp

    symbolic = [f for f in dec.factors if isinstance(f.expr, Loop)
                and isinstance(f.expr.child, MapFromSusp)]
    assert symbolic, dec.render()


# ---------------------------------------------------------------------------
# suspension splittings
# ---------------------------------------------------------------------------


def test_bbcg_wedge_splitting():
    out = bbcg_wedge_splitting(two_points(), [X1, X2])
    assert out == [((1,), Susp(X1)), ((2,), Susp(X2))]
    out = bbcg_wedge_splitting(build(2, [[1, 2]]), [X1, X2])
    assert [(f, render(e)) for f, e in out] == [
        ((1,), "ΣX1"),
        ((2,), "ΣX2"),
        ((1, 2), "Σ(X1 ∧ X2)"),
    ]


def test_bbcg_cone_splitting_moment_angle_sphere():
    out = bbcg_cone_splitting(two_points(), [S(1), S(1)])
    assert out == [((1, 2), S(3))]


def test_bbcg_cone_splitting_boundary_triangle():
    out = bbcg_cone_splitting(build(3, [[1, 2], [1, 3], [2, 3]]), [S(1)] * 3)
    # |K| = S^1, so the only summand is Susp(S^1 smash S^3) = S^5
    assert out == [((1, 2, 3), S(5))]


# ---------------------------------------------------------------------------
# structural operations
# ---------------------------------------------------------------------------


def test_join_vertex_reduce():
    K = join(two_points(), build(1, [[1]]))
    pairs = PairAssignment.of([(X1, POINT), (X2, POINT), (POINT, Atom("Y", 1))])
    K2, pairs2 = join_vertex_reduce(K, pairs)
    assert K2 == two_points()
    assert pairs2.pairs == pairs.pairs[:2]
    # brackets touching the apex have mixed endpoint data and stay symbolic
    # in the direct decomposition; everything else agrees with the reduction
    dec_orig = loop_decompose(K, pairs, 2)
    dec_red = loop_decompose(K2, pairs2, 2)
    informative = Counter(
        f.expr
        for f in dec_orig.factors
        if f.diagram is None
        for _ in range(f.multiplicity)
    )
    assert informative == dec_red.factor_multiset()


def test_join_vertex_reduce_point_apex_leaves_decomposition_unchanged():
    # an apex mapping * -> * drops out of the direct decomposition entirely
    K = join(two_points(), build(1, [[1]]))
    pairs = PairAssignment.of([(X1, POINT), (X2, POINT), (POINT, POINT)])
    K2, pairs2 = join_vertex_reduce(K, pairs)
    dec_orig = loop_decompose(K, pairs, 3)
    dec_red = loop_decompose(K2, pairs2, 3)
    assert dec_orig.factor_multiset() == dec_red.factor_multiset()


def test_join_vertex_reduce_validation():
    K = join(two_points(), build(1, [[1]]))
    bad_pairs = PairAssignment.of([(X1, POINT), (X2, POINT), (X3, POINT)])
    with pytest.raises(ValueError, match="vertex 3"):
        join_vertex_reduce(K, bad_pairs)
    not_cone = build(2, [[1], [2]])
    with pytest.raises(ValueError, match="apex"):
        join_vertex_reduce(not_cone, PairAssignment.of([(X1, POINT), (POINT, POINT)]))


def test_pullback_square_corners():
    K1 = build(2, [[1, 2]])
    K2 = build(2, [[1, 2]])
    L = build(1, [[1]])
    pairs = PairAssignment.of([(X1, A1), (X2, A2), (X3, POINT)])
    sq = pullback_square(K1, K2, L, pairs)
    assert sq.corners["K"].facets == ((1, 2), (2, 3))
    assert sq.corners["K1"].facets == ((1, 2),)
    assert sq.corners["K2"].facets == ((2, 3),)
    assert sq.corners["L"].facets == ((2,),)
    assert len(sq.maps) == 4


def test_pullback_square_empty_overlap():
    K1 = build(1, [[1]])
    K2 = build(1, [[1]])
    pairs = PairAssignment.of([(X1, A1), (X2, A2)])
    sq = pullback_square(K1, K2, None, pairs)
    # the empty-overlap corner is the empty complex: its only diagram object
    # is the wedge of all codomains
    assert sq.corners["L"].facets == ()
    assert sq.diagrams["L"].objects[()] == Wedge((A1, A2))


def test_disjoint_union_decomp_is_component_union():
    K1 = build(2, [[1, 2]])
    K2 = build(2, [[1], [2]])
    spaces = [X1, X2, X3, Atom("X4", 1)]
    du = disjoint_union_decomp(K1, K2, spaces, 3)
    d1 = loop_decompose_wedge(K1, spaces[:2], 3)
    d2 = loop_decompose_wedge(K2, spaces[2:], 3)
    assert du.factor_multiset() == d1.factor_multiset() + d2.factor_multiset()
    # and it agrees with decomposing the union complex directly
    full = loop_decompose_wedge(disjoint_union(K1, K2), spaces, 3)
    assert du.factor_multiset() == full.factor_multiset()
    assert [str(f.provenance) for f in du.factors] == [
        str(f.provenance) for f in full.factors
    ]


def test_disjoint_union_two_vertices():
    du = disjoint_union_decomp(build(1, [[1]]), build(1, [[1]]), [X1, X2], 2)
    assert du.factor_multiset() == Counter({Loop(X1): 1, Loop(X2): 1})


# ---------------------------------------------------------------------------
# cross-theorem consistency
# ---------------------------------------------------------------------------


def test_delta_vs_porter_series_consistency():
    # the wedge-case decomposition at the full simplex is series-equal to
    # porter + hilton-milnor on the fiber wedge
    from polyco.verify import _desuspend

    N = 8
    spaces = [S(2), S(3), S(2)]
    dec = loop_decompose_wedge(simplex(3), spaces, N + 1, degree_bound=N)
    lhs = dec.series_product(N)

    fiber = porter_fiber(spaces)
    hm = hilton_milnor([_desuspend(c) for c in fiber.children], N + 1, degree_bound=N)
    rhs = PoincareSeries.one(N)
    for x in spaces:
        rhs = rhs * series_of(Loop(x), N)
    rhs = rhs * hm.series_product(N)
    assert lhs.compare(rhs) is None


def test_general_vs_wedge_theorem_agreement():
    # with constant maps the general decomposition and the wedge-specific one
    # are proved independently; their factor multisets must agree
    rng = random.Random(2718)
    for _ in range(20):
        K = random_complex(rng, 4)
        spaces = [Atom(f"X{i}", 1) for i in range(1, K.m + 1)]
        a = loop_decompose(K, const(spaces), 3)
        b = loop_decompose_wedge(K, spaces, 3)
        assert a.factor_multiset() == b.factor_multiset(), K


def test_general_vs_contractible_theorem_agreement():
    # with contractible domains the general decomposition takes the
    # mapping-space route for every bracket; it must agree with the
    # dedicated contractible-domain operation, whose filter is the
    # missing-face test instead of normalization collapse
    rng = random.Random(3141)
    for _ in range(15):
        K = random_complex(rng, 4)
        codomains = [Atom(f"A{i}", 1) for i in range(1, K.m + 1)]
        pairs = PairAssignment.path_fibrations(codomains)
        a = loop_decompose(K, pairs, 2)
        b = loop_decompose_contractible(K, pairs, 2)
        assert a.factor_multiset() == b.factor_multiset(), K
