"""State polytopes, ordering reports, discreteness, evaluation images, clans."""

import random
from fractions import Fraction as F

from hypothesis import given, settings, strategies as st

from effectalg.catalog import (build_boolean, build_chain, build_even_subsets,
                               build_product, horizontal_sum, small_catalog)
from effectalg.pogroup import (IntervalAlgebra, PoGroupSpec, extremal_states,
                               group_leq, strict_plane_preimage)
from effectalg.states import (StatePolytope, clan_closure_witness, compute_states,
                              discrete_profile, evaluation_image, finite_clan_engine,
                              image_order_isomorphic, is_order_determining, is_state,
                              sampled_order_report)


def test_chain2_single_state():
    P = compute_states(build_chain(2))
    assert P.vertices == ((F(0), F(1, 2), F(1)),)


def test_chain_states_are_forced():
    for n in (1, 3, 5, 8):
        P = compute_states(build_chain(n))
        assert P.vertices == (tuple(F(k, n) for k in range(n + 1)),)


def test_boolean2_two_dirac_vertices():
    P = compute_states(build_boolean(2))
    assert len(P.vertices) == 2
    assert all(set(v) == {F(0), F(1)} for v in P.vertices)


def test_square_product_vertices_are_coordinate_states():
    E = build_product([build_chain(2), build_chain(2)])
    P = compute_states(E)
    tuples = E.meta["tuples"]
    m1 = tuple(F(t[0], 2) for t in tuples)
    m2 = tuple(F(t[1], 2) for t in tuples)
    assert set(P.vertices) == {m1, m2}


def test_vertices_sorted_and_deduped():
    for _name, E in small_catalog():
        P = compute_states(E)
        assert list(P.vertices) == sorted(set(P.vertices))
        for v in P.vertices:
            assert is_state(E, v)


@settings(max_examples=30, deadline=None)
@given(st.data())
def test_convex_combinations_are_states(data):
    algebras = small_catalog()
    _name, E = data.draw(st.sampled_from(algebras))
    P = compute_states(E)
    if not P.vertices:
        return
    k = len(P.vertices)
    raw = data.draw(st.lists(st.integers(min_value=0, max_value=9),
                             min_size=k, max_size=k).filter(lambda w: any(w)))
    total = sum(raw)
    weights = [F(w, total) for w in raw]
    point = tuple(sum(w * v[a] for w, v in zip(weights, P.vertices))
                  for a in range(E.n))
    assert is_state(E, point)


def test_no_vertex_is_a_midpoint():
    for _name, E in small_catalog():
        P = compute_states(E)
        verts = P.vertices
        for v in verts:
            for i, u1 in enumerate(verts):
                for u2 in verts[i + 1:]:
                    if u1 != v and u2 != v:
                        assert tuple((x + y) / 2 for x, y in zip(u1, u2)) != v


def test_order_determining_catalog():
    for k in (1, 2, 3):
        E = build_boolean(k)
        rep = is_order_determining(E, compute_states(E))
        assert rep.order_determining and rep.separating
    for n in (1, 2, 5):
        E = build_chain(n)
        rep = is_order_determining(E, compute_states(E))
        assert rep.order_determining


def test_order_determining_matches_image_isomorphism():
    population = small_catalog() + [
        ("hsum22", horizontal_sum([build_chain(2), build_chain(2)])),
        ("hsum23", horizontal_sum([build_chain(2), build_chain(3)]))]
    for _name, E in population:
        P = compute_states(E)
        rep = is_order_determining(E, P)
        assert rep.order_determining == image_order_isomorphic(E, P)
        if rep.order_determining:
            assert rep.separating


def test_horizontal_sum_not_separating():
    E = horizontal_sum([build_chain(2), build_chain(2)])
    P = compute_states(E)
    rep = is_order_determining(E, P)
    assert not rep.separating and not rep.order_determining
    img = evaluation_image(E, P)
    assert (1, 2) in img.kernel_pairs


def test_discrete_profiles():
    assert discrete_profile((F(0), F(1, 2), F(1))) == 2
    assert discrete_profile((F(0), F(1), F(0), F(1))) == 1
    assert discrete_profile((F(0), F(1, 2), F(1, 3))) == 6


def test_every_rational_state_is_discrete():
    for _name, E in small_catalog():
        for v in compute_states(E).vertices:
            n = discrete_profile(v)
            assert all((x * n).denominator == 1 for x in v)


def strict_plane():
    return IntervalAlgebra(PoGroupSpec(2, "Q", "strict"), (1, 1))


def test_strict_plane_clan_witness():
    alg = strict_plane()
    states = extremal_states(alg)
    assert len(states) == 2
    a = (F(3, 10), F(3, 10))
    b = (F(7, 10), F(4, 10))
    hat = [tuple(s(e) for s in states) for e in [alg.zero, alg.unit, a, b]]
    assert hat[2] == (F(3, 10), F(3, 10))
    witness = clan_closure_witness(hat, strict_plane_preimage(alg), alg.contains)
    assert witness is not None and witness.kind == "sum"
    assert sorted(witness.target) == [F(7, 10), F(1)]
    assert witness.candidate == (F(1), F(7, 10))
    assert not alg.contains(witness.candidate)


def test_strict_plane_separating_not_order_determining():
    alg = strict_plane()
    states = extremal_states(alg)
    elements = [alg.zero, alg.unit, (F(1, 2), F(1, 4)), (F(1, 2), F(1, 2)),
                (F(3, 10), F(3, 10))]
    rep = sampled_order_report(elements, states,
                               lambda x, y: group_leq(alg.spec, x, y))
    assert rep.separating
    assert not rep.order_determining
    assert rep.od_witness == (2, 3)


def test_finite_image_clans_closed():
    for E in (build_boolean(2), build_chain(3), build_even_subsets(4)):
        P = compute_states(E)
        vectors, preimage, contains = finite_clan_engine(E, P)
        assert clan_closure_witness(vectors, preimage, contains) is None


def test_complement_closure_always_holds_on_interval():
    rng = random.Random(3)
    alg = strict_plane()
    states = extremal_states(alg)
    elements = [alg.zero, alg.unit]
    for _ in range(10):
        x = (F(rng.randint(1, 9), 10), F(rng.randint(1, 9), 10))
        if alg.contains(x):
            elements.append(x)
    hat = [tuple(s(e) for s in states) for e in elements]
    witness = clan_closure_witness(hat, strict_plane_preimage(alg), alg.contains)
    assert witness is None or witness.kind != "complement"


def test_empty_polytope_reports_no_states():
    P = StatePolytope(size=3, vertices=(), free_dim=0)
    assert P.empty
    assert P.vertex_index((F(0), F(0), F(1))) is None


def test_lex_interval_states_are_first_coordinate():
    alg = IntervalAlgebra(PoGroupSpec(2, "Q", "lex"), (1, 1))
    states = extremal_states(alg)
    assert len(states) == 1
    rep = sampled_order_report(
        [alg.zero, alg.unit, (F(1, 2), F(1, 4)), (F(1, 2), F(3, 4))],
        states, lambda x, y: group_leq(alg.spec, x, y))
    assert not rep.separating
    assert not rep.order_determining


def test_dd_matches_oracle_on_catalog():
    for _name, E in small_catalog():
        assert compute_states(E, method="dd").vertices == \
            compute_states(E, method="oracle").vertices
