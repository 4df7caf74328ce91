"""Endomorphism enumeration, classification, induced state maps, operator laws.

Independent oracle: a blunt scan of all n^n total maps checking the
homomorphism conditions directly, with no shared code with the backtracking
enumerator.
"""

from itertools import product

import pytest

from effectalg.catalog import (build_boolean, build_chain, build_product,
                               horizontal_sum, small_catalog)
from effectalg.mv import mv_operations
from effectalg.operators import (check_esp, classify_operator, compose,
                                 coordinate_repeat_maps, coordinate_swap_map,
                                 enumerate_endomorphisms, induced_state_map,
                                 is_endomorphism, kernel, minimal_potency,
                                 mv_operator_agreement, operator_law_report,
                                 potencies_up_to, power, scan_mv_operator_agreement)
from effectalg.states import compute_states
from effectalg.structure import enumerate_ideals


def endomorphism_oracle(E):
    """Every total map, checked as a homomorphism the long way."""
    found = []
    for m in product(range(E.n), repeat=E.n):
        if m[E.n - 1] != E.n - 1:
            continue
        ok = True
        for (i, j), k in E.sums.items():
            if E.sums.get((m[i], m[j])) != m[k]:
                ok = False
                break
        if ok:
            found.append(m)
    return sorted(found)


def test_boolean2_census_matches_oracle():
    E = build_boolean(2)
    endos = enumerate_endomorphisms(E)
    assert endos == endomorphism_oracle(E)
    assert len(endos) == 4
    idems = [m for m in endos if compose(m, m) == m]
    assert len(idems) == 3
    swap = (0, 2, 1, 3)
    assert swap in endos
    assert minimal_potency(swap) == 3
    assert potencies_up_to(swap, 7) == [3, 5, 7]


def test_chain2_identity_only():
    E = build_chain(2)
    endos = enumerate_endomorphisms(E)
    assert endos == [(0, 1, 2)] == endomorphism_oracle(E)


def test_small_catalog_matches_oracle():
    for _name, E in small_catalog(max_elements=6):
        assert enumerate_endomorphisms(E) == endomorphism_oracle(E)


def test_identity_always_found():
    for _name, E in small_catalog():
        assert tuple(range(E.n)) in enumerate_endomorphisms(E)


def test_square_product_operator_census():
    E = build_product([build_chain(2), build_chain(2)])
    endos = enumerate_endomorphisms(E)
    t1, t2 = coordinate_repeat_maps(E)
    swap = coordinate_swap_map(E)
    ident = tuple(range(E.n))
    assert sorted(endos) == sorted([ident, t1, t2, swap])


def test_classification_on_square_product():
    E = build_product([build_chain(2), build_chain(2)])
    P = compute_states(E)
    t1, t2 = coordinate_repeat_maps(E)
    for t in (t1, t2):
        prof = classify_operator(E, t, P)
        assert prof.is_state_operator and prof.is_strong
        assert prof.is_state_morphism and prof.has_esp
    swap = coordinate_swap_map(E)
    prof = classify_operator(E, swap, P)
    assert not prof.is_state_operator
    assert prof.minimal_potency == 3
    assert prof.has_esp


def test_complement_swap_is_3_potent_not_state_operator():
    E = build_boolean(2)
    swap = (0, 2, 1, 3)
    prof = classify_operator(E, swap, compute_states(E))
    assert not prof.is_state_operator
    assert prof.minimal_potency == 3
    assert not prof.is_strong


def test_kernels_are_tau_ideals():
    for _name, E in small_catalog(max_elements=8):
        ideal_sets = {frozenset(i) for i, _f in enumerate_ideals(E)}
        for m in enumerate_endomorphisms(E):
            ker = kernel(E, m)
            assert frozenset(ker) in ideal_sets
            assert all(m[a] in ker for a in ker)


def test_inclusion_chain():
    for _name, E in small_catalog():
        for m in enumerate_endomorphisms(E):
            prof = classify_operator(E, m)
            if prof.is_state_morphism:
                assert prof.is_strong
            if prof.is_strong:
                assert prof.is_state_operator


def test_induced_map_collapses_to_m1():
    E = build_product([build_chain(2), build_chain(2)])
    P = compute_states(E)
    t1, _ = coordinate_repeat_maps(E)
    ind = induced_state_map(E, t1, P)
    tuples = E.meta["tuples"]
    from fractions import Fraction as F
    m1 = tuple(F(t[0], 2) for t in tuples)
    assert all(img == m1 for img in ind.vertex_images)
    assert ind.vertex_to_vertex is not None


def test_induced_map_of_swap_exchanges_vertices():
    E = build_product([build_chain(2), build_chain(2)])
    P = compute_states(E)
    swap = coordinate_swap_map(E)
    ind = induced_state_map(E, swap, P, n=3)
    assert sorted(ind.vertex_to_vertex) == [0, 1]
    assert ind.vertex_to_vertex != (0, 1)


def test_identity_induces_identity():
    E = build_boolean(2)
    P = compute_states(E)
    ind = induced_state_map(E, tuple(range(E.n)), P)
    assert ind.vertex_to_vertex == tuple(range(len(P.vertices)))


def test_esp_vacuous_without_states():
    from effectalg.states import StatePolytope
    empty = StatePolytope(size=4, vertices=(), free_dim=0)
    assert check_esp((0, 1, 2, 3), empty)


def test_law_report_on_diagonal_operator():
    E = build_product([build_chain(2), build_chain(2)])
    t1, _ = coordinate_repeat_maps(E)
    report = operator_law_report(E, t1)
    assert report["image_is_fixed_point_set"].holds
    assert report["image_is_subalgebra"].holds
    tuples = E.meta["tuples"]
    diagonal = sorted(i for i, t in enumerate(tuples) if t[0] == t[1])
    assert sorted({t1[a] for a in range(E.n)}) == diagonal
    assert report["image_inherits_rdp"].holds
    assert report["strong_fixes_image_meets"].holds


def test_law_report_on_chains():
    for n in (2, 4, 6):
        E = build_chain(n)
        ident = tuple(range(E.n))
        report = operator_law_report(E, ident)
        assert report["linear_faithful_identity"].applicable
        assert report["linear_faithful_identity"].holds
        assert report["antilattice_preserves_joins_meets"].holds
        assert report["faithful_implies_strong"].holds


def test_law_report_requires_idempotence():
    E = build_boolean(2)
    with pytest.raises(ValueError):
        operator_law_report(E, (0, 2, 1, 3))


def test_laws_hold_across_catalog():
    for _name, E in small_catalog():
        for m in enumerate_endomorphisms(E):
            if compose(m, m) != m:
                continue
            for law, res in operator_law_report(E, m).items():
                if law == "all_meets_preserved_info":
                    continue
                assert not (res.applicable and res.holds is False), (law, m)


def test_mv_agreement_single_maps():
    E = build_chain(2)
    A = mv_operations(E)
    P = compute_states(E)
    rep = mv_operator_agreement(A, (0, 1, 2), P)
    assert rep["mv_state_operator"] and rep["strong_state_operator"]
    assert rep["mv_state_morphism"] and rep["state_morphism"] and rep["esp"]
    rep2 = mv_operator_agreement(A, (0, 0, 2), P)
    assert not rep2["mv_state_operator"] and not rep2["is_endomorphism"]


def test_mv_agreement_scan_small():
    for n in (1, 2, 3):
        E = build_chain(n)
        stats = scan_mv_operator_agreement(mv_operations(E), compute_states(E))
        assert stats["endomorphisms"] == 1
        assert stats["mv_state_operators"] == 1


def test_power_and_potency_identities():
    swap = (0, 2, 1, 3)
    assert power(swap, 2) == (0, 1, 2, 3)
    assert power(swap, 3) == swap
    assert minimal_potency((0, 1, 2, 3)) == 2
    # a map whose tail is too long never returns to itself
    assert minimal_potency((1, 2, 2)) is None
