"""Axiom validation, derived order, isomorphism, and mutation detection."""

import random

import pytest

from effectalg.catalog import build_boolean, build_chain, build_product, small_catalog
from effectalg.core import AxiomViolation, is_isomorphic, validate_axioms
from effectalg.fuzz import fuzz_mutations, permute_algebra, random_algebra


def chain3_triples():
    # 0 < 1/3 < 2/3 < 1 with truncated addition, written out by hand
    return [(i, j, i + j) for i in range(4) for j in range(4) if i + j <= 3]


def exhaustive_associativity(n, sums):
    """Independent triple-check of the partial associativity biconditional."""
    for a in range(n):
        for b in range(n):
            for c in range(n):
                ab = sums.get((a, b))
                bc = sums.get((b, c))
                left = ab is not None and (ab, c) in sums
                right = bc is not None and (a, bc) in sums
                if left != right:
                    return False
                if left and sums[(ab, c)] != sums[(a, bc)]:
                    return False
    return True


def test_chain3_table_is_valid():
    E = validate_axioms(4, chain3_triples())
    assert E.n == 4
    assert exhaustive_associativity(E.n, E.sums)


def test_boolean_tables_are_valid():
    for k in (1, 2, 3):
        E = build_boolean(k)
        assert exhaustive_associativity(E.n, E.sums)


def test_unit_law_violation_reported():
    triples = chain3_triples() + [(1, 3, 3), (3, 1, 3)]
    with pytest.raises(AxiomViolation) as exc:
        validate_axioms(4, triples)
    assert exc.value.axiom == "iv"
    assert exc.value.witness == (1,)


def test_asymmetric_table_rejected():
    triples = [t for t in chain3_triples() if t != (1, 2, 3)]
    with pytest.raises(AxiomViolation) as exc:
        validate_axioms(4, triples)
    assert exc.value.axiom == "i"


def test_missing_complement_rejected():
    triples = [t for t in chain3_triples() if t not in ((1, 2, 3), (2, 1, 3))]
    with pytest.raises(AxiomViolation) as exc:
        validate_axioms(4, triples)
    assert exc.value.axiom == "iii"
    assert exc.value.witness[0] == 1


def test_contradictory_entry_rejected():
    triples = chain3_triples() + [(0, 1, 2)]
    with pytest.raises(AxiomViolation) as exc:
        validate_axioms(4, triples)
    assert exc.value.axiom == "table"


def test_derived_order_chain2():
    E = build_chain(2)
    v = 1
    assert E.complement(v) == v
    assert E.minus(E.one, v) == v
    assert E.leq(0, v) and E.leq(v, E.one)


def test_boolean2_order():
    E = build_boolean(2)
    a, b = 1, 2
    assert E.leq(a, E.one) and E.leq(b, E.one)
    assert not E.leq(a, b) and not E.leq(b, a)


def test_complement_involution_everywhere():
    for _name, E in small_catalog():
        for x in range(E.n):
            assert E.complement(E.complement(x)) == x


def test_order_is_partial_order():
    for _name, E in small_catalog():
        o = E.order.leq
        n = E.n
        assert all(o[a][a] for a in range(n))
        assert all(not (o[a][b] and o[b][a]) for a in range(n) for b in range(n) if a != b)
        for a in range(n):
            for b in range(n):
                if o[a][b]:
                    assert all(o[a][c] for c in range(n) if o[b][c])
        assert all(o[0][a] and o[a][n - 1] for a in range(n))


def test_cancellation_and_positivity():
    for _name, E in small_catalog():
        for (a, c), s1 in E.sums.items():
            for b in range(E.n):
                if E.sums.get((b, c)) == s1:
                    assert a == b
        for (a, b), k in E.sums.items():
            if k == 0:
                assert a == 0 and b == 0


def test_subtraction_unique():
    for _name, E in small_catalog():
        for (b, a), c in E.order.sub.items():
            assert E.sums[(a, c)] == b


def test_isomorphism_examples():
    assert is_isomorphic(build_product([build_chain(1), build_chain(1)]), build_boolean(2))
    assert not is_isomorphic(build_boolean(2), build_chain(3))
    E = build_boolean(3)
    perm = [0, 4, 2, 1, 6, 5, 3, 7]
    assert is_isomorphic(E, permute_algebra(E, perm))


def test_fuzz_mutations_detected():
    rng = random.Random(1)
    for _name, E in small_catalog():
        report = fuzz_mutations(E, rng, count=50)
        assert report.silent_passes == 0
        counts = report.counts()
        assert counts["violation"] + counts["valid_different"] == len(report.outcomes)


def test_random_algebras_validate():
    rng = random.Random(5)
    for _ in range(40):
        _name, E = random_algebra(rng)
        assert 1 <= E.n <= 9
        assert exhaustive_associativity(E.n, E.sums)
