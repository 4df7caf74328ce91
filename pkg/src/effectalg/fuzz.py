"""Seeded random validated algebras and mutation testing of the axiom checker.

Random algebras come from the catalog constructions plus horizontal sums and
materialized integer intervals, composed and then relabeled by a random
permutation that respects the index conventions.  Mutations edit the raw triple
list; the validator must either reject the edit naming an axiom, or accept a
genuinely different algebra.  A silent acceptance of an unchanged table would be
a bug and is reported separately.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .catalog import (build_boolean, build_chain, build_even_subsets,
                      build_product, horizontal_sum)
from .core import AxiomViolation, FiniteEffectAlgebra, validate_axioms
from .pogroup import IntervalAlgebra, PoGroupSpec, materialize


def permute_algebra(E: FiniteEffectAlgebra, perm: list[int]) -> FiniteEffectAlgebra:
    """Relabel elements along a permutation fixing 0 and n-1."""
    if perm[0] != 0 or perm[E.n - 1] != E.n - 1:
        raise ValueError("permutation must fix the distinguished indices")
    triples = [(perm[i], perm[j], perm[k]) for (i, j), k in E.sums.items()]
    labels = [None] * E.n
    for a in range(E.n):
        labels[perm[a]] = E.labels[a]
    return validate_axioms(E.n, triples, labels, meta=dict(E.meta))


def random_algebra(rng: random.Random, max_elements: int = 9) -> tuple[str, FiniteEffectAlgebra]:
    """One seeded validated algebra of size <= max_elements, randomly relabeled."""
    while True:
        kind = rng.choice(["chain", "boolean", "product", "even", "hsum", "interval"])
        if kind == "chain":
            n = rng.randint(1, max(1, max_elements - 1))
            E = build_chain(n)
            name = f"chain({n})"
        elif kind == "boolean":
            k = rng.randint(1, 3)
            E = build_boolean(k)
            name = f"boolean({k})"
        elif kind == "product":
            dims = [rng.randint(1, 3) for _ in range(rng.randint(2, 3))]
            E = build_product([build_chain(d) for d in dims])
            name = f"product{tuple(dims)}"
        elif kind == "even":
            E = build_even_subsets(4)
            name = "even_subsets(4)"
        elif kind == "hsum":
            blocks = [rng.randint(2, 4) for _ in range(rng.randint(2, 3))]
            E = horizontal_sum([build_chain(b) for b in blocks])
            name = f"hsum{tuple(blocks)}"
        else:
            u = (rng.randint(1, 3), rng.randint(1, 2))
            alg = IntervalAlgebra(PoGroupSpec(2, "Z", "product"), u)
            E = materialize(alg)
            name = f"interval{u}"
        if E.n > max_elements:
            continue
        perm = [0] + rng.sample(range(1, E.n - 1), max(0, E.n - 2)) + ([E.n - 1] if E.n > 1 else [])
        return f"{name}#perm", permute_algebra(E, perm)


@dataclass(frozen=True)
class MutationOutcome:
    kind: str              # what was edited
    result: str            # "violation", "valid_different", "valid_same"
    axiom: str | None      # which axiom rejected the edit, when one did


@dataclass(frozen=True)
class FuzzReport:
    outcomes: tuple[MutationOutcome, ...]

    @property
    def silent_passes(self) -> int:
        return sum(1 for o in self.outcomes if o.result == "valid_same")

    def counts(self) -> dict:
        out = {"violation": 0, "valid_different": 0, "valid_same": 0}
        for o in self.outcomes:
            out[o.result] += 1
        return out


def _mutate(rng: random.Random, n: int, triples: list[tuple[int, int, int]]):
    """One random raw-table edit; returns (new triples, description)."""
    choice = rng.random()
    if choice < 0.4 and triples:
        # change the value of one entry (one side only half of the time)
        idx = rng.randrange(len(triples))
        i, j, k = triples[idx]
        k2 = rng.choice([x for x in range(n) if x != k])
        new = list(triples)
        new[idx] = (i, j, k2)
        if i != j and rng.random() < 0.5:
            mirror = new.index((j, i, k))
            new[mirror] = (j, i, k2)
            return new, "change_both"
        return new, "change_one_side"
    if choice < 0.7 and triples:
        idx = rng.randrange(len(triples))
        i, j, k = triples[idx]
        new = [t for t in triples if t != (i, j, k)]
        if i != j and rng.random() < 0.5:
            new = [t for t in new if t != (j, i, k)]
            return new, "delete_both"
        return new, "delete_one_side"
    defined = {(i, j) for (i, j, _k) in triples}
    missing = [(i, j) for i in range(n) for j in range(n) if (i, j) not in defined]
    if not missing:
        return list(triples), "noop"
    i, j = rng.choice(missing)
    k = rng.randrange(n)
    new = list(triples) + [(i, j, k)]
    if i != j and rng.random() < 0.5:
        new.append((j, i, k))
        return new, "add_both"
    return new, "add_one_side"


def fuzz_mutations(E: FiniteEffectAlgebra, rng: random.Random,
                   count: int = 50) -> FuzzReport:
    base = [(i, j, k) for (i, j), k in sorted(E.sums.items())]
    outcomes = []
    for _ in range(count):
        triples, kind = _mutate(rng, E.n, base)
        if kind == "noop":
            continue
        try:
            mutated = validate_axioms(E.n, triples)
        except AxiomViolation as violation:
            outcomes.append(MutationOutcome(kind, "violation", violation.axiom))
            continue
        same = mutated.sums == E.sums
        outcomes.append(MutationOutcome(
            kind, "valid_same" if same else "valid_different", None))
    return FuzzReport(tuple(outcomes))
