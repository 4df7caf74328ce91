"""Concrete partially ordered abelian groups and their interval algebras.

Supported groups are Z^k and Q^k under the product, lexicographic, or strict
order (strict: every coordinate strictly smaller, or the tuples are equal).
Interval algebras [0, u] are kept lazy; product-ordered integer intervals can be
materialized into finite tables.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product as iter_product
from typing import Callable, Optional, Sequence

from .core import FiniteEffectAlgebra, GuardExceeded, validate_axioms
from .linalg import Vec, mat_pow, mat_vec
from .operators import minimal_potency  # noqa: F401  (re-export convenience)

ORDERS = ("product", "lex", "strict")


@dataclass(frozen=True)
class PoGroupSpec:
    rank: int
    scalars: str   # "Z" or "Q"
    order: str     # "product", "lex", "strict"

    def __post_init__(self):
        if self.rank < 1:
            raise ValueError("rank must be >= 1")
        if self.scalars not in ("Z", "Q"):
            raise ValueError("scalars must be 'Z' or 'Q'")
        if self.order not in ORDERS:
            raise ValueError(f"order must be one of {ORDERS}")

    def element(self, values: Sequence) -> Vec:
        vec = tuple(Fraction(v) for v in values)
        if len(vec) != self.rank:
            raise ValueError(f"rank mismatch: expected {self.rank}, got {len(vec)}")
        if self.scalars == "Z" and any(v.denominator != 1 for v in vec):
            raise ValueError("integer group cannot hold non-integer coordinates")
        return vec


def group_leq(spec: PoGroupSpec, x: Sequence, y: Sequence) -> bool:
    a = spec.element(x)
    b = spec.element(y)
    if spec.order == "product":
        return all(p <= q for p, q in zip(a, b))
    if spec.order == "lex":
        return a == b or next(
            p < q for p, q in zip(a, b) if p != q)
    # strict: all coordinates strictly below, or equal tuples
    return a == b or all(p < q for p, q in zip(a, b))


@dataclass(frozen=True)
class IntervalAlgebra:
    """The interval [0, u] with the restricted group addition."""

    spec: PoGroupSpec
    unit: Vec

    def __post_init__(self):
        u = self.spec.element(self.unit)
        object.__setattr__(self, "unit", u)
        zero = tuple(Fraction(0) for _ in range(self.spec.rank))
        if not group_leq(self.spec, zero, u):
            raise ValueError("unit must be >= 0")

    @property
    def zero(self) -> Vec:
        return tuple(Fraction(0) for _ in range(self.spec.rank))

    def contains(self, x: Sequence) -> bool:
        v = self.spec.element(x)
        return group_leq(self.spec, self.zero, v) and group_leq(self.spec, v, self.unit)

    def sum_defined(self, x: Sequence, y: Sequence) -> bool:
        v = tuple(p + q for p, q in zip(self.spec.element(x), self.spec.element(y)))
        return group_leq(self.spec, v, self.unit)

    def complement(self, x: Sequence) -> Vec:
        return tuple(u - p for u, p in zip(self.unit, self.spec.element(x)))


def interval_contains(alg: IntervalAlgebra, x: Sequence) -> bool:
    return alg.contains(x)


def materialize(alg: IntervalAlgebra, guard_elements: int = 4096) -> FiniteEffectAlgebra:
    """Finite table for a product-ordered integer interval [0, u].

    Elements are the lattice points, ordered lexicographically (zero first, unit
    last); a + b is defined iff the coordinatewise sum stays below u.
    """
    if alg.spec.order != "product":
        raise ValueError("only product-ordered intervals materialize to finite tables")
    if alg.spec.scalars != "Z":
        raise ValueError("only integer intervals are finite")
    u = [int(c) for c in alg.unit]
    count = 1
    for c in u:
        count *= c + 1
    if count > guard_elements:
        raise GuardExceeded(f"interval holds {count} points (guard {guard_elements})")
    points = list(iter_product(*[range(c + 1) for c in u]))
    index = {p: i for i, p in enumerate(points)}
    triples = []
    for i, p in enumerate(points):
        for j, q in enumerate(points):
            s = tuple(a + b for a, b in zip(p, q))
            if all(a <= b for a, b in zip(s, u)):
                triples.append((i, j, index[s]))
    labels = ["(" + ",".join(str(c) for c in p) + ")" for p in points]
    return validate_axioms(len(points), triples, labels,
                           meta={"construction": "interval", "unit": tuple(u),
                                 "coords": points})


def extremal_states(alg: IntervalAlgebra) -> list[Callable[[Sequence], Fraction]]:
    """Closed-form extremal states for the supported families.

    product order: the normalized coordinate projections (one per coordinate of
    the unit that is nonzero).  strict order, rank 2: the two normalized
    projections, last coordinate first.  lex order, rank 2: the leading
    projection only.
    """
    spec = alg.spec
    u = alg.unit

    def proj(i):
        scale = u[i]
        def state(x, _i=i, _s=scale):
            return Fraction(spec.element(x)[_i]) / _s
        return state

    if spec.order == "product":
        if all(c == 0 for c in u):
            return []
        return [proj(i) for i in range(spec.rank) if u[i] != 0]
    if spec.rank != 2 or any(c == 0 for c in u):
        raise ValueError("closed-form states cover rank-2 strict/lex units > 0 only")
    if spec.order == "strict":
        return [proj(1), proj(0)]
    return [proj(0)]   # lex


def strict_plane_preimage(alg: IntervalAlgebra):
    """Preimage solver for the rank-2 strict-order engine.

    The two extremal states are the coordinate projections, so a target value
    pair determines a unique group element.
    """
    if alg.spec.order != "strict" or alg.spec.rank != 2:
        raise ValueError("preimage solver is specific to the rank-2 strict order")
    u = alg.unit

    def preimage(target):
        v_last, v_first = target
        return (v_first * u[0], v_last * u[1])

    return preimage


@dataclass(frozen=True)
class ExtensionReport:
    """An endomorphism of a materialized interval extended to the whole group."""

    matrix: tuple[tuple[int, ...], ...]
    potency: Optional[int]
    matrix_potent: bool           # matrix^n == matrix for the reported potency
    cone_preserved: bool          # all entries >= 0
    restriction_matches: bool     # matrix agrees with the table map on [0, u]
    decomposition_consistent: bool  # greedy interval decompositions agree off [0, u]


def greedy_interval_decomposition(u: Sequence[int], x: Sequence[int]) -> list[tuple]:
    """Split x >= 0 into interval elements by repeatedly removing min(x, u)."""
    rest = list(x)
    parts = []
    while any(rest):
        part = tuple(min(r, c) for r, c in zip(rest, u))
        if not any(part):
            raise ValueError("decomposition stalled; unit must be positive")
        parts.append(part)
        rest = [r - p for r, p in zip(rest, part)]
    return parts


def extend_endomorphism(alg: IntervalAlgebra, E: FiniteEffectAlgebra,
                        mapping: Sequence[int], n: Optional[int] = None) -> ExtensionReport:
    """Extend a potent endomorphism of the materialized interval to a matrix.

    The matrix columns are the images of the standard generators (all inside
    [0, u] because u has positive coordinates).  Well-definedness is verified,
    not assumed: the restriction to [0, u] must reproduce the table map, and
    greedy decompositions of probe points outside the interval must map
    consistently with the matrix.
    """
    coords = E.meta.get("coords")
    u = E.meta.get("unit")
    if coords is None or u is None:
        raise ValueError("expected a materialized interval algebra")
    k = len(u)
    if any(c < 1 for c in u):
        raise ValueError("generator extension needs every unit coordinate >= 1")
    index = {p: i for i, p in enumerate(coords)}
    if n is None:
        n = minimal_potency(tuple(mapping))

    cols = []
    for j in range(k):
        e = tuple(1 if i == j else 0 for i in range(k))
        cols.append(coords[mapping[index[e]]])
    matrix = tuple(tuple(cols[j][i] for j in range(k)) for i in range(k))

    restriction_matches = all(
        mat_vec(matrix, p) == coords[mapping[i]] for i, p in enumerate(coords))

    probes = [tuple(2 * c for c in u), tuple(c + 1 for c in u)]
    probes += [tuple(u[i] + (1 if i == j else 0) for i in range(k)) for j in range(k)]
    consistent = True
    for x in probes:
        parts = greedy_interval_decomposition(u, x)
        via_table = [0] * k
        for part in parts:
            img = coords[mapping[index[part]]]
            via_table = [a + b for a, b in zip(via_table, img)]
        if tuple(via_table) != mat_vec(matrix, x):
            consistent = False

    potent = n is not None and mat_pow(matrix, n) == matrix
    cone = all(v >= 0 for row in matrix for v in row)
    return ExtensionReport(matrix=matrix, potency=n, matrix_potent=potent,
                           cone_preserved=cone,
                           restriction_matches=restriction_matches,
                           decomposition_consistent=consistent)
