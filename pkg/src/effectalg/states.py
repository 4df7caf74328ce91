"""State polytopes of finite effect algebras, exactly.

A state assigns rational values s(a) in [0,1] with s(1) = 1 and s additive on
defined sums.  The solution set is a bounded polytope; its vertices are the
extremal states.  All arithmetic is Fraction; floating point is forbidden here
because vertex dedup and value-set tests need decidable equality.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Callable, Optional, Sequence

from .core import FiniteEffectAlgebra
from .linalg import ZERO, ONE, Vec, affine_parametrization
from .polytope import active_set_vertices, dd_vertices


@dataclass(frozen=True)
class StatePolytope:
    """Exact state polytope: vertex list (sorted lexicographically) plus shape data."""

    size: int                      # ambient dimension = |E|
    vertices: tuple[Vec, ...]
    free_dim: int

    @property
    def empty(self) -> bool:
        return not self.vertices

    def vertex_index(self, vec: Sequence[Fraction]) -> Optional[int]:
        t = tuple(vec)
        for i, v in enumerate(self.vertices):
            if v == t:
                return i
        return None


def state_equalities(E: FiniteEffectAlgebra):
    """Equality system (rows, rhs) over s_0..s_{n-1} defining states."""
    n = E.n
    rows = []
    rhs = []
    r0 = [ZERO] * n
    r0[0] = ONE
    rows.append(r0)
    rhs.append(ZERO)
    r1 = [ZERO] * n
    r1[n - 1] = ONE
    rows.append(r1)
    rhs.append(ONE)
    for (i, j), k in E.sums.items():
        if i > j:
            continue
        row = [ZERO] * n
        row[i] += ONE
        row[j] += ONE
        row[k] -= ONE
        if any(row):
            rows.append(row)
            rhs.append(ZERO)
    return rows, rhs


def is_state(E: FiniteEffectAlgebra, vec: Sequence[Fraction]) -> bool:
    """Direct check of the state conditions against the sum table."""
    if len(vec) != E.n:
        return False
    if any(x < 0 or x > 1 for x in vec):
        return False
    if vec[0] != 0 or vec[E.n - 1] != 1:
        return False
    return all(vec[i] + vec[j] == vec[k] for (i, j), k in E.sums.items())


def compute_states(E: FiniteEffectAlgebra, method: str = "dd",
                   guard_dim: int = 14) -> StatePolytope:
    """Enumerate all extremal states.

    Gaussian elimination reduces the equalities to an affine parametrization;
    the box constraints on every coordinate become halfspaces in the free
    variables; ``method`` picks the vertex enumerator ("dd" or "oracle").
    An empty vertex list means the algebra admits no states at all.
    """
    n = E.n
    eq_rows, eq_rhs = state_equalities(E)
    param = affine_parametrization(eq_rows, eq_rhs, n)
    if param is None:
        return StatePolytope(size=n, vertices=(), free_dim=0)
    c, free, basis = param
    d = len(free)

    rows = []
    feasible = True
    for i in range(n):
        coeffs = tuple(basis[j][i] for j in range(d))
        if any(coeffs):
            rows.append((coeffs, -c[i]))                      # s_i >= 0
            rows.append((tuple(-x for x in coeffs), c[i] - 1))  # s_i <= 1
        elif c[i] < 0 or c[i] > 1:
            feasible = False
            break
    if not feasible:
        return StatePolytope(size=n, vertices=(), free_dim=d)

    if method == "dd":
        tverts = dd_vertices(rows, d, guard_dim=guard_dim)
    elif method == "oracle":
        tverts = active_set_vertices(rows, d)
    else:
        raise ValueError(f"unknown method {method!r}")

    verts = set()
    for t in tverts:
        s = tuple(c[i] + sum(basis[j][i] * t[j] for j in range(d)) for i in range(n))
        verts.add(s)
    return StatePolytope(size=n, vertices=tuple(sorted(verts)), free_dim=d)


@dataclass(frozen=True)
class OrderingReport:
    order_determining: bool
    separating: bool
    od_witness: Optional[tuple]     # (a, b): statewise a <= b but not a <= b in E
    sep_witness: Optional[tuple]    # (a, b): a != b with identical state values


def is_order_determining(E: FiniteEffectAlgebra, P: StatePolytope) -> OrderingReport:
    """Does a <= b hold exactly when s(a) <= s(b) for every extremal state?

    Vertices suffice: every state is a convex combination of them.  Also reports
    the weaker separation property (equal under all states implies equal).
    """
    leq = E.order.leq
    od_w = None
    sep_w = None
    for a in range(E.n):
        for b in range(E.n):
            statewise = all(v[a] <= v[b] for v in P.vertices)
            if statewise and not leq[a][b] and od_w is None:
                od_w = (a, b)
            if a < b and sep_w is None and all(v[a] == v[b] for v in P.vertices):
                sep_w = (a, b)
            if leq[a][b] and not statewise:
                # impossible for genuine states; flag loudly
                raise AssertionError(f"state order broke monotonicity at ({a}, {b})")
    return OrderingReport(order_determining=od_w is None, separating=sep_w is None,
                          od_witness=od_w, sep_witness=sep_w)


def sampled_order_report(elements: Sequence, state_fns: Sequence[Callable],
                         leq_fn: Callable) -> OrderingReport:
    """Order-determination on a caller-supplied element list with closed-form states.

    Used for interval algebras that cannot be materialized; ``elements`` are
    ambient values, ``state_fns`` evaluate states on them, ``leq_fn`` is the
    ambient order.
    """
    od_w = None
    sep_w = None
    for i, a in enumerate(elements):
        for j, b in enumerate(elements):
            statewise = all(s(a) <= s(b) for s in state_fns)
            actual = leq_fn(a, b)
            if statewise and not actual and od_w is None:
                od_w = (i, j)
            if actual and not statewise:
                raise AssertionError(f"states fail monotonicity at ({a}, {b})")
            if i < j and sep_w is None and all(s(a) == s(b) for s in state_fns):
                sep_w = (i, j)
    return OrderingReport(order_determining=od_w is None, separating=sep_w is None,
                          od_witness=od_w, sep_witness=sep_w)


def discrete_profile(vec: Sequence[Fraction]) -> int:
    """Least n with every value in {0, 1/n, ..., n/n}: the lcm of the denominators."""
    out = 1
    for x in vec:
        out = lcm(out, Fraction(x).denominator)
    return out


@dataclass(frozen=True)
class EvaluationImage:
    """Per element a, the vector of extremal-state values (the function a-hat)."""

    vectors: tuple[Vec, ...]              # indexed like E
    kernel_pairs: tuple[tuple[int, int], ...]   # distinct elements with equal vectors
    sum_well_defined: bool                # pointwise sums of images never clash


def evaluation_image(E: FiniteEffectAlgebra, P: StatePolytope) -> EvaluationImage:
    n = E.n
    vectors = tuple(tuple(v[a] for v in P.vertices) for a in range(n))
    kernel = tuple((a, b) for a in range(n) for b in range(a + 1, n)
                   if vectors[a] == vectors[b])
    by_vec: dict[tuple, set[tuple]] = {}
    ok = True
    for (i, j), k in E.sums.items():
        if i > j:
            continue
        target = tuple(x + y for x, y in zip(vectors[i], vectors[j]))
        by_vec.setdefault(target, set()).add(vectors[k])
    for targets in by_vec.values():
        if len(targets) > 1:
            ok = False
    return EvaluationImage(vectors=vectors, kernel_pairs=kernel, sum_well_defined=ok)


def image_order_isomorphic(E: FiniteEffectAlgebra, P: StatePolytope) -> bool:
    """Is a |-> a-hat injective and order-reflecting onto its image?

    Computed from the image vectors alone; compared elsewhere against the
    order-determination test, which must agree with it.
    """
    img = evaluation_image(E, P)
    if img.kernel_pairs:
        return False
    leq = E.order.leq
    vecs = img.vectors
    for a in range(E.n):
        for b in range(E.n):
            pointwise = all(x <= y for x, y in zip(vecs[a], vecs[b]))
            if pointwise != leq[a][b]:
                return False
    return True


@dataclass(frozen=True)
class ClanWitness:
    kind: str                     # "sum" or "complement"
    f_index: int
    g_index: Optional[int]
    target: Vec                   # required pointwise values, per state
    candidate: Optional[tuple]    # ambient preimage that fails membership, if any


def clan_closure_witness(hat_vectors: Sequence[Vec],
                         preimage: Callable[[Vec], Optional[tuple]],
                         contains: Callable[[tuple], bool]) -> Optional[ClanWitness]:
    """Check closure of a family of state-value functions under complement and sum.

    ``hat_vectors[i]`` lists element i's values at each extremal state.  A sum
    f + g is required whenever f <= 1 - g pointwise; the ambient ``preimage``
    solver proposes the unique candidate realizing a target value vector and
    ``contains`` tests ambient membership.  Returns None when closed, else the
    first failure.
    """
    m = len(hat_vectors[0]) if hat_vectors else 0
    ones = tuple(ONE for _ in range(m))
    for i, f in enumerate(hat_vectors):
        target = tuple(o - x for o, x in zip(ones, f))
        cand = preimage(target)
        if cand is None or not contains(cand):
            return ClanWitness("complement", i, None, target, cand)
    for i, f in enumerate(hat_vectors):
        for j, g in enumerate(hat_vectors):
            if all(x <= o - y for x, y, o in zip(f, g, ones)):
                target = tuple(x + y for x, y in zip(f, g))
                cand = preimage(target)
                if cand is None or not contains(cand):
                    return ClanWitness("sum", i, j, target, cand)
    return None


def finite_clan_engine(E: FiniteEffectAlgebra, P: StatePolytope):
    """hat-vectors plus exhaustive preimage search inside a finite algebra."""
    img = evaluation_image(E, P)
    vectors = img.vectors

    def preimage(target):
        for a, v in enumerate(vectors):
            if v == target:
                return (a,)
        return None

    def contains(cand):
        return cand is not None

    return vectors, preimage, contains
