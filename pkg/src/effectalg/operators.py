"""Endomorphisms of finite effect algebras and their internal-state classification.

An endomorphism preserves every defined sum and the unit (hence zero, complement,
order, and subtraction).  Idempotent endomorphisms play the role of internal
states; n-potent ones (tau^n = tau) generalize them.  Classification covers the
strong and join-preserving variants, kernels and faithfulness, and preservation
of extremal states.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .core import FiniteEffectAlgebra, GuardExceeded
from .states import StatePolytope, discrete_profile, is_state


def is_endomorphism(E: FiniteEffectAlgebra, mapping: Sequence[int]) -> bool:
    m = tuple(mapping)
    if len(m) != E.n or m[E.n - 1] != E.n - 1:
        return False
    for (i, j), k in E.sums.items():
        k2 = E.sums.get((m[i], m[j]))
        if k2 is None or k2 != m[k]:
            return False
    return True


def compose(outer: Sequence[int], inner: Sequence[int]) -> tuple[int, ...]:
    return tuple(outer[x] for x in inner)


def power(mapping: Sequence[int], e: int) -> tuple[int, ...]:
    m = tuple(mapping)
    out = tuple(range(len(m)))
    for _ in range(e):
        out = compose(m, out)
    return out


def minimal_potency(mapping: Sequence[int]) -> Optional[int]:
    """Least n >= 2 with mapping^n == mapping, or None if no power returns."""
    m = tuple(mapping)
    seen = {}
    cur = m
    k = 1
    while cur not in seen:
        seen[cur] = k
        cur = compose(m, cur)
        k += 1
        if cur == m:
            return k
    return None


def potencies_up_to(mapping: Sequence[int], bound: int) -> list[int]:
    """All n in [2, bound] with mapping^n == mapping, each checked directly."""
    m = tuple(mapping)
    out = []
    cur = m
    for n in range(2, bound + 1):
        cur = compose(m, cur)
        if cur == m:
            out.append(n)
    return out


def kernel(E: FiniteEffectAlgebra, mapping: Sequence[int]) -> tuple[int, ...]:
    return tuple(a for a in range(E.n) if mapping[a] == 0)


def enumerate_endomorphisms(E: FiniteEffectAlgebra,
                            guard_nodes: int = 2_000_000) -> list[tuple[int, ...]]:
    """All endomorphisms, by backtracking over images in a linear extension.

    Images of complements are forced immediately; partial assignments are pruned
    by order preservation and by every fully assigned sum constraint.  Leaves are
    validated against the whole table.
    """
    n = E.n
    leq = E.order.leq
    comp = E.order.complement
    sums_by_elem: list[list[tuple[int, int, int]]] = [[] for _ in range(n)]
    for (i, j), k in E.sums.items():
        if i <= j:
            for e in {i, j, k}:
                sums_by_elem[e].append((i, j, k))

    by_height = sorted(range(n), key=lambda a: (sum(leq[b][a] for b in range(n)), a))
    order = [a for a in by_height if a not in (0, n - 1)]

    img = [-1] * n
    img[0] = 0
    img[n - 1] = n - 1
    results = []
    nodes = 0

    def consistent_after(e: int) -> bool:
        fe = img[e]
        for d in range(n):
            fd = img[d]
            if fd < 0 or d == e:
                continue
            if leq[d][e] and not leq[fd][fe]:
                return False
            if leq[e][d] and not leq[fe][fd]:
                return False
        for (i, j, k) in sums_by_elem[e]:
            fi, fj, fk = img[i], img[j], img[k]
            if fi < 0 or fj < 0 or fk < 0:
                continue
            if E.sums.get((fi, fj)) != fk:
                return False
        return True

    def rec(pos: int):
        nonlocal nodes
        if pos == len(order):
            m = tuple(img)
            if is_endomorphism(E, m):
                results.append(m)
            return
        e = order[pos]
        if img[e] >= 0:
            rec(pos + 1)
            return
        other = comp[e]
        for v in range(n):
            nodes += 1
            if nodes > guard_nodes:
                raise GuardExceeded(f"endomorphism search guarded at {guard_nodes} nodes")
            img[e] = v
            forced = comp[v]
            set_other = img[other] < 0
            if not set_other and img[other] != forced:
                img[e] = -1
                continue
            if set_other:
                img[other] = forced
            cells = (e, other) if set_other else (e,)
            if all(consistent_after(c) for c in cells):
                rec(pos + 1)
            img[e] = -1
            if set_other:
                img[other] = -1

    rec(0)
    return sorted(set(results))


@dataclass(frozen=True)
class OperatorProfile:
    mapping: tuple[int, ...]
    is_state_operator: bool          # tau^2 = tau
    minimal_potency: Optional[int]   # least n >= 2 with tau^n = tau
    is_strong: bool
    is_state_morphism: bool
    is_faithful: bool
    kernel: tuple[int, ...]
    has_esp: Optional[bool]          # None when no polytope was supplied

    def to_dict(self) -> dict:
        return {
            "map": list(self.mapping),
            "classification": {
                "is_state_operator": self.is_state_operator,
                "minimal_potency": self.minimal_potency,
                "is_strong": self.is_strong,
                "is_state_morphism": self.is_state_morphism,
                "is_faithful": self.is_faithful,
                "kernel": list(self.kernel),
                "has_esp": self.has_esp,
            },
        }


def is_strong_operator(E: FiniteEffectAlgebra, mapping: Sequence[int]) -> bool:
    """tau(tau(a) v tau(b)) = tau(a) v tau(b) whenever that join exists."""
    join = E.order.join
    for a in range(E.n):
        ta = mapping[a]
        for b in range(a, E.n):
            j = join[ta][mapping[b]]
            if j is not None and mapping[j] != j:
                return False
    return True


def preserves_existing_joins(E: FiniteEffectAlgebra, mapping: Sequence[int]) -> bool:
    join = E.order.join
    for a in range(E.n):
        for b in range(a, E.n):
            j = join[a][b]
            if j is None:
                continue
            if join[mapping[a]][mapping[b]] != mapping[j]:
                return False
    return True


def preserves_existing_meets(E: FiniteEffectAlgebra, mapping: Sequence[int]) -> bool:
    meet = E.order.meet
    for a in range(E.n):
        for b in range(a, E.n):
            m = meet[a][b]
            if m is None:
                continue
            if meet[mapping[a]][mapping[b]] != mapping[m]:
                return False
    return True


def check_esp(mapping: Sequence[int], P: StatePolytope) -> bool:
    """Extremal-state preservation: s o tau lands on a vertex for every vertex s.

    Vacuously true when there are no states at all.
    """
    for v in P.vertices:
        image = tuple(v[mapping[a]] for a in range(len(mapping)))
        if P.vertex_index(image) is None:
            return False
    return True


def classify_operator(E: FiniteEffectAlgebra, mapping: Sequence[int],
                      polytope: Optional[StatePolytope] = None) -> OperatorProfile:
    m = tuple(mapping)
    if not is_endomorphism(E, m):
        raise ValueError("not an endomorphism; classification undefined")
    idem = compose(m, m) == m
    strong = is_strong_operator(E, m)
    morphism = idem and preserves_existing_joins(E, m)
    ker = kernel(E, m)
    esp = check_esp(m, polytope) if polytope is not None else None
    return OperatorProfile(
        mapping=m,
        is_state_operator=idem,
        minimal_potency=minimal_potency(m),
        is_strong=strong,
        is_state_morphism=morphism,
        is_faithful=ker == (0,),
        kernel=ker,
        has_esp=esp,
    )


@dataclass(frozen=True)
class InducedStateMap:
    """Precomposition with tau, restricted to the polytope vertices."""

    vertex_images: tuple[tuple[Fraction, ...], ...]
    vertex_to_vertex: Optional[tuple[int, ...]]   # set when every image is a vertex
    potency: Optional[int]
    affine_probes: int


def induced_state_map(E: FiniteEffectAlgebra, mapping: Sequence[int],
                      P: StatePolytope, n: Optional[int] = None,
                      seed: int = 0, affine_probes: int = 100) -> InducedStateMap:
    """The map s -> s o tau on the state polytope, with its contracts verified.

    Verifies that vertex images are states, that the value set of the image is
    contained in the value set of the source at every vertex, that the potency
    carries over (g^n = g on vertices), and affinity on a randomized suite of
    rational convex combinations.
    """
    m = tuple(mapping)
    if n is None:
        n = minimal_potency(m)

    def precompose(vec):
        return tuple(vec[m[a]] for a in range(E.n))

    images = []
    for v in P.vertices:
        img = precompose(v)
        if not is_state(E, img):
            raise AssertionError("vertex image violates the state constraints")
        if not set(img) <= set(v):
            raise AssertionError("image value set escapes the source value set")
        if discrete_profile(img) % 1:  # always integral; keeps the call exercised
            raise AssertionError("discrete profile must be an integer")
        images.append(img)

    if n is not None:
        mn = power(m, n)
        for v in P.vertices:
            if tuple(v[mn[a]] for a in range(E.n)) != precompose(v):
                raise AssertionError(f"induced map is not {n}-potent on vertices")

    # Affinity probes run on a common-denominator integer scaling: comparing the
    # scaled numerators is exact equality of the rational vectors.
    rng = random.Random(seed)
    k = len(P.vertices)
    probes = 0
    if k and affine_probes:
        scale = 1
        for v in P.vertices:
            for x in v:
                scale = scale * x.denominator // gcd(scale, x.denominator)
        iverts = [tuple(int(x * scale) for x in v) for v in P.vertices]
        iimages = [tuple(iv[m[a]] for a in range(E.n)) for iv in iverts]
        rng_el = range(E.n)
        for _ in range(affine_probes):
            w = [rng.getrandbits(4) + 1 for _ in range(k)]
            point = [sum(wi * iv[a] for wi, iv in zip(w, iverts)) for a in rng_el]
            lhs = [point[m[a]] for a in rng_el]
            rhs = [sum(wi * img[a] for wi, img in zip(w, iimages)) for a in rng_el]
            if lhs != rhs:
                raise AssertionError("induced map failed an affinity probe")
            probes += 1

    v2v = []
    for img in images:
        idx = P.vertex_index(img)
        if idx is None:
            v2v = None
            break
        v2v.append(idx)
    return InducedStateMap(
        vertex_images=tuple(images),
        vertex_to_vertex=tuple(v2v) if v2v is not None else None,
        potency=n,
        affine_probes=probes,
    )


def coordinate_repeat_maps(E: FiniteEffectAlgebra) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """For a square product F x F: (a,b) -> (a,a) and (a,b) -> (b,b)."""
    tuples = E.meta.get("tuples")
    sizes = E.meta.get("factor_sizes")
    if not tuples or not sizes or len(sizes) != 2 or sizes[0] != sizes[1]:
        raise ValueError("needs a product of two identical factors")
    index = {t: i for i, t in enumerate(tuples)}
    tau1 = tuple(index[(a, a)] for (a, _b) in tuples)
    tau2 = tuple(index[(b, b)] for (_a, b) in tuples)
    return tau1, tau2


def coordinate_swap_map(E: FiniteEffectAlgebra) -> tuple[int, ...]:
    tuples = E.meta.get("tuples")
    sizes = E.meta.get("factor_sizes")
    if not tuples or not sizes or len(sizes) != 2 or sizes[0] != sizes[1]:
        raise ValueError("needs a product of two identical factors")
    index = {t: i for i, t in enumerate(tuples)}
    return tuple(index[(b, a)] for (a, b) in tuples)


def subalgebra_table(E: FiniteEffectAlgebra, members: Sequence[int]) -> FiniteEffectAlgebra:
    """The induced algebra on a sum-closed, complement-closed subset containing 0, 1."""
    from .core import validate_axioms
    mem = sorted(set(members))
    if mem[0] != 0 or mem[-1] != E.n - 1:
        raise ValueError("a subalgebra must contain 0 and 1 at the extremes")
    pos = {a: i for i, a in enumerate(mem)}
    triples = []
    for (i, j), k in E.sums.items():
        if i in pos and j in pos:
            if k not in pos:
                raise ValueError("subset is not closed under defined sums")
            triples.append((pos[i], pos[j], pos[k]))
    labels = [E.labels[a] for a in mem]
    return validate_axioms(len(mem), triples, labels)


def mv_operator_agreement(A, mapping, polytope: Optional[StatePolytope] = None) -> dict:
    """One map, both readings: MV internal-state axioms vs effect-side classes."""
    from .mv import is_mv_state_morphism, mv_state_axioms
    E = A.base
    m = tuple(mapping)
    axioms = mv_state_axioms(A, m)
    endo = is_endomorphism(E, m)
    idem = compose(m, m) == m
    report = {
        "axioms": axioms,
        "mv_state_operator": all(axioms.values()),
        "is_endomorphism": endo,
        "strong_state_operator": endo and is_strong_operator(E, m),
        "mv_state_morphism": is_mv_state_morphism(A, m),
        "state_morphism": endo and idem and preserves_existing_joins(E, m),
    }
    if polytope is not None:
        report["esp"] = check_esp(m, polytope) if endo else None
    return report


def scan_mv_operator_agreement(A, polytope: StatePolytope) -> dict:
    """Exhaustive agreement check over every unary self-map of an MV algebra.

    Asserts, for each map, that the MV internal-state axioms hold exactly when
    the map is a strong state-operator of the underlying effect algebra, and
    that idempotent MV endomorphisms coincide with join-preserving idempotent
    effect endomorphisms (which must then preserve extremal states).

    Maps that move 0 or 1 are covered by per-pin certificates: a violated axiom
    instance depending only on tau(0), tau(1) disqualifies both readings at
    once, so the per-element enumeration can pin those two values.
    """
    E = A.base
    n = E.n
    one = n - 1
    star = A.star
    oplus = A.oplus
    odot = A.odot
    sums_get = E.sums.get

    for t0 in range(n):
        for t1 in range(n):
            if t0 == 0 and t1 == one:
                continue
            mv_killed = t0 != 0 or star[t0] != t1
            eff_killed = t1 != one or sums_get((t0, t0)) != t0
            if not (mv_killed and eff_killed):
                raise AssertionError(f"pin certificate failed at ({t0}, {t1})")

    zt = tuple(tuple(odot[y][star[odot[x][y]]] for y in range(n)) for x in range(n))
    sums_list = sorted(((i, j, k) for (i, j), k in E.sums.items() if i <= j),
                       key=lambda t: (t[0] == 0, t))
    join = E.order.join
    join_pairs = tuple((a, b, join[a][b]) for a in range(n) for b in range(a, n)
                       if join[a][b] is not None)
    rng_n = range(n)

    def ax2(m):
        for x in rng_n:
            if m[star[x]] != star[m[x]]:
                return False
        return True

    def ax34(m):
        for x in rng_n:
            mx = m[x]
            zx = zt[x]
            orow = oplus[x]
            omx = oplus[mx]
            for y in rng_n:
                if m[orow[y]] != omx[m[zx[y]]]:
                    return False
        for x in rng_n:
            omx = oplus[m[x]]
            for y in rng_n:
                v = omx[m[y]]
                if m[v] != v:
                    return False
        return True

    def endo(m):
        for i, j, k in sums_list:
            if sums_get((m[i], m[j])) != m[k]:
                return False
        return True

    def strong31(m):
        for a in rng_n:
            ja = join[m[a]]
            for b in range(a, n):
                v = ja[m[b]]
                if v is not None and m[v] != v:
                    return False
        return True

    def oplus_pres(m):
        for x in rng_n:
            orow = oplus[x]
            omx = oplus[m[x]]
            for y in rng_n:
                if m[orow[y]] != omx[m[y]]:
                    return False
        return True

    def joins_pres(m):
        for a, b, j in join_pairs:
            if join[m[a]][m[b]] != m[j]:
                return False
        return True

    import itertools
    stats = {"scanned": 0, "endomorphisms": 0, "mv_state_operators": 0,
             "state_morphisms": 0, "esp_confirmed": 0}
    prefix = (0,)
    suffix = (one,)
    for mid in itertools.product(rng_n, repeat=n - 2):
        m = prefix + mid + suffix
        stats["scanned"] += 1
        a2 = ax2(m)
        en = endo(m)
        mv_state = a2 and ax34(m)
        strong = en and strong31(m)
        if mv_state != strong:
            raise AssertionError(f"state-operator readings disagree at {m}")
        if en:
            stats["endomorphisms"] += 1
        if mv_state:
            stats["mv_state_operators"] += 1
        if a2 or en:
            idem = all(m[m[x]] == m[x] for x in rng_n)
            mv_morph = a2 and idem and (m[0] == 0) and oplus_pres(m)
            eff_morph = en and idem and joins_pres(m)
            if mv_morph != eff_morph:
                raise AssertionError(f"state-morphism readings disagree at {m}")
            if eff_morph:
                stats["state_morphisms"] += 1
                if not check_esp(m, polytope):
                    raise AssertionError(f"state-morphism without ESP at {m}")
                stats["esp_confirmed"] += 1
    return stats


@dataclass(frozen=True)
class LawResult:
    applicable: bool
    holds: Optional[bool]
    witness: Optional[tuple] = None


def operator_law_report(E: FiniteEffectAlgebra, mapping: Sequence[int]) -> dict:
    """Structural laws of an idempotent endomorphism, one verdict per law.

    Laws: the image is the fixed-point set and a subalgebra (with strong
    operators keeping existing joins of image elements inside it); RDP passes to
    the image; faithful operators are strictly monotone and fix-or-incomparable;
    on linear algebras faithful forces the identity; on antilattices every
    endomorphism preserves existing joins and meets; faithful idempotents are
    strong; strong operators fix existing meets of image elements.  An extra
    informational entry records whether all existing meets happen to be
    preserved (not asserted anywhere).
    """
    from .structure import check_rdp
    m = tuple(mapping)
    if compose(m, m) != m:
        raise ValueError("law report expects an idempotent endomorphism")
    n = E.n
    leq = E.order.leq
    join = E.order.join
    meet = E.order.meet
    out: dict[str, LawResult] = {}

    image = sorted({m[a] for a in range(n)})
    fixed = sorted(a for a in range(n) if m[a] == a)
    out["image_is_fixed_point_set"] = LawResult(True, image == fixed,
                                                None if image == fixed else (image, fixed))

    sub_ok = True
    wit = None
    for a in image:
        if E.order.complement[a] not in image:
            sub_ok, wit = False, (a,)
            break
        for b in image:
            k = E.sums.get((a, b))
            if k is not None and k not in image:
                sub_ok, wit = False, (a, b, k)
                break
        if not sub_ok:
            break
    out["image_is_subalgebra"] = LawResult(True, sub_ok, wit)

    strong = is_strong_operator(E, m)
    if strong:
        holds = True
        wit = None
        for a in range(n):
            for b in range(a, n):
                j = join[m[a]][m[b]]
                if j is not None and j not in image:
                    holds, wit = False, (a, b, j)
        out["strong_joins_land_in_image"] = LawResult(True, holds, wit)
        holds = True
        wit = None
        for a in range(n):
            for b in range(a, n):
                mt = meet[m[a]][m[b]]
                if mt is not None and m[mt] != mt:
                    holds, wit = False, (a, b, mt)
        out["strong_fixes_image_meets"] = LawResult(True, holds, wit)
    else:
        out["strong_joins_land_in_image"] = LawResult(False, None)
        out["strong_fixes_image_meets"] = LawResult(False, None)

    rdp, _w = check_rdp(E)
    if rdp and sub_ok:
        sub = subalgebra_table(E, image)
        sub_rdp, sub_w = check_rdp(sub)
        out["image_inherits_rdp"] = LawResult(True, sub_rdp, sub_w)
    else:
        out["image_inherits_rdp"] = LawResult(False, None)

    faithful = kernel(E, m) == (0,)
    if faithful:
        holds = True
        wit = None
        for a in range(n):
            for b in range(n):
                if a != b and leq[a][b]:
                    if not (leq[m[a]][m[b]] and m[a] != m[b]):
                        holds, wit = False, (a, b)
        out["faithful_strictly_monotone"] = LawResult(True, holds, wit)

        holds = True
        wit = None
        for a in range(n):
            if m[a] != a and (leq[a][m[a]] or leq[m[a]][a]):
                holds, wit = False, (a,)
        out["faithful_fixed_or_incomparable"] = LawResult(True, holds, wit)

        out["faithful_implies_strong"] = LawResult(True, strong)

        if E.is_linear():
            ident = m == tuple(range(n))
            out["linear_faithful_identity"] = LawResult(True, ident)
        else:
            out["linear_faithful_identity"] = LawResult(False, None)
    else:
        for key in ("faithful_strictly_monotone", "faithful_fixed_or_incomparable",
                    "faithful_implies_strong", "linear_faithful_identity"):
            out[key] = LawResult(False, None)

    from .structure import classify_lattice
    if classify_lattice(E) in ("antilattice", "both"):
        holds = preserves_existing_joins(E, m) and preserves_existing_meets(E, m)
        out["antilattice_preserves_joins_meets"] = LawResult(True, holds)
    else:
        out["antilattice_preserves_joins_meets"] = LawResult(False, None)

    out["all_meets_preserved_info"] = LawResult(True, preserves_existing_meets(E, m))
    return out
