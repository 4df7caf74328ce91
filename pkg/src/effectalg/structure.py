"""Structural classification: Riesz decomposition, interpolation, lattice type, ideals."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .core import FiniteEffectAlgebra, GuardExceeded


@dataclass(frozen=True)
class StructureReport:
    rdp: bool
    rdp_witness: Optional[tuple]
    interpolation: bool
    interpolation_witness: Optional[tuple]
    lattice_class: str        # "lattice", "antilattice", "both", "neither"
    ideal_count: int

    def to_dict(self) -> dict:
        return {
            "rdp": self.rdp,
            "rdp_witness": list(self.rdp_witness) if self.rdp_witness else None,
            "interpolation": self.interpolation,
            "interpolation_witness": (list(self.interpolation_witness)
                                      if self.interpolation_witness else None),
            "lattice_class": self.lattice_class,
            "ideal_count": self.ideal_count,
        }


def refine_quadruple(E: FiniteEffectAlgebra, x1: int, x2: int, y1: int, y2: int):
    """A 2x2 refinement of x1 + x2 = y1 + y2, or None.

    Searches c11 <= x1, y1 and completes the other three cells by subtraction.
    """
    leq = E.order.leq
    sums = E.sums
    sub = E.order.sub
    for c11 in range(E.n):
        if not (leq[c11][x1] and leq[c11][y1]):
            continue
        c12 = sub[(x1, c11)]
        c21 = sub[(y1, c11)]
        if not leq[c21][x2]:
            continue
        c22 = sub[(x2, c21)]
        if sums.get((c12, c22)) == y2:
            return (c11, c12, c21, c22)
    return None


def check_rdp(E: FiniteEffectAlgebra):
    """Riesz decomposition as (holds, witness).

    Evaluates both standard formulations (2x2 refinement of equal sums, and
    splitting of x <= y1 + y2) and insists they agree; the returned witness is an
    unrefinable quadruple (x1, x2, y1, y2) when the property fails.
    """
    first, w1 = _rdp_refinement(E)
    second, w2 = _rdp_splitting(E)
    if first != second:
        raise AssertionError(
            f"RDP formulations disagree: refinement={first}, splitting={second}")
    return first, (w1 if not first else None)


def _rdp_refinement(E: FiniteEffectAlgebra):
    by_sum: dict[int, list[tuple[int, int]]] = {}
    for (i, j), k in E.sums.items():
        if i <= j:
            by_sum.setdefault(k, []).append((i, j))
    for k, pairs in by_sum.items():
        for x1, x2 in pairs:
            for y1, y2 in pairs:
                if refine_quadruple(E, x1, x2, y1, y2) is None:
                    return False, (x1, x2, y1, y2)
    return True, None


def _rdp_splitting(E: FiniteEffectAlgebra):
    leq = E.order.leq
    sums = E.sums
    sub = E.order.sub
    for (y1, y2), top in E.sums.items():
        if y1 > y2:
            continue
        for x in range(E.n):
            if not leq[x][top]:
                continue
            for x1 in range(E.n):
                if leq[x1][x] and leq[x1][y1] and leq[sub[(x, x1)]][y2]:
                    break
            else:
                return False, (x, y1, y2)
    return True, None


def verify_rdp_witness(E: FiniteEffectAlgebra, witness: tuple) -> bool:
    """One-shot confirmation that a reported quadruple really has no refinement."""
    x1, x2, y1, y2 = witness
    if E.sums.get((x1, x2)) != E.sums.get((y1, y2)) or E.sums.get((x1, x2)) is None:
        return False
    return refine_quadruple(E, x1, x2, y1, y2) is None


def check_interpolation(E: FiniteEffectAlgebra):
    """Finite interpolation: x1, x2 <= y1, y2 admits a z between.

    On a finite poset this is the full content of the countable version.
    Returns (holds, witness quadruple or None).
    """
    n = E.n
    leq = E.order.leq
    up = [sum(1 << b for b in range(n) if leq[a][b]) for a in range(n)]
    down = [sum(1 << b for b in range(n) if leq[b][a]) for a in range(n)]
    for x1 in range(n):
        for x2 in range(x1, n):
            cover = up[x1] & up[x2]
            ys = [y for y in range(n) if cover >> y & 1]
            for i, y1 in enumerate(ys):
                for y2 in ys[i:]:
                    if not cover & down[y1] & down[y2]:
                        return False, (x1, x2, y1, y2)
    return True, None


def classify_lattice(E: FiniteEffectAlgebra) -> str:
    """Classify into lattice / antilattice / both / neither from the order tables."""
    n = E.n
    o = E.order
    is_lattice = True
    is_anti = True
    for a in range(n):
        for b in range(a + 1, n):
            comparable = o.leq[a][b] or o.leq[b][a]
            has_join = o.join[a][b] is not None
            has_meet = o.meet[a][b] is not None
            if not (has_join and has_meet):
                is_lattice = False
            if not comparable and (has_join or has_meet):
                is_anti = False
    if is_lattice and is_anti:
        return "both"
    if is_lattice:
        return "lattice"
    if is_anti:
        return "antilattice"
    return "neither"


def enumerate_ideals(E: FiniteEffectAlgebra, tau=None, guard_elements: int = 16):
    """All ideals (downward closed, closed under defined sums), with flags.

    Each entry is (ideal tuple, {"riesz": bool, "tau_ideal": bool|None}).
    """
    n = E.n
    if n > guard_elements:
        raise GuardExceeded(f"ideal enumeration guarded at {guard_elements} elements")
    leq = E.order.leq
    ideals = []
    for mask in range(1, 1 << n):
        if not mask & 1:  # 0 belongs to every ideal
            continue
        members = [a for a in range(n) if mask >> a & 1]
        ok = all(not leq[b][a] or mask >> b & 1 for a in members for b in range(n))
        if ok:
            for a in members:
                for b in members:
                    k = E.sums.get((a, b))
                    if k is not None and not mask >> k & 1:
                        ok = False
                        break
                if not ok:
                    break
        if ok:
            flags = {"riesz": is_riesz_ideal(E, members)}
            if tau is not None:
                flags["tau_ideal"] = all(mask >> tau[a] & 1 for a in members)
            ideals.append((tuple(members), flags))
    return ideals


def is_riesz_ideal(E: FiniteEffectAlgebra, ideal) -> bool:
    """x in I with x <= a + b must split as x = a1 + b1, a1, b1 in I, a1 <= a, b1 <= b."""
    leq = E.order.leq
    sub = E.order.sub
    iset = set(ideal)
    for x in ideal:
        for (a, b), top in E.sums.items():
            if a > b or not leq[x][top]:
                continue
            for a1 in ideal:
                if leq[a1][x] and leq[a1][a]:
                    b1 = sub[(x, a1)]
                    if b1 in iset and leq[b1][b]:
                        break
            else:
                return False
    return True


def structure_report(E: FiniteEffectAlgebra, guard_elements: int = 16) -> StructureReport:
    rdp, rdp_w = check_rdp(E)
    interp, interp_w = check_interpolation(E)
    lattice_class = classify_lattice(E)
    try:
        ideal_count = len(enumerate_ideals(E, guard_elements=guard_elements))
    except GuardExceeded:
        ideal_count = -1
    return StructureReport(rdp, rdp_w, interp, interp_w, lattice_class, ideal_count)
