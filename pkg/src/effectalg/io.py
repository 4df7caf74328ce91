"""JSON interchange: structure files, group specs, simplex files, reports.

Rationals travel as strings ("3/10"); nothing is ever parsed through floats.
"""

from __future__ import annotations

import json
from fractions import Fraction
from pathlib import Path
from typing import Union

from .catalog import CatalogSpec, build_catalog
from .core import FiniteEffectAlgebra, validate_axioms
from .duality import FiniteSimplex, VertexMap
from .pogroup import IntervalAlgebra, PoGroupSpec
from .states import StatePolytope


def frac_to_str(f: Fraction) -> str:
    f = Fraction(f)
    return str(f)


def str_to_frac(s) -> Fraction:
    if isinstance(s, int):
        return Fraction(s)
    if isinstance(s, str):
        return Fraction(s)
    raise ValueError(f"expected a rational as 'p/q' or int, got {s!r}")


def structure_to_dict(E: FiniteEffectAlgebra) -> dict:
    return {
        "n": E.n,
        "zero": 0,
        "one": E.n - 1,
        "sums": [[i, j, k] for (i, j), k in sorted(E.sums.items())],
        "labels": list(E.labels),
    }


def structure_from_dict(data: dict) -> FiniteEffectAlgebra:
    if "catalog" in data:
        return build_catalog(CatalogSpec.from_dict(data["catalog"]))
    n = int(data["n"])
    if data.get("zero", 0) != 0 or data.get("one", n - 1) != n - 1:
        raise ValueError("structure files put zero at index 0 and the unit at n-1")
    triples = [tuple(int(x) for x in t) for t in data["sums"]]
    labels = data.get("labels")
    return validate_axioms(n, triples, labels)


def load_structure(path: Union[str, Path]) -> FiniteEffectAlgebra:
    return structure_from_dict(json.loads(Path(path).read_text()))


def save_structure(E: FiniteEffectAlgebra, path: Union[str, Path]) -> None:
    Path(path).write_text(json.dumps(structure_to_dict(E), indent=2, sort_keys=True))


def group_from_dict(data: dict) -> IntervalAlgebra:
    spec = PoGroupSpec(rank=int(data["rank"]), scalars=data["scalars"],
                       order=data["order"])
    unit = tuple(str_to_frac(v) for v in data["unit"])
    return IntervalAlgebra(spec, unit)


def load_group(path: Union[str, Path]) -> IntervalAlgebra:
    return group_from_dict(json.loads(Path(path).read_text()))


def simplex_from_dict(data: dict) -> tuple[FiniteSimplex, VertexMap]:
    labels = tuple(str(v) for v in data["vertices"])
    image = tuple(int(x) for x in data["g"])
    if len(image) != len(labels):
        raise ValueError("vertex map length must match the vertex count")
    return FiniteSimplex(labels), VertexMap(image, int(data.get("n", 2)))


def load_simplex(path: Union[str, Path]) -> tuple[FiniteSimplex, VertexMap]:
    return simplex_from_dict(json.loads(Path(path).read_text()))


def polytope_to_dict(P: StatePolytope) -> dict:
    return {
        "size": P.size,
        "free_dim": P.free_dim,
        "vertices": [[frac_to_str(x) for x in v] for v in P.vertices],
    }


def dump_report(report: dict, path: Union[str, Path, None]) -> str:
    text = json.dumps(report, indent=2, sort_keys=True)
    if path:
        Path(path).write_text(text + "\n")
    return text
