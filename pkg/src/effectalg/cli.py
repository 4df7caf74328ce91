"""Command-line front end.

Exit codes: 0 all checks passed, 1 a check failed (including axiom violations),
2 usage errors, malformed files, or exceeded size guards.
"""

from __future__ import annotations

import argparse
import sys

from .core import AxiomViolation, GuardExceeded
from .io import (dump_report, frac_to_str, load_group, load_simplex, load_structure,
                 polytope_to_dict)
from .operators import (classify_operator, enumerate_endomorphisms, induced_state_map,
                        minimal_potency, potencies_up_to)
from .states import compute_states, discrete_profile, is_order_determining
from .structure import enumerate_ideals, structure_report
from .suite import run_suite


def _parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="effectalg",
                                description="finite effect algebras, exactly")
    p.add_argument("--output", help="write the JSON report here instead of stdout")
    sub = p.add_subparsers(dest="command", required=True)

    v = sub.add_parser("validate", help="validate a structure file")
    v.add_argument("--input", required=True)

    a = sub.add_parser("analyze", help="RDP, interpolation, lattice class, ideals")
    a.add_argument("--input", required=True)
    a.add_argument("--guard-elements", type=int, default=16)

    s = sub.add_parser("states", help="state polytope, ordering, discreteness")
    s.add_argument("--input", required=True)

    o = sub.add_parser("operators", help="enumerate and classify endomorphisms")
    o.add_argument("--input", required=True)
    o.add_argument("--n", type=int, default=None,
                   help="also report whether each operator is n-potent")
    o.add_argument("--guard-endos", type=int, default=2_000_000)
    o.add_argument("--seed", type=int, default=0)

    d = sub.add_parser("duality", help="round-trip report for a simplex file")
    d.add_argument("--input", required=True)
    d.add_argument("--seed", type=int, default=0)

    ps = sub.add_parser("paper-suite", help="run the standing verification suite")
    ps.add_argument("--seed", type=int, default=0)
    return p


def cmd_validate(args) -> tuple[dict, int]:
    try:
        E = load_structure(args.input)
    except AxiomViolation as v:
        return {"valid": False, "axiom": v.axiom, "witness": list(v.witness),
                "message": v.message}, 1
    return {"valid": True, "elements": E.n, "sums": len(E.sums)}, 0


def cmd_analyze(args) -> tuple[dict, int]:
    E = load_structure(args.input)
    rep = structure_report(E, guard_elements=args.guard_elements)
    out = rep.to_dict()
    try:
        out["ideals"] = [
            {"members": list(i), **flags}
            for i, flags in enumerate_ideals(E, guard_elements=args.guard_elements)]
    except GuardExceeded:
        out["ideals"] = None
    return out, 0


def cmd_states(args) -> tuple[dict, int]:
    E = load_structure(args.input)
    P = compute_states(E)
    out = polytope_to_dict(P)
    if P.empty:
        out["note"] = "no states"
        out["order_determining"] = False
        out["separating"] = False
    else:
        rep = is_order_determining(E, P)
        out["order_determining"] = rep.order_determining
        out["separating"] = rep.separating
        out["discrete_profiles"] = [discrete_profile(v) for v in P.vertices]
    return out, 0


def cmd_operators(args) -> tuple[dict, int]:
    E = load_structure(args.input)
    P = compute_states(E)
    endos = enumerate_endomorphisms(E, guard_nodes=args.guard_endos)
    items = []
    for m in endos:
        prof = classify_operator(E, m, P)
        entry = prof.to_dict()
        if args.n is not None:
            entry["classification"][f"is_{args.n}_potent"] = (
                args.n in potencies_up_to(m, args.n))
        n = prof.minimal_potency
        if n is not None and not P.empty:
            ind = induced_state_map(E, m, P, n=n, seed=args.seed)
            entry["induced_vertex_map"] = (
                list(ind.vertex_to_vertex) if ind.vertex_to_vertex is not None else None)
        items.append(entry)
    return {"count": len(endos), "operators": items}, 0


def cmd_duality(args) -> tuple[dict, int]:
    from .duality import evaluation_map, round_trip_check
    sx, g = load_simplex(args.input)
    rep = round_trip_check(sx, g, seed=args.seed)
    ev = evaluation_map(sx)
    out = rep.to_dict()
    out["evaluation_bijection"] = ev.bijection
    out["vertices"] = list(sx.labels)
    return out, 0 if rep.passed and ev.bijection else 1


def cmd_paper_suite(args) -> tuple[dict, int]:
    results = run_suite(seed=args.seed)
    failed = [r.name for r in results if not r.passed]
    out = {"checks": [r.to_dict() for r in results],
           "passed": len(results) - len(failed),
           "failed": failed}
    return out, 0 if not failed else 1


def main(argv=None) -> int:
    args = _parser().parse_args(argv)
    handlers = {
        "validate": cmd_validate,
        "analyze": cmd_analyze,
        "states": cmd_states,
        "operators": cmd_operators,
        "duality": cmd_duality,
        "paper-suite": cmd_paper_suite,
    }
    try:
        report, code = handlers[args.command](args)
    except GuardExceeded as g:
        print(f"guard exceeded: {g}", file=sys.stderr)
        return 2
    except (OSError, ValueError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    text = dump_report(report, args.output)
    if not args.output:
        print(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
