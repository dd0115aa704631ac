"""Command-line front end.

Graph arguments are paths to ``polgraph 1`` files or JSON certificates;
``-`` reads standard input.  Exit status: 0 success, 1 a verification
failed, 2 bad input.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

from . import ops
from .bounds import (appendix_bounds, audit, bound_b, bound_br_terms, homotopic_bound,
                     lower_bound)
from .constructions.family import asymptotic_family
from .constructions.monographs import homotopic_optimal, lower_bound_graph
from .constructions.optimal import genus_optimal
from .constructions.polygon import standard_monograph
from .constructions.steiner import ks_polarization
from .core import (PolarizedGraph, find_complete_walk, format_dart, parse_dart,
                   reduce_to_condition_C, stats, trace_walks)
from .errors import InputError, PolwalkError, PreconditionError, StructuralError
from .search import SearchBudget, brute_force_max_vr, random_polarized
from .textio import dumps, loads

CERT_VERSION = 1


# -- I/O -------------------------------------------------------------------


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None


def _parse_graph_text(text: str) -> tuple[PolarizedGraph, Optional[dict]]:
    if text.lstrip().startswith("{"):
        try:
            cert = json.loads(text)
            lines = cert["polgraph"]
        except (json.JSONDecodeError, KeyError, TypeError):
            raise InputError("JSON input is not a certificate with a 'polgraph' field") from None
        return loads("\n".join(lines)), cert
    return loads(text), None


def read_graph(path: str) -> PolarizedGraph:
    return _parse_graph_text(_read_text(path))[0]


def _write(text: str, path: Optional[str]) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
        return
    try:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)
    except OSError as exc:
        raise InputError(f"cannot write {path}: {exc.strerror}") from None


# -- certificates ----------------------------------------------------------


def _stats_dict(G: PolarizedGraph) -> dict:
    st = stats(G)
    return {
        "S": st.S, "A": st.A, "A_r": st.A_r, "F": st.F, "chi": st.chi,
        "gamma": st.gamma, "V": str(st.V), "V_r": str(st.V_r),
        "ell": {str(k): v for k, v in st.ell.items()}, "parity": st.parity,
        "is_ordinary": st.is_ordinary, "satisfies_C": st.satisfies_C,
        "has_mc": st.has_mc, "mc_length": st.mc_length,
        "degrees": list(st.degrees),
    }


def certificate(G: PolarizedGraph, recipe: Optional[dict] = None) -> dict:
    """Self-describing JSON document for ``G`` (see :func:`verify_certificate`)."""
    w = trace_walks(G)
    mc = w.complete_walk
    cert = {
        "version": CERT_VERSION,
        "polgraph": dumps(G).splitlines(),
        "stats": _stats_dict(G),
        "walk_lengths": [walk.length for walk in w.walks],
        "mc_itinerary": None if mc is None else mc.itinerary(G),
        "audit": audit(stats(G, w)).as_dict(),
    }
    if recipe is not None:
        cert["recipe"] = recipe
    return cert


def verify_certificate(cert: dict) -> list[str]:
    """Recompute every field from the embedded graph; return the mismatches."""
    if cert.get("version") != CERT_VERSION:
        return [f"unsupported version {cert.get('version')!r}"]
    G = loads("\n".join(cert["polgraph"]))
    fresh = certificate(G, cert.get("recipe"))
    problems = [key for key in fresh if fresh[key] != cert.get(key)]
    recipe = cert.get("recipe")
    if isinstance(recipe, dict) and "genus" in recipe:
        if recipe["genus"] != fresh["stats"]["gamma"]:
            problems.append("recipe genus")
    return problems


# -- subcommands -----------------------------------------------------------


def _yes(flag: bool) -> str:
    return "yes" if flag else "no"


def cmd_info(args) -> int:
    G = read_graph(args.graph)
    st = stats(G)
    mc = f"yes (length {st.mc_length})" if st.has_mc else "no"
    print(f"S={st.S} A={st.A} F={st.F} γ={st.gamma} V={st.V} V_r={st.V_r} "
          f"A_r={st.A_r} χ={st.chi}")
    print(f"complete walk: {mc}")
    print(f"ordinary: {_yes(st.is_ordinary)}  condition (C): {_yes(st.satisfies_C)}")
    print("walk lengths: " + " ".join(f"{k}x{v}" for k, v in st.ell.items()))
    return 0


def cmd_walks(args) -> int:
    G = read_graph(args.graph)
    w = trace_walks(G)
    for i, walk in enumerate(w.walks):
        tag = " MC" if i == w.complete_index else ""
        darts = " ".join(format_dart(d) for d in walk.darts)
        print(f"walk {i} length {walk.length}{tag}: {darts}")
    return 0


def cmd_check_complete(args) -> int:
    G = read_graph(args.graph)
    found = find_complete_walk(G)
    if found.walk is None:
        print(f"no complete walk ({found.steps} steps)")
        return 1
    print(f"complete walk of length {found.walk.length} ({found.steps} steps)")
    print("itinerary: " + " ".join(map(str, found.walk.itinerary(G))))
    return 0


def cmd_reduce(args) -> int:
    G = reduce_to_condition_C(read_graph(args.graph))
    _write(dumps(G), args.output)
    return 0


def cmd_bounds(args) -> int:
    g = args.genus
    if g < 0:
        raise InputError("genus must be non-negative")
    print(f"b({g}) = {bound_b(g):.6f}")
    if g >= 1:
        br = bound_br_terms(g)
        terms = ", ".join(str(t) for t in br.terms)
        print(f"b_r({g}) = {br.value}  terms [{terms}]  attained by {list(br.attained_by)}")
        print(f"lower bound = {lower_bound(g)}")
        print("homotopic caps (S: edges, valence):")
        for S in range(1, 11):
            edges, val = homotopic_bound(S, g)
            print(f"  S={S}: {edges} {val}")
    B, C, C2 = appendix_bounds(g)
    print(f"B={B} C={C} C2={C2}")
    return 0


def _construct(args) -> tuple[PolarizedGraph, dict]:
    fam = args.family
    p = args.params
    need = {"monograph": 1, "homotopic": 2, "star": 1, "optimal": 1, "ks": 1, "family": 1}[fam]
    if len(p) != need:
        raise InputError(f"construct {fam} takes {need} integer argument(s)")
    if fam == "monograph":
        return standard_monograph(p[0]), {"kind": "monograph", "genus": p[0]}
    if fam == "homotopic":
        return homotopic_optimal(p[0], p[1]), {"kind": "homotopic", "S": p[0], "genus": p[1]}
    if fam == "star":
        return lower_bound_graph(p[0]), {"kind": "star", "genus": p[0]}
    if fam == "optimal":
        return genus_optimal(p[0]), {"kind": "optimal", "genus": p[0]}
    if fam == "ks":
        return ks_polarization(p[0]), {"kind": "ks", "S": p[0]}
    G, recipe = asymptotic_family(p[0], args.base) if args.base else asymptotic_family(p[0])
    return G, recipe.as_dict()


def cmd_construct(args) -> int:
    G, recipe = _construct(args)
    if args.cert:
        _write(json.dumps(certificate(G, recipe), indent=1) + "\n", args.cert)
    if args.json:
        _write(json.dumps(certificate(G, recipe), indent=1) + "\n", args.output)
    else:
        _write(dumps(G), args.output)
    return 0


def _ints(tokens: Sequence[str]) -> list[int]:
    try:
        return [int(t) for t in tokens]
    except ValueError:
        raise InputError(f"expected integers, got {' '.join(tokens)}") from None


def cmd_op(args) -> int:
    name, G, rest = args.operation, read_graph(args.graph), args.params
    if name == "contract":
        (e,) = _ints(rest) if len(rest) == 1 else _arity(name, 1)
        r = ops.contract_edge(G, e)
    elif name == "blowup":
        v, i, j = _ints(rest) if len(rest) == 3 else _arity(name, 3)
        r = ops.blow_up_elementary(G, v, (i, j))
    elif name == "surgery":
        if len(rest) != 3:
            _arity(name, 3)
        r = ops.surgery(G, _ints(rest[:1])[0], parse_dart(rest[1]), parse_dart(rest[2]))
    elif name == "subdivide":
        (e,) = _ints(rest) if len(rest) == 1 else _arity(name, 1)
        r = ops.subdivide(G, e)
    elif name == "parallel":
        if not rest:
            _arity(name, 1)
        r = ops.add_parallel_edge(G, [parse_dart(t) for t in rest])
    elif name == "double":
        if len(rest) != 1:
            _arity(name, 1)
        r = ops.double_edge(G, parse_dart(rest[0]))
    else:  # sum
        if len(rest) != 2:
            _arity(name, 2)
        v1 = _ints(rest[:1])[0]
        r = ops.connected_sum(G, v1, read_graph(rest[1]), args.v2)
    _write(dumps(r.graph), args.output)
    return 0


def _arity(name: str, n: int):
    raise InputError(f"op {name} expects {n} argument(s)")


def cmd_verify(args) -> int:
    text = _read_text(args.certificate)
    try:
        cert = json.loads(text)
    except json.JSONDecodeError:
        raise InputError("certificate is not valid JSON") from None
    if not isinstance(cert, dict) or "polgraph" not in cert:
        raise InputError("certificate has no 'polgraph' field")
    problems = verify_certificate(cert)
    if problems:
        print("certificate mismatch: " + ", ".join(problems))
        return 1
    print("certificate verified")
    return 0


def cmd_search(args) -> int:
    if args.mode == "random":
        if args.seed is None:
            raise InputError("search random requires --seed")
        _write(dumps(random_polarized(args.s, args.a, args.seed)), args.output)
        return 0
    budget = SearchBudget(args.max_s, args.max_a, args.limit)
    res = brute_force_max_vr(args.genus, budget, workers=args.workers, cache_dir=args.cache)
    status = "complete" if res.complete else "budget exhausted (lower bound only)"
    best = "none" if res.best is None else str(res.best)
    print(f"max V_r = {best}  [{status}, {res.explored} polarizations]")
    if res.witness is not None:
        sys.stdout.write(dumps(res.witness))
    return 0


# -- parser ----------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="polwalk",
                                description="Polarized graphs, left walks and valence bounds.")
    sub = p.add_subparsers(dest="command", required=True)

    for name, fn, helptext in (("info", cmd_info, "summary statistics"),
                               ("walks", cmd_walks, "list all left walks"),
                               ("check-complete", cmd_check_complete,
                                "exit 0 iff a complete walk exists")):
        sp = sub.add_parser(name, help=helptext)
        sp.add_argument("graph")
        sp.set_defaults(func=fn)

    sp = sub.add_parser("reduce", help="remove length-1 and length-2 walks")
    sp.add_argument("graph")
    sp.add_argument("-o", "--output")
    sp.set_defaults(func=cmd_reduce)

    sp = sub.add_parser("bounds", help="valence bounds for a genus")
    sp.add_argument("genus", type=int)
    sp.set_defaults(func=cmd_bounds)

    sp = sub.add_parser("construct", help="build a graph from a known family")
    sp.add_argument("family", choices=["monograph", "homotopic", "star", "optimal", "ks", "family"])
    sp.add_argument("params", type=int, nargs="*")
    sp.add_argument("--base", type=int, default=None, help="base genus for 'family'")
    sp.add_argument("--json", action="store_true", help="print a certificate instead")
    sp.add_argument("--cert", help="also write a certificate to this path")
    sp.add_argument("-o", "--output")
    sp.set_defaults(func=cmd_construct)

    sp = sub.add_parser("op", help="apply a surgery")
    sp.add_argument("operation", choices=["contract", "blowup", "surgery", "subdivide",
                                          "parallel", "double", "sum"])
    sp.add_argument("graph")
    sp.add_argument("params", nargs="*",
                    help="contract E | blowup V I J | surgery V E_IN F_OUT | subdivide E | "
                         "parallel D... | double D | sum V1 GRAPH2")
    sp.add_argument("--v2", type=int, default=0, help="vertex of GRAPH2 for 'sum'")
    sp.add_argument("-o", "--output")
    sp.set_defaults(func=cmd_op)

    sp = sub.add_parser("verify", help="recheck a certificate")
    sp.add_argument("certificate")
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("search", help="brute-force search and random instances")
    sp.add_argument("mode", choices=["max-vr", "random"])
    sp.add_argument("--genus", type=int, default=0)
    sp.add_argument("--max-s", type=int, default=3)
    sp.add_argument("--max-a", type=int, default=4)
    sp.add_argument("--limit", type=int, default=10**6)
    sp.add_argument("--workers", type=int, default=None)
    sp.add_argument("--cache", default=None, help="directory for cached results")
    sp.add_argument("--s", type=int, default=4)
    sp.add_argument("--a", type=int, default=6)
    sp.add_argument("--seed", type=int, default=None)
    sp.add_argument("-o", "--output")
    sp.set_defaults(func=cmd_search)
    return p


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except (InputError, PreconditionError, StructuralError) as exc:
        print(f"polwalk: {exc}", file=sys.stderr)
        return 2
    except PolwalkError as exc:
        print(f"polwalk: internal check failed: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
