"""Command-line front end: dispatch to the library and emit JSON reports.

Exit codes: 0 when every requested check passed (a computed negative answer,
e.g. a non-perfect kernel, is still a success), 1 when an expected
verification failed, 2 on malformed input.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from typing import Dict, List

from . import bassserre, levelset, perfectness, schreier, stallings
from .presentations import (
    GroupHom,
    PermutationTarget,
    SearchBudget,
    check_hom,
    check_mutually_inverse,
    hanham_homomorphisms,
)
from .words import Word, parse_word, word_to_str


class InputError(ValueError):
    pass


def _load_json(path: str) -> Dict:
    try:
        with open(path) as fh:
            return json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise InputError("cannot read %s: %s" % (path, exc))


def load_graph(path: str) -> stallings.StallingsGraph:
    """Graph file: {"vertices": [id], "base": id, "edges": [{"from", "to", "label"}]}."""
    data = _load_json(path)
    try:
        vertices = [int(v) for v in data["vertices"]]
        edges = [(int(e["from"]), int(e["to"]), str(e["label"])) for e in data["edges"]]
        base = int(data["base"])
    except (KeyError, TypeError, ValueError) as exc:
        raise InputError("malformed graph file %s: %s" % (path, exc))
    try:
        return stallings.StallingsGraph(vertices, edges, base)
    except ValueError as exc:
        raise InputError("invalid graph in %s: %s" % (path, exc))


def load_complex(path: str) -> levelset.HeightedComplex:
    """Complex file: {"edges": [{"label", "profile"}], "cells": [[occurrence, ...]]}."""
    data = _load_json(path)
    try:
        edges = [(str(e["label"]), str(e["profile"])) for e in data["edges"]]
        cells = [parse_word(" ".join(occ)) for occ in data["cells"]]
        return levelset.HeightedComplex(edges=edges, cells=cells, label=path)
    except (KeyError, TypeError, ValueError) as exc:
        raise InputError("malformed complex file %s: %s" % (path, exc))


def load_morphism(path: str) -> stallings.GraphMorphism:
    """Morphism file: {"domain": graph file, "codomain": graph file,
    "vertex_map": {id: id}, "edge_map": {index: [[index, sign], ...]}}."""
    data = _load_json(path)
    try:
        domain = load_graph(str(data["domain"]))
        codomain = load_graph(str(data["codomain"]))
        vertex_map = {int(k): int(v) for k, v in data["vertex_map"].items()}
        edge_map = {int(k): [(int(e), int(s)) for e, s in v] for k, v in data["edge_map"].items()}
    except (KeyError, TypeError, ValueError) as exc:
        raise InputError("malformed morphism file %s: %s" % (path, exc))
    try:
        return stallings.GraphMorphism(domain=domain, codomain=codomain,
                                       vertex_map=vertex_map, edge_map=edge_map)
    except ValueError as exc:
        raise InputError("invalid morphism in %s: %s" % (path, exc))


def load_permutation_hom(path: str) -> GroupHom:
    """Hom file: {"degree": n, "generators": [g], "images": {g: [perm]}}."""
    data = _load_json(path)
    try:
        degree = int(data["degree"])
        gens = [str(g) for g in data["generators"]]
        images = {g: tuple(int(i) for i in data["images"][g]) for g in gens}
    except (KeyError, TypeError, ValueError) as exc:
        raise InputError("malformed homomorphism file %s: %s" % (path, exc))
    from .presentations import Presentation

    try:
        return GroupHom(
            source=Presentation(gens, [], label=path),
            target=PermutationTarget(degree),
            images=images,
        )
    except ValueError as exc:
        raise InputError("invalid homomorphism in %s: %s" % (path, exc))


def _emit(report: Dict, started: float) -> None:
    report["elapsed"] = round(time.perf_counter() - started, 6)
    print(json.dumps(report, sort_keys=True))


def _budget(args) -> SearchBudget:
    return SearchBudget(max_depth=args.budget_depth, max_len=args.budget_len)


def cmd_split(args) -> int:
    started = time.perf_counter()
    if args.complex:
        comp = load_complex(args.complex)
        report = levelset.splitting_report(comp)
        ok = report.immersion_ok and report.cover_degree_ok
    else:
        report = levelset.verify_splitting(args.m)
        ok = report.matches_expected
    out = {"command": "split", "m": args.m if not args.complex else None,
           "complex": args.complex, "report": report.as_dict(), "pass": ok}
    _emit(out, started)
    return 0 if ok else 1


def cmd_perfect(args) -> int:
    started = time.perf_counter()
    if args.grid is not None:
        for m in range(2, args.grid + 1):
            for n in range(2, args.grid + 1):
                for p in range(2, args.grid + 1):
                    _emit(perfectness.perfectness_report(m, n, p), started)
        return 0
    if args.labels is None or len(args.labels) != 3:
        raise InputError("perfect needs three labels or --grid MAX")
    m, n, p = args.labels
    _emit(perfectness.perfectness_report(m, n, p), started)
    return 0


def cmd_h1_cover(args) -> int:
    started = time.perf_counter()
    m, n, p = args.labels
    free_rank, torsion = perfectness.h1_finite_cover(m, n, p, args.n)
    _emit({"command": "h1-cover", "triple": [m, n, p], "n": args.n,
           "free_rank": free_rank, "torsion": torsion}, started)
    return 0


def cmd_rewrite(args) -> int:
    started = time.perf_counter()
    try:
        w = parse_word(args.word)
        rw = schreier.rewrite_tau(w, modulus=args.mod)
    except ValueError as exc:
        raise InputError(str(exc))
    symbols = [str(sym) + ("^-1" if sign < 0 else "") for sym, sign in rw]
    _emit({"command": "rewrite", "word": args.word, "mod": args.mod, "symbols": symbols}, started)
    return 0


def cmd_fold(args) -> int:
    started = time.perf_counter()
    g = load_graph(args.file)
    folded, count = stallings.fold(g)
    _emit({
        "command": "fold", "file": args.file,
        "vertices_before": len(g.vertices), "edges_before": len(g.edges),
        "folds": count,
        "vertices_after": len(folded.vertices), "edges_after": len(folded.edges),
        "rank": stallings.graph_rank(folded),
        "graph": {
            "vertices": folded.vertices,
            "base": folded.base,
            "edges": [{"from": s, "to": t, "label": l} for s, t, l in folded.edges],
        },
    }, started)
    return 0


def cmd_oppressive(args) -> int:
    started = time.perf_counter()
    y = load_graph(args.domain)
    x = load_graph(args.codomain)
    try:
        rho = stallings.label_morphism(y, x)
        elements = stallings.oppressive_set(rho)
    except ValueError as exc:
        raise InputError(str(exc))
    _emit({"command": "oppressive", "domain": args.domain, "codomain": args.codomain,
           "elements": [word_to_str(w) for w in elements]}, started)
    return 0


def cmd_separate(args) -> int:
    started = time.perf_counter()
    phi = load_permutation_hom(args.hom)
    c = load_graph(args.subgroup)
    words_data = _load_json(args.words)
    try:
        ws = [parse_word(t) for t in words_data]
    except (TypeError, ValueError) as exc:
        raise InputError("malformed word list %s: %s" % (args.words, exc))
    try:
        folded, _ = stallings.fold(c)
        ok = stallings.separates_finite(phi, folded, ws)
    except ValueError as exc:
        raise InputError(str(exc))
    _emit({"command": "separate", "separates": ok}, started)
    return 0


def cmd_bass(args) -> int:
    started = time.perf_counter()
    if args.bass_command == "verify-epi":
        ok = bassserre.check_hom_to_freeprod(args.k)
        fixed = bassserre.fixed_vertex_images(args.k)
        _emit({"command": "bass verify-epi", "k": args.k, "epimorphism": ok,
               "fixed_vertex_images": fixed, "pass": ok and fixed["all_identity"]}, started)
        return 0 if ok and fixed["all_identity"] else 1
    ok = bassserre.verify_dihedral_generators(args.m)
    _emit({"command": "bass verify-dihedral", "m": args.m, "pass": ok}, started)
    return 0 if ok else 1


def cmd_hanham_check(args) -> int:
    started = time.perf_counter()
    budget = _budget(args)
    phi, psi = hanham_homomorphisms(args.m)
    phi_verdicts = [v.status for v in check_hom(phi, budget)]
    psi_verdicts = [v.status for v in check_hom(psi, budget)]
    comps = {k: v.status for k, v in check_mutually_inverse(phi, psi, budget).items()}
    ok = (all(s == "trivial" for s in phi_verdicts)
          and all(s == "trivial" for s in psi_verdicts)
          and all(s == "trivial" for s in comps.values()))
    _emit({"command": "hanham-check", "m": args.m,
           "phi_relators": phi_verdicts, "psi_relators": psi_verdicts,
           "compositions": comps, "pass": ok}, started)
    return 0 if ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="triartin",
        description="Verification toolkit for triangle Artin group splittings and commutator homology",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("split", help="level-set splitting checks")
    p.add_argument("--m", type=int, default=3, help="even-label parameter (label 2m)")
    p.add_argument("--complex", help="user complex JSON file instead of the built-in one")
    p.set_defaults(func=cmd_split)

    p = sub.add_parser("perfect", help="perfectness of the degree-map kernel")
    p.add_argument("labels", type=int, nargs="*", help="three labels M N P")
    p.add_argument("--grid", type=int, help="sweep all triples with labels in 2..MAX")
    p.set_defaults(func=cmd_perfect)

    p = sub.add_parser("h1-cover", help="H1 of a finite-index degree-map kernel")
    p.add_argument("labels", type=int, nargs=3, help="three labels M N P")
    p.add_argument("--n", type=int, required=True, help="cover index")
    p.set_defaults(func=cmd_h1_cover)

    p = sub.add_parser("rewrite", help="Reidemeister-Schreier rewriting of a kernel word")
    p.add_argument("--word", required=True)
    p.add_argument("--mod", type=int, default=None, help="finite transversal modulus")
    p.set_defaults(func=cmd_rewrite)

    p = sub.add_parser("fold", help="fold a labeled graph file")
    p.add_argument("file")
    p.set_defaults(func=cmd_fold)

    p = sub.add_parser("oppressive", help="oppressive set of a graph over a wedge")
    p.add_argument("domain")
    p.add_argument("codomain")
    p.set_defaults(func=cmd_oppressive)

    p = sub.add_parser("separate", help="finite-quotient separation check")
    p.add_argument("hom")
    p.add_argument("subgroup")
    p.add_argument("words")
    p.set_defaults(func=cmd_separate)

    p = sub.add_parser("bass", help="Bass-Serre word-level verifications")
    bass_sub = p.add_subparsers(dest="bass_command", required=True)
    q = bass_sub.add_parser("verify-epi")
    q.add_argument("--k", type=int, required=True)
    q.set_defaults(func=cmd_bass)
    q = bass_sub.add_parser("verify-dihedral")
    q.add_argument("--m", type=int, required=True)
    q.set_defaults(func=cmd_bass)

    p = sub.add_parser("hanham-check", help="verify the six-generator isomorphism pair")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--budget-depth", type=int, default=16)
    p.add_argument("--budget-len", type=int, default=256)
    p.set_defaults(func=cmd_hanham_check)

    return parser


def run(argv: List[str]) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    started = time.perf_counter()
    try:
        return args.func(args)
    except InputError as exc:
        _emit({"error": str(exc)}, started)
        return 2
    except ValueError as exc:
        _emit({"error": str(exc)}, started)
        return 2


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
