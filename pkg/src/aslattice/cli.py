"""Command-line surface.

Every subcommand reads poset files in the ``{"elements": [...], "covers":
[[a,b], ...]}`` schema, validates them before computing, and writes either
a human-readable summary or (with ``--json``) a machine-readable document.
Exit status: 0 success, 1 verification failure, 2 usage or input error.
"""

from __future__ import annotations

import argparse
import json
import sys
from datetime import datetime, timezone

from aslattice import genposets, polytopes, posets, straightening, uniqueness
from aslattice.errors import AslatticeError
from aslattice.ideals import enumerate_ideals, lattice_dot, lattice_to_json
from aslattice.posets import connected_components, is_direct_sum_of_chains

KIND_BY_NAME = {k.value: k for k in straightening.RealizationKind}


def _emit(args, doc: dict, text_lines: list[str]) -> None:
    if args.json:
        if not args.no_timestamp:
            doc["generated_at"] = datetime.now(timezone.utc).isoformat()
        print(json.dumps(doc, indent=2))
    else:
        for line in text_lines:
            print(line)


def _load(path: str) -> posets.Poset:
    try:
        with open(path) as fh:
            doc = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise SystemExit(f"error: cannot read poset file {path}: {exc}") from exc
    return posets.poset_from_json(doc)


def cmd_analyze(args) -> int:
    p = _load(args.poset)
    lat = enumerate_ideals(p)
    comps = connected_components(p)
    soc = is_direct_sum_of_chains(p)
    doc = {
        "elements": p.n,
        "ideals": len(lat),
        "covers": len(p.covers),
        "components": len(comps),
        "maximal_chains": len(posets.maximal_chains(p)),
        "incomparable_ideal_pairs": len(lat.incomparable_pairs),
        "sum_of_chains": soc,
    }
    lines = [f"{k.replace('_', ' ')}: {v}" for k, v in doc.items()]
    _emit(args, doc, lines)
    return 0


def cmd_lattice(args) -> int:
    p = _load(args.poset)
    lat = enumerate_ideals(p)
    if args.dot:
        print(lattice_dot(lat), end="")
        return 0
    doc = lattice_to_json(lat)
    lines = ["{" + ",".join(ideal) + "}" for ideal in doc["ideals"]]
    _emit(args, doc, lines)
    return 0


def cmd_vertices(args) -> int:
    p = _load(args.poset)
    lat = enumerate_ideals(p)
    if args.polytope == "order":
        verts = polytopes.order_polytope_vertices(lat)
    else:
        verts = polytopes.chain_polytope_vertices(lat)
    doc = {
        "polytope": args.polytope,
        "coordinates": list(p.labels),
        "vertices": [polytopes.format_point(v) for v in verts],
    }
    lines = [" ".join(polytopes.format_point(v)) for v in verts]
    _emit(args, doc, lines)
    return 0


def cmd_relations(args) -> int:
    p = _load(args.poset)
    lat = enumerate_ideals(p)
    pm = straightening.straightening_relations(lat, KIND_BY_NAME[args.kind])
    doc = {"kind": args.kind, "entries": pm.table_json()}
    lines = [
        "{%s}*{%s} = {%s}*{%s}"
        % tuple(",".join(x) for x in (e["pair"][0], e["pair"][1], e["rhs"][0], e["rhs"][1]))
        for e in doc["entries"]
    ]
    _emit(args, doc, lines or ["no incomparable pairs"])
    return 0


def cmd_compare(args) -> int:
    p = _load(args.poset)
    lat = enumerate_ideals(p)
    rep = straightening.check_condition_ii(lat)
    labs = p.labels_of
    witnesses = [
        {
            "kinds": [ka.value, kb.value],
            "pair": [labs(w_pair[0]), labs(w_pair[1])],
            "rhs": [[labs(ra[0]), labs(ra[1])], [labs(rb[0]), labs(rb[1])]],
        }
        for (ka, kb), w_pair, ra, rb in rep.witnesses
    ]
    doc = {"all_equal": rep.equal, "witnesses": witnesses}
    lines = [f"all three relation systems equal: {'yes' if rep.equal else 'no'}"]
    for w in witnesses:
        lines.append(
            f"  {w['kinds'][0]} vs {w['kinds'][1]} differ on pair "
            f"{{{','.join(w['pair'][0])}}},{{{','.join(w['pair'][1])}}}"
        )
    _emit(args, doc, lines)
    return 0


def cmd_unique(args) -> int:
    p = _load(args.poset)
    lat = enumerate_ideals(p)
    res = uniqueness.check_unique(lat)
    labs = p.labels_of
    if res.unique:
        cert_doc = uniqueness.certificate_to_json(res.certificate)
        if args.certificate:
            with open(args.certificate, "w") as fh:
                json.dump(cert_doc, fh, indent=2)
        doc = {"verdict": "UNIQUE", "certificate_steps": len(res.certificate.steps)}
        lines = [f"UNIQUE ({len(res.certificate.steps)} certified pairs)"]
        if args.certificate:
            lines.append(f"certificate written to {args.certificate}")
    else:
        ra, rb = res.witness_rhs
        doc = {
            "verdict": "NOT_UNIQUE",
            "witness_kinds": [k.value for k in res.witness_kinds],
            "witness_pair": [labs(res.witness_pair[0]), labs(res.witness_pair[1])],
            "witness_rhs": [[labs(ra[0]), labs(ra[1])], [labs(rb[0]), labs(rb[1])]],
        }
        lines = [
            "NOT_UNIQUE",
            f"witness kinds: {doc['witness_kinds'][0]} vs {doc['witness_kinds'][1]}",
            f"witness pair: {{{','.join(doc['witness_pair'][0])}}}, "
            f"{{{','.join(doc['witness_pair'][1])}}}",
        ]
    _emit(args, doc, lines)
    return 0


def cmd_validate_cert(args) -> int:
    p = _load(args.poset)
    try:
        with open(args.certificate) as fh:
            cert_doc = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise SystemExit(f"error: cannot read certificate {args.certificate}: {exc}") from exc
    try:
        cert = uniqueness.certificate_from_json(cert_doc, p)
    except AslatticeError as exc:
        _emit(args, {"valid": False, "reason": str(exc)}, [f"REJECTED: {exc}"])
        return 1
    ok, reason = uniqueness.validate_certificate(p, cert)
    doc = {"valid": ok, "reason": reason}
    _emit(args, doc, ["ACCEPTED" if ok else f"REJECTED: {reason}"])
    return 0 if ok else 1


def cmd_search(args) -> int:
    p = _load(args.poset)
    lat = enumerate_ideals(p)
    systems = uniqueness.search_compatible_asls(lat, max_degree=args.max_degree)
    doc = {
        "count": len(systems),
        "exhausted": True,
        "max_degree": args.max_degree,
        "systems": [pm.table_json() for pm in systems],
    }
    lines = [f"realizable compatible systems: {len(systems)} (candidate space exhausted)"]
    _emit(args, doc, lines)
    return 0


def cmd_corpus(args) -> int:
    report = genposets.corpus_verify(max_n=args.max_n, parallel=args.parallel)
    doc = report.to_json()
    if args.no_timestamp:
        doc.pop("elapsed_s", None)
    lines = []
    for t in report.tallies:
        lines.append(
            f"n={t.n}: {t.posets} posets, {t.sums_of_chains} sums of chains, "
            f"{t.unique_checked} uniqueness verdicts, "
            f"{t.certificates_validated} certificates validated"
        )
    lines.append(f"counterexamples: {len(report.counterexamples)}")
    _emit(args, doc, lines)
    return 0 if report.ok else 1


def cmd_hasse(args) -> int:
    p = _load(args.poset)
    print(posets.hasse_dot(p), end="")
    return 0


def build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(
        prog="aslattice",
        description="Ideal lattices, polytopes, and straightening relation systems of finite posets.",
    )
    top.add_argument("--json", action="store_true", help="machine-readable output")
    top.add_argument(
        "--no-timestamp", action="store_true", help="omit volatile fields from JSON output"
    )
    sub = top.add_subparsers(dest="command", required=True)

    s = sub.add_parser("analyze", help="structural summary of a poset")
    s.add_argument("poset")
    s.set_defaults(func=cmd_analyze)

    s = sub.add_parser("lattice", help="list all poset ideals")
    s.add_argument("poset")
    s.add_argument("--dot", action="store_true", help="emit the lattice Hasse diagram as DOT")
    s.set_defaults(func=cmd_lattice)

    s = sub.add_parser("vertices", help="vertex list of the order or chain polytope")
    s.add_argument("poset")
    s.add_argument("--polytope", choices=["order", "chain"], required=True)
    s.set_defaults(func=cmd_vertices)

    s = sub.add_parser("relations", help="straightening relation table of one kind")
    s.add_argument("poset")
    s.add_argument("--kind", choices=sorted(KIND_BY_NAME), required=True)
    s.set_defaults(func=cmd_relations)

    s = sub.add_parser("compare", help="do the three canonical systems coincide?")
    s.add_argument("poset")
    s.set_defaults(func=cmd_compare)

    s = sub.add_parser("unique", help="decide uniqueness of a compatible system")
    s.add_argument("poset")
    s.add_argument("--certificate", metavar="OUT.json", help="write the certificate here")
    s.set_defaults(func=cmd_unique)

    s = sub.add_parser("validate-cert", help="replay a uniqueness certificate")
    s.add_argument("certificate")
    s.add_argument("poset")
    s.set_defaults(func=cmd_validate_cert)

    s = sub.add_parser("search", help="enumerate all realizable compatible systems")
    s.add_argument("poset")
    s.add_argument("--max-degree", type=int, default=3)
    s.set_defaults(func=cmd_search)

    s = sub.add_parser("corpus", help="verify the uniqueness equivalence on all small posets")
    s.add_argument("--max-n", type=int, default=genposets.DEFAULT_CORPUS_MAX_N)
    s.add_argument("--parallel", action="store_true")
    s.set_defaults(func=cmd_corpus)

    s = sub.add_parser("hasse", help="poset Hasse diagram as DOT")
    s.add_argument("poset")
    s.set_defaults(func=cmd_hasse)
    return top


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except SystemExit as exc:
        if isinstance(exc.code, str):
            print(exc.code, file=sys.stderr)
            return 2
        raise
    except AslatticeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
