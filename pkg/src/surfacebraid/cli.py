"""
Command-line interface.

Every operation of the library is reachable from here; all payloads have a
--json form.  Exit codes: 0 for a definite answer, 2 for usage or parse
errors, 3 when a bounded search returns unknown (budget exhaustion is an
answer of its own, never conflated with failure).
"""

from __future__ import annotations

import argparse
import json
import sys

from .bracket import kauffman_bracket
from .classify import enumerate_csb2
from .diagrams import close_tangle, count_components, pd_export, pd_import
from .reidemeister import reidemeister_simplify, triviality_of_diagram
from .rewrite import certificate_from_json, certificate_to_json
from .search import equiv_search, normalize_csb2, replay_certificate
from .surfaces import (
    ResolutionSign,
    csb_membership,
    dnk_diagram,
    dnk_word,
    resolve,
    surface_invariants,
    twist_spin,
)
from .tangles import format_tangle, parse_tangle
from .words import (
    WordSyntaxError,
    format_closed_word,
    format_word,
    parse_closed_word,
    parse_word,
)

EXIT_OK = 0
EXIT_ERROR = 2
EXIT_UNKNOWN = 3


def _emit(args, payload: dict, human: str) -> None:
    if args.json:
        print(json.dumps(payload, indent=2))
    else:
        print(human)


def _cmd_normalize(args) -> int:
    word = parse_closed_word(f"[{args.word}]_{args.strands}")
    nf, cert = normalize_csb2(word)
    _emit(
        args,
        {"normal_form": str(nf), "steps": len(cert), "certificate": json.loads(certificate_to_json(cert))},
        f"{word} = {nf}  ({len(cert)} steps)",
    )
    return EXIT_OK


def _cmd_equiv(args) -> int:
    u = parse_closed_word(args.left)
    v = parse_closed_word(args.right)
    cert = equiv_search(
        u,
        v,
        max_word_length=args.max_len,
        max_expansions=args.max_exp,
        strictness="lax" if args.lax else "strict",
        rules=args.rules.split(",") if args.rules else None,
    )
    if cert is None:
        _emit(args, {"result": "unknown"}, "unknown (budget exhausted, no certificate found)")
        return EXIT_UNKNOWN
    payload = json.loads(certificate_to_json(cert))
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(certificate_to_json(cert))
    _emit(
        args,
        {"result": "equivalent", "steps": len(cert), "certificate": payload},
        f"equivalent in {len(cert)} steps: {' '.join(map(str, cert.steps))}",
    )
    return EXIT_OK


def _cmd_resolve(args) -> int:
    word = parse_word(args.word, args.strands)
    sign = ResolutionSign.PLUS if args.sign == "+" else ResolutionSign.MINUS
    tangle = resolve(word, sign)
    pd = close_tangle(tangle, args.closure)
    _emit(
        args,
        {"tangle": format_tangle(tangle), "pd": pd_export(pd), "components": count_components(pd)},
        f"tangle: {format_tangle(tangle) or '(empty)'}\npd: {pd_export(pd)}",
    )
    return EXIT_OK


def _cmd_csb_check(args) -> int:
    word = parse_closed_word(f"[{args.word}]_{args.strands}")
    plus, minus = csb_membership(word, max_expansions=args.budget)
    payload = {"plus": plus.status, "minus": minus.status}
    human = f"L+: {plus}\nL-: {minus}"
    _emit(args, payload, human)
    if plus.status == "unknown" or minus.status == "unknown":
        return EXIT_UNKNOWN
    return EXIT_OK


def _cmd_euler(args) -> int:
    word = parse_closed_word(f"[{args.word}]_{args.strands}")
    inv = surface_invariants(word)
    _emit(
        args,
        inv.as_record(),
        f"chi = {inv.euler_characteristic}  (components L+ = {inv.components_plus},"
        f" L- = {inv.components_minus}, saddles = {inv.saddle_count})",
    )
    return EXIT_OK


def _cmd_twist_spin(args) -> int:
    tangle = parse_word(args.tangle, args.strands)
    spun = twist_spin(tangle, args.twists)
    _emit(args, {"word": str(spun)}, str(spun))
    return EXIT_OK


def _cmd_dnk(args) -> int:
    t = dnk_word(args.n, args.k)
    pd = dnk_diagram(args.n, args.k)
    payload = {
        "word": format_tangle(t),
        "crossings": pd.crossing_count,
        "components": count_components(pd),
    }
    human = (
        f"word: {format_tangle(t)}\n"
        f"plat closure: {pd.crossing_count} crossings, {count_components(pd)} components"
    )
    if args.emit_pd:
        payload["pd"] = pd_export(pd)
        human += f"\npd: {pd_export(pd)}"
    _emit(args, payload, human)
    return EXIT_OK


def _cmd_simplify(args) -> int:
    if "X[" in args.diagram or "loops=" in args.diagram:
        pd = pd_import(args.diagram)
    else:
        if args.strands is None:
            raise WordSyntaxError("tangle-word input needs --strands", 0)
        pd = close_tangle(parse_tangle(args.diagram, args.strands), args.closure)
    allowed = tuple(x.strip().upper() for x in args.moves.split(","))
    max_crossings = args.max_crossings if args.max_crossings is not None else pd.crossing_count + 4
    result = reidemeister_simplify(
        pd, allowed, max_crossings=max_crossings, max_expansions=args.max_exp
    )
    counts = {k: result.counts.get(k, 0) for k in ("R1", "R2", "R3")}
    payload = {
        "trivial": result.trivial,
        "counts": counts,
        "moves": list(result.moves),
        "final_crossings": result.final.crossing_count,
    }
    human = (
        f"{'reduced to no crossings' if result.trivial else 'unknown'}"
        f"  R1={counts['R1']} R2={counts['R2']} R3={counts['R3']}"
        f"  ({len(result.moves)} moves)"
    )
    _emit(args, payload, human)
    return EXIT_OK if result.trivial else EXIT_UNKNOWN


def _cmd_classify(args) -> int:
    report = enumerate_csb2(args.max_len)
    payload = {
        "classes": [
            {
                "normal_form": c.normal_form,
                "members": c.member_count,
                "invariants": c.invariants.as_record(),
                "note": c.distinct_note,
            }
            for c in report.classes
        ],
        "destabilizable": len(report.destabilizable),
        "symmetry_identified": len(report.symmetry_identified),
        "words_total": report.total_words,
        "words_presenting_surfaces": report.member_words,
    }
    _emit(args, payload, report.as_table())
    return EXIT_OK


def _cmd_replay(args) -> int:
    with open(args.certificate) as fh:
        cert = certificate_from_json(fh.read())
    result = replay_certificate(cert)
    if result:
        _emit(args, {"valid": True}, "valid")
        return EXIT_OK
    _emit(
        args,
        {"valid": False, "failed_step": result.failed_step, "reason": result.reason},
        f"invalid at step {result.failed_step}: {result.reason}",
    )
    return EXIT_ERROR


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="surfacebraid",
        description="surface singular braid word workbench",
    )
    parser.add_argument("--json", action="store_true", help="machine-readable output")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("normalize", help="2-strand normal form")
    p.add_argument("--strands", type=int, default=2)
    p.add_argument("word")
    p.set_defaults(func=_cmd_normalize)

    p = sub.add_parser("equiv", help="search for an equivalence certificate")
    p.add_argument("left", help='closed word, e.g. "[c1 C1]_2"')
    p.add_argument("right")
    p.add_argument("--max-len", type=int, default=None, help="intermediate word length cap (default: input + 6)")
    p.add_argument("--max-exp", type=int, default=1_000_000)
    p.add_argument("--rules", default=None, help="comma-separated rule ids to allow")
    p.add_argument("--output", default=None, help="write the certificate to a file")
    mode = p.add_mutually_exclusive_group()
    mode.add_argument("--strict", action="store_true", default=True)
    mode.add_argument("--lax", action="store_true")
    p.set_defaults(func=_cmd_equiv)

    p = sub.add_parser("resolve", help="smooth the marked vertices")
    p.add_argument("--sign", choices=["+", "-"], required=True)
    p.add_argument("--strands", type=int, required=True)
    p.add_argument("--closure", choices=["trace", "plat"], default="trace")
    p.add_argument("word")
    p.set_defaults(func=_cmd_resolve)

    p = sub.add_parser("csb-check", help="triviality of both resolutions")
    p.add_argument("--strands", type=int, required=True)
    p.add_argument("--budget", type=int, default=20000)
    p.add_argument("word")
    p.set_defaults(func=_cmd_csb_check)

    p = sub.add_parser("euler", help="Euler characteristic and components")
    p.add_argument("--strands", type=int, required=True)
    p.add_argument("word")
    p.set_defaults(func=_cmd_euler)

    p = sub.add_parser("twist-spin", help="twist-spun surface word")
    p.add_argument("--tangle", required=True, help="crossing-only word")
    p.add_argument("--strands", type=int, required=True, help="odd strand count")
    p.add_argument("--twists", type=int, required=True)
    p.set_defaults(func=_cmd_twist_spin)

    p = sub.add_parser("dnk", help="two-component diagram family")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--emit-pd", action="store_true")
    p.set_defaults(func=_cmd_dnk)

    p = sub.add_parser("simplify", help="bounded Reidemeister search")
    p.add_argument("--moves", default="r1,r2,r3")
    p.add_argument("--max-crossings", type=int, default=None)
    p.add_argument("--max-exp", type=int, default=20000)
    p.add_argument("--strands", type=int, default=None)
    p.add_argument("--closure", choices=["trace", "plat"], default="trace")
    p.add_argument("diagram", help="PD text or tangle word")
    p.set_defaults(func=_cmd_simplify)

    p = sub.add_parser("classify", help="2-strand classification report")
    p.add_argument("--max-len", type=int, default=6)
    p.set_defaults(func=_cmd_classify)

    p = sub.add_parser("replay", help="validate a certificate file")
    p.add_argument("certificate")
    p.set_defaults(func=_cmd_replay)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except WordSyntaxError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
