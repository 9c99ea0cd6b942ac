"""``antisat`` command line.

Exit codes: 0 success, 1 verification or feasibility failure, 2 usage or
parse error, 3 capacity or overflow.
"""
from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

from . import chains as chains_mod
from . import colex, io, saturation
from .errors import (
    CapacityError,
    ConstructionError,
    InfeasibleCoverError,
    ParseError,
    PreconditionError,
)
from .lattice import Family, elements_of, format_word

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_CAPACITY = 0, 1, 2, 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(message)


class _UsageError(Exception):
    pass


def _emit(payload: dict) -> None:
    print(json.dumps(payload, sort_keys=True, indent=2))


def _sets(words) -> list[list[int]]:
    return [list(elements_of(w)) for w in words]


def _chains(cover) -> list[list[list[int]]]:
    return [_sets(c.words) for c in cover.chains]


def _report_payload(report) -> dict:
    return {
        "is_saturated": report.is_saturated,
        "width": report.width,
        "culprit": list(report.culprit.elements()) if report.culprit is not None else None,
        "antichain": _sets(report.antichain.words) if report.antichain is not None else None,
        "layer_profile": list(report.layer_profile),
        "c_check": [
            {"layer": c.layer, "count": c.count, "mirror_count": c.mirror_count,
             "quota": c.quota, "ok": c.ok}
            for c in report.c_check
        ],
    }


def _print_report(report) -> None:
    print(f"saturated: {'yes' if report.is_saturated else 'no'}")
    print(f"width: {report.width}")
    if report.culprit is not None:
        print(f"addable: {format_word(report.culprit.word)}")
    if report.antichain is not None:
        print("antichain: " + " ".join("{" + format_word(w) + "}" for w in report.antichain.words))
    print("layers: " + " ".join(map(str, report.layer_profile)))
    for c in report.c_check:
        mark = "ok" if c.ok else "BELOW"
        print(f"  layer {c.layer}: {c.count} / mirror {c.mirror_count} >= {c.quota} {mark}")


# -- subcommands ------------------------------------------------------------------

def cmd_sat_value(args) -> int:
    p = saturation.sat_value(args.n, args.k)
    if args.json:
        _emit({"command": "sat-value", "inputs": {"n": args.n, "k": args.k},
               "value": p.value, "status": p.status,
               "certificates": {"ell": p.ell, "c": list(p.c)}})
    else:
        print(p.value)
        print(f"status: {p.status}")
        print(f"ell: {p.ell}")
        print("c: " + " ".join(map(str, p.c)))
    return EXIT_OK


def cmd_construct(args) -> int:
    try:
        family, cover = saturation.construct_saturated(args.n, args.k)
    except ConstructionError as exc:
        print(f"construction failed: {exc}", file=sys.stderr)
        if exc.report is not None:
            _print_report(exc.report)
        return EXIT_FAIL
    io.write_family(args.output, family)
    if args.chains:
        io.write_cover(args.chains, cover)
    status = saturation.sat_value(args.n, args.k).status
    if args.json:
        _emit({"command": "construct", "inputs": {"n": args.n, "k": args.k},
               "value": len(family), "status": status,
               "certificates": {"chains": _chains(cover), "verified": True}})
    else:
        print(f"wrote {len(family)} sets to {args.output} (verified saturated, status {status})")
    return EXIT_OK


def cmd_verify(args) -> int:
    family = io.read_family(args.family)
    report = saturation.is_k_antichain_saturated(family, args.k)
    if args.json:
        _emit({"command": "verify", "inputs": {"family": str(args.family), "k": args.k},
               "value": report.is_saturated,
               "status": "saturated" if report.is_saturated else "not_saturated",
               "certificates": _report_payload(report)})
    else:
        _print_report(report)
    return EXIT_OK if report.is_saturated else EXIT_FAIL


def cmd_cover_skipless(args) -> int:
    cover = io.read_cover(args.cover)
    try:
        out = chains_mod.skipless_cover(cover)
    except InfeasibleCoverError as exc:
        print(f"infeasible: {exc}", file=sys.stderr)
        return EXIT_FAIL
    io.write_cover(args.output, out)
    added = len(out.family()) - len(cover.family())
    print(f"wrote {len(out)} skipless chains to {args.output} ({added} sets added)")
    return EXIT_OK


def cmd_dilworth(args) -> int:
    family = io.read_family(args.family)
    if not len(family):
        raise PreconditionError("dilworth needs a nonempty family")
    width, anti, cover = chains_mod.dilworth(family)
    if args.json:
        _emit({"command": "dilworth", "inputs": {"family": str(args.family)},
               "value": width, "status": "ok",
               "certificates": {"antichain": _sets(anti.words), "chains": _chains(cover)}})
    else:
        print(f"width: {width}")
        print("antichain: " + " ".join("{" + format_word(w) + "}" for w in anti.words))
        for c in cover.chains:
            print("chain: " + " < ".join("{" + format_word(w) + "}" for w in c.words))
    return EXIT_OK


def cmd_scd(args) -> int:
    cover = chains_mod.symmetric_chain_decomposition(args.n)
    io.write_cover(args.output, cover)
    print(f"wrote {len(cover)} chains to {args.output}")
    return EXIT_OK


def cmd_colex(args) -> int:
    fam = colex.colex_segment(args.m, args.t)
    if args.json:
        _emit({"command": "colex", "inputs": {"m": args.m, "t": args.t},
               "values": _sets(fam.words), "status": "ok",
               "certificates": {"universe_size": fam.universe_size}})
    else:
        for w in fam.words:
            print(format_word(w))
    return EXIT_OK


def _terms_payload(name, args, exp):
    _emit({"command": name, "inputs": {"m": args.m, "r": args.r},
           "values": [list(t) for t in exp.terms], "status": "ok",
           "certificates": {"reconstructed": exp.value}})


def _print_terms(exp):
    print(" + ".join(f"C({a},{i})" for a, i in exp.terms) + f" = {exp.value}")


def cmd_cascade(args) -> int:
    exp = colex.cascade(args.m, args.r)
    if args.json:
        _terms_payload("cascade", args, exp)
    else:
        _print_terms(exp)
    return EXIT_OK


def cmd_expansion(args) -> int:
    exp = colex.r_expansion(args.m, args.r)
    if args.json:
        _terms_payload("expansion", args, exp)
    else:
        _print_terms(exp)
    return EXIT_OK


def cmd_nu_colex(args) -> int:
    value = colex.nu_colex(args.m, args.r)
    if args.json:
        _emit({"command": "nu-colex", "inputs": {"m": args.m, "r": args.r},
               "value": value, "status": "ok",
               "certificates": {"cascade": [list(t) for t in colex.cascade(args.m, args.r).terms]}})
    else:
        print(value)
    return EXIT_OK


def cmd_c_seq(args) -> int:
    p = colex.c_sequence(args.k)
    if args.json:
        _emit({"command": "c-seq", "inputs": {"k": args.k}, "values": list(p.c),
               "status": "ok", "certificates": {"ell": p.ell}})
    else:
        print(f"ell: {p.ell}")
        print("c: " + " ".join(map(str, p.c)))
    return EXIT_OK


def cmd_oracle(args) -> int:
    value, witness = saturation.oracle_min_sat(args.n, args.k)
    if args.json:
        _emit({"command": "oracle", "inputs": {"n": args.n, "k": args.k}, "value": value,
               "status": "exhaustive", "certificates": {"witness": _sets(witness.words)}})
    else:
        print(value)
        print(io.format_family(witness), end="")
    return EXIT_OK


def cmd_greedy(args) -> int:
    family = saturation.greedy_saturate(Family(args.n), args.k, order=args.order, seed=args.seed)
    if args.output:
        io.write_family(args.output, family)
    if args.json:
        _emit({"command": "greedy",
               "inputs": {"n": args.n, "k": args.k, "order": args.order, "seed": args.seed},
               "value": len(family), "status": "saturated",
               "certificates": {"family": _sets(family.words)}})
    elif not args.output:
        print(io.format_family(family), end="")
    else:
        print(f"wrote {len(family)} sets to {args.output}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="antisat", description="Antichain saturation in the Boolean lattice.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name, func, help_text):
        p = sub.add_parser(name, help=help_text)
        p.set_defaults(func=func)
        return p

    p = add("sat-value", cmd_sat_value, "sat(n, k) and its status")
    p.add_argument("n", type=int)
    p.add_argument("k", type=int)
    p.add_argument("--json", action="store_true")

    p = add("construct", cmd_construct, "build and verify a minimum saturated family")
    p.add_argument("n", type=int)
    p.add_argument("k", type=int)
    p.add_argument("-o", "--output", required=True)
    p.add_argument("--chains")
    p.add_argument("--json", action="store_true")

    p = add("verify", cmd_verify, "check k-antichain saturation of a family file")
    p.add_argument("family")
    p.add_argument("k", type=int)
    p.add_argument("--json", action="store_true")

    p = add("cover-skipless", cmd_cover_skipless, "replace a chain cover by skipless chains")
    p.add_argument("cover")
    p.add_argument("-o", "--output", required=True)

    p = add("dilworth", cmd_dilworth, "width, maximum antichain and minimum chain partition")
    p.add_argument("family")
    p.add_argument("--json", action="store_true")

    p = add("scd", cmd_scd, "symmetric chain decomposition of 2^[n]")
    p.add_argument("n", type=int)
    p.add_argument("-o", "--output", required=True)

    p = add("colex", cmd_colex, "initial colex segment of size m on layer t")
    p.add_argument("m", type=int)
    p.add_argument("t", type=int)
    p.add_argument("--json", action="store_true")

    for name, func, text in (
        ("cascade", cmd_cascade, "greedy r-cascade m = sum C(a_i, i)"),
        ("expansion", cmd_expansion, "r-expansion with r_j <= ceil(a_j / 2)"),
        ("nu-colex", cmd_nu_colex, "matching number of a colex segment and its shadow"),
    ):
        p = add(name, func, text)
        p.add_argument("m", type=int)
        p.add_argument("r", type=int)
        p.add_argument("--json", action="store_true")

    p = add("c-seq", cmd_c_seq, "ell and the layer quotas c_t")
    p.add_argument("k", type=int)
    p.add_argument("--json", action="store_true")

    p = add("oracle", cmd_oracle, "brute-force minimum saturated family (n <= 4)")
    p.add_argument("n", type=int)
    p.add_argument("k", type=int)
    p.add_argument("--json", action="store_true")

    p = add("greedy", cmd_greedy, "greedily saturate the empty family")
    p.add_argument("n", type=int)
    p.add_argument("k", type=int)
    p.add_argument("--order", choices=("canonical", "random"), default="canonical")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("-o", "--output")
    p.add_argument("--json", action="store_true")
    return parser


def run(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except SystemExit as exc:  # --help
        return int(exc.code or 0)
    except _UsageError as exc:
        print(f"antisat: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except CapacityError as exc:
        print(f"antisat: {exc}", file=sys.stderr)
        return EXIT_CAPACITY
    except (ParseError, PreconditionError, OSError) as exc:
        print(f"antisat: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (InfeasibleCoverError, ConstructionError) as exc:
        print(f"antisat: {exc}", file=sys.stderr)
        return EXIT_FAIL


def main() -> None:
    sys.exit(run())
