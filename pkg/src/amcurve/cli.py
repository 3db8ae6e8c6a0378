"""Command-line front end.

Exit codes: 0 on success, 1 when a mathematical check came back false
(a failed axiom, a failed verification, or a pair that cannot be certified
as an automorphism), 2 on usage or parse errors.  Output is byte-stable
for fixed inputs and seeds; --json switches every subcommand to a single
JSON document on stdout.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import charseq, chain, semigroup
from .automorph import AutomorphismError, decompose_line, word_to_obj
from .numeric import RATIONAL, prime_field
from .poly import ParseError, parse_bipoly

_GAP_CAP = 10_000  # gaps shown in CLI output before truncation

_DEFAULT_SEED = 42


def _parse_int_list(text: str, label: str) -> list[int]:
    try:
        return [int(tok.strip()) for tok in text.split(",") if tok.strip()]
    except ValueError:
        raise ValueError(f"{label} must be a comma-separated list of integers") from None


def _domain_from_args(args):
    if getattr(args, "char", None):
        return prime_field(args.char)
    return RATIONAL


def _emit_json(obj) -> None:
    print(json.dumps(obj))


def _seq_strs(values) -> list[str]:
    return [str(v) for v in values]


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------


def _cmd_check(args) -> int:
    terms = _parse_int_list(args.sequence, "--sequence")
    rep = charseq.check_axioms(terms)
    if args.json:
        _emit_json(
            {
                "sequence": _seq_strs(rep.sequence),
                "dchain": _seq_strs(rep.dchain),
                "axioms": {
                    "ax1": rep.ax1,
                    "ax2": rep.ax2,
                    "ax3": rep.ax3,
                    "ax4": rep.ax4,
                },
                "conductor_lhs": str(rep.conductor_lhs),
                "all_ok": rep.all_ok,
            }
        )
        return 0 if rep.all_ok else 1
    d = rep.dchain
    r = rep.sequence
    h = len(r) - 1
    print(f"sequence: {','.join(_seq_strs(r))}")
    print(f"gcd chain: {','.join(_seq_strs(d))}")
    if rep.ax1:
        print("(1) ok")
    elif d[-1] != 1:
        print(f"(1) FAIL (gcd of all terms is {d[-1]}, not 1)")
    else:
        print("(1) FAIL (gcd chain is not strictly decreasing)")
    print("(2) ok" if rep.ax2 else "(2) FAIL (products d_k*r_k do not increase)")
    if rep.ax3:
        print("(3) ok")
    else:
        print(f"(3) FAIL ({d[h - 1] * r[h]} >= {r[0] ** 2})")
    rhs = (r[0] - 1) ** 2
    if rep.ax4:
        print(f"(4) ok ({rep.conductor_lhs} = {rhs})")
    else:
        print(f"(4) FAIL ({rep.conductor_lhs} != {rhs})")
    return 0 if rep.all_ok else 1


def _cmd_from_chain(args) -> int:
    divisors = _parse_int_list(args.divisors, "--divisors")
    seq = charseq.am_from_chain(divisors)
    if args.json:
        _emit_json({"sequence": _seq_strs(seq.r)})
    else:
        print(",".join(_seq_strs(seq.r)))
    return 0


def _cmd_enumerate(args) -> int:
    seqs = charseq.enumerate_am(args.initial)
    if args.json:
        _emit_json(
            {
                "initial": str(args.initial),
                "sequences": [_seq_strs(s.r) for s in seqs],
            }
        )
    else:
        for s in seqs:
            print(",".join(_seq_strs(s.r)))
    return 0


def _cmd_semigroup(args) -> int:
    gens = _parse_int_list(args.generators, "--generators")
    min_bound = args.up_to or 0
    G = semigroup.generate(gens, min_bound=min_bound)
    inv = semigroup.invariants(G)
    gaps = inv.gaps[:_GAP_CAP]
    truncated = len(inv.gaps) > _GAP_CAP
    if args.json:
        obj = {
            "generators": list(G.generators),
            "conductor": inv.conductor,
            "frobenius": inv.frobenius,
            "genus": inv.genus,
            "gaps": list(gaps),
        }
        if truncated:
            obj["gaps_truncated"] = True
        if args.up_to:
            obj["members"] = list(G.members_up_to(args.up_to))
        _emit_json(obj)
        return 0
    print(f"generators: {','.join(_seq_strs(G.generators))}")
    print(f"conductor: {inv.conductor}")
    print(f"frobenius: {inv.frobenius}")
    print(f"genus: {inv.genus}")
    gap_text = ",".join(_seq_strs(gaps))
    if truncated:
        gap_text += ",... (truncated)"
    print(f"gaps: {gap_text}")
    print(f"minimal generators: {','.join(_seq_strs(inv.minimal_generators))}")
    if args.up_to:
        print(f"members up to {args.up_to}: {','.join(_seq_strs(G.members_up_to(args.up_to)))}")
    return 0


def _require_am(terms):
    rep = charseq.check_axioms(terms)
    if not rep.all_ok:
        failed = ",".join(str(i + 1) for i, ok in enumerate(rep.flags()) if not ok)
        print(f"error: sequence fails axioms ({failed})", file=sys.stderr)
        return None
    return rep


def _cmd_build(args) -> int:
    terms = _parse_int_list(args.sequence, "--sequence")
    if _require_am(terms) is None:
        return 1
    domain = _domain_from_args(args)
    ch = chain.build_chain(terms, domain)
    xt, yt = ch.param
    if args.json:
        _emit_json(
            {
                "sequence": _seq_strs(terms),
                "dchain": _seq_strs(ch.dchain),
                "ratios": _seq_strs(ch.nratios),
                "degrees": _seq_strs(int(f.degree) for f in ch.polys),
                "polys": [str(f) for f in ch.polys],
                "param": {"x": str(xt), "y": str(yt)},
            }
        )
        return 0
    print(f"sequence: {','.join(_seq_strs(terms))}")
    print(f"gcd chain: {','.join(_seq_strs(ch.dchain))}")
    print(f"ratios: {','.join(_seq_strs(ch.nratios))}")
    for k, f in enumerate(ch.polys, start=1):
        print(f"f_{k} = {f}")
    print(f"x(t) = {xt}")
    print(f"y(t) = {yt}")
    print(f"degrees: {','.join(str(int(f.degree)) for f in ch.polys)}")
    return 0


def _cmd_decompose(args) -> int:
    domain = _domain_from_args(args)
    f = parse_bipoly(args.f, domain)
    g = parse_bipoly(args.g, domain)
    skel = decompose_line(f, g)
    if args.json:
        _emit_json(
            {
                "certified": True,
                "degrees": _seq_strs(skel.degrees),
                "polys": [str(p) for p in skel.polys],
                "word": word_to_obj(skel.witness),
                "pair_witnesses": [word_to_obj(w) for w in skel.pair_witnesses],
            }
        )
        return 0
    print("certified: (g, f) is a polynomial automorphism pair")
    print(f"degrees: {','.join(_seq_strs(skel.degrees))}")
    for k, p in enumerate(skel.polys, start=1):
        print(f"f_{k} = {p}")
    return 0


def _resolve_seed(args) -> int:
    if args.seed is not None:
        return args.seed
    env = os.environ.get("AMCURVE_SEED")
    if env is not None:
        try:
            return int(env)
        except ValueError:
            raise ValueError("AMCURVE_SEED must be an integer") from None
    return _DEFAULT_SEED


def _cmd_verify(args) -> int:
    terms = _parse_int_list(args.sequence, "--sequence")
    if _require_am(terms) is None:
        return 1
    domain = _domain_from_args(args)
    ch = chain.build_chain(terms, domain)
    report = chain.verify_theorem(ch, terms)
    ok = report.all_ok
    oracle_obj = None
    if args.oracle_trials:
        seed = _resolve_seed(args)
        sample = chain.semigroup_sampling_oracle(
            ch, trials=args.oracle_trials, degree_bound=args.degree_bound, seed=seed
        )
        G = semigroup.generate(terms)
        members = all(G.is_member(v) for v in sample.values)
        zero_seen = 0 in sample.values
        oracle_obj = {
            "trials": args.oracle_trials,
            "degree_bound": args.degree_bound,
            "seed": seed,
            "samples": len(sample.values),
            "skipped_infinite": sample.skipped_infinite,
            "skipped_zero": sample.skipped_zero,
            "all_members": members,
            "zero_seen": zero_seen,
        }
        ok = ok and members and zero_seen
    if args.json:
        obj = report.to_json_obj()
        if oracle_obj is not None:
            obj["oracle"] = oracle_obj
        _emit_json(obj)
        return 0 if ok else 1
    checks = report.checks()
    print(f"sequence: {','.join(_seq_strs(report.sequence))}")
    print(f"degrees: {','.join(_seq_strs(report.degrees))} [{'ok' if checks['lemma31_1'] else 'FAIL'}]")
    print(
        f"intersections: {','.join(_seq_strs(report.intersections))} "
        f"[{'ok' if checks['lemma31_2'] else 'FAIL'}]"
    )
    print(
        f"pairwise: {','.join(_seq_strs(report.pairwise))} "
        f"[{'ok' if checks['eq5'] else 'FAIL'}]"
    )
    print(f"ultrametric: {'ok' if checks['ultrametric'] else 'FAIL'}")
    if oracle_obj is not None:
        print(
            f"oracle: {oracle_obj['samples']} samples, "
            f"{oracle_obj['skipped_infinite']} infinite skipped, "
            f"members {'ok' if oracle_obj['all_members'] else 'FAIL'}"
        )
    print(f"result: {'PASS' if ok else 'FAIL'}")
    return 0 if ok else 1


def _cmd_nagata(args) -> int:
    rec = chain.nagata(args.p, args.a)
    xt, yt = rec.param
    rep = rec.axiom_report
    if args.json:
        _emit_json(
            {
                "p": rec.p,
                "a": rec.a,
                "case": rec.case,
                "f": str(rec.f),
                "g": str(rec.g),
                "param": {"x": str(xt), "y": str(yt)},
                "sequence": _seq_strs(rec.sequence),
                "axioms": {
                    "ax1": rep.ax1,
                    "ax2": rep.ax2,
                    "ax3": rep.ax3,
                    "ax4": rep.ax4,
                },
            }
        )
        return 0
    print(f"p: {rec.p}")
    print(f"a: {rec.a}")
    print(f"case: {rec.case}")
    print(f"f = {rec.f}")
    print(f"g = {rec.g}")
    print(f"x(t) = {xt}")
    print(f"y(t) = {yt}")
    print(f"sequence: {','.join(_seq_strs(rec.sequence))}")
    flags = " ".join(
        f"({i}) {'ok' if okv else 'FAIL'}" for i, okv in enumerate(rep.flags(), start=1)
    )
    print(f"axioms: {flags}")
    return 0


# ---------------------------------------------------------------------------
# parser / dispatch
# ---------------------------------------------------------------------------


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="amcurve",
        description="Exact arithmetic for AM characteristic sequences and coordinate lines",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="validate a sequence against axioms (1)-(4)")
    p.add_argument("--sequence", required=True, help="comma-separated positive integers")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_check)

    p = sub.add_parser("from-chain", help="the AM sequence of a divisor chain")
    p.add_argument("--divisors", required=True, help="comma-separated divisor chain ending at 1")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_from_chain)

    p = sub.add_parser("enumerate", help="all AM sequences with a given initial term")
    p.add_argument("--initial", required=True, type=int)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_enumerate)

    p = sub.add_parser("semigroup", help="gaps, conductor, genus of a numerical semigroup")
    p.add_argument("--generators", required=True, help="comma-separated positive integers")
    p.add_argument("--up-to", type=int, default=None, help="also list members up to this bound")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_semigroup)

    p = sub.add_parser("build", help="realize an AM sequence as a coordinate-line chain")
    p.add_argument("--sequence", required=True)
    p.add_argument("--char", type=int, default=None, help="prime characteristic (default: rationals)")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_build)

    p = sub.add_parser("decompose", help="certify and decompose an automorphism pair")
    p.add_argument("--f", required=True, help="curve polynomial in x, y")
    p.add_argument("--g", required=True, help="partner polynomial in x, y")
    p.add_argument("--char", type=int, default=None)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_decompose)

    p = sub.add_parser("verify", help="build a chain and verify all intersection claims")
    p.add_argument("--sequence", required=True)
    p.add_argument("--char", type=int, default=None)
    p.add_argument("--oracle-trials", type=int, default=0, help="random oracle polynomials (0 = off)")
    p.add_argument("--degree-bound", type=int, default=6)
    p.add_argument("--seed", type=int, default=None, help="overrides AMCURVE_SEED (default 42)")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("nagata", help="the char-p embedded line that is not a coordinate line")
    p.add_argument("--p", required=True, type=int)
    p.add_argument("--a", required=True, type=int)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_nagata)

    return parser


def run(argv=None) -> int:
    """Dispatch a CLI invocation; returns the process exit code."""
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except AutomorphismError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (ParseError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ZeroDivisionError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
