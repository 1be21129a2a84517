"""Command line entry point: ``admperm <command> ...`` or ``python -m admperm``.

Exit codes: 0 success, 1 a mathematical check failed, 2 usage or
configuration error, 3 resource budget exceeded.  Results go to stdout,
progress and diagnostics to stderr.
"""

from __future__ import annotations

import argparse
import json
import logging
import re
import sys
from pathlib import Path

from . import qq
from .affine_weyl import ExtAffElt, aff_make, finite, translation
from .counterexamples import CASES, verify_counterexample
from .enumeration import EnumOptions, enumerate_adm, enumerate_both, enumerate_perm
from .finite_weyl import from_word
from .group_index import DEFAULT_BUDGET, BudgetExceeded
from .rootdata import SUPPORTED, dump_datum, get_root_datum, normalize_label, resolve_coweight
from .serialize import certificate, elt_from_json, recheck_certificate

EXIT_OK, EXIT_CHECK, EXIT_USAGE, EXIT_BUDGET = 0, 1, 2, 3

log = logging.getLogger("admperm")


class UsageError(Exception):
    pass


def _dump(doc) -> str:
    return json.dumps(doc, indent=1)


def _write_json(path, doc) -> None:
    if path == "-":
        print(_dump(doc))
    else:
        Path(path).write_text(_dump(doc) + "\n")


def parse_budget(text: str) -> int | None:
    m = re.fullmatch(r"\s*(\d+(?:\.\d+)?)\s*([kmgt]?)i?b?\s*", text.lower())
    if text.lower() in ("none", "unlimited"):
        return None
    if not m:
        raise argparse.ArgumentTypeError(f"bad memory budget {text!r}; use e.g. 4G or 512M")
    scale = {"": 1, "k": 2**10, "m": 2**20, "g": 2**30, "t": 2**40}[m.group(2)]
    return int(float(m.group(1)) * scale)


def parse_word(text: str) -> list:
    text = text.strip().strip("[]")
    if not text:
        return []
    try:
        return [int(s) for s in re.split(r"[,\s]+", text) if s]
    except ValueError:
        raise UsageError(f"bad word {text!r}; expected comma separated integers") from None


def _datum(label: str):
    try:
        return get_root_datum(normalize_label(label))
    except (KeyError, ValueError) as exc:
        raise UsageError(f"unsupported type {label!r}; supported: {', '.join(SUPPORTED)}") from exc


def _coweight(datum, text: str, mu=None):
    """rho3, 2*rho1, mu, 2mu, or explicit rationals "1/2,-1/2,..."."""
    m = re.fullmatch(r"\s*(-?\d+)?\s*\*?\s*(mu|rho_?\d+)\s*", text)
    try:
        if m:
            k = int(m.group(1)) if m.group(1) else 1
            if m.group(2) == "mu":
                if mu is None:
                    raise UsageError("'mu' needs --coweight")
                base = mu
            else:
                base = resolve_coweight(datum, m.group(2))
            return qq.scale(k, base)
        return resolve_coweight(datum, text)
    except (ValueError, IndexError, ZeroDivisionError) as exc:
        raise UsageError(f"bad coweight {text!r}: {exc}") from exc


# -- commands -------------------------------------------------------------------

def cmd_verify(args) -> int:
    overrides = {}
    if args.w2 is not None:
        overrides["w2_word"] = parse_word(args.w2)
    rep = verify_counterexample(args.case, **overrides)
    width = max(len(c.name) for c in rep.checks)
    for c in rep.checks:
        print(f"{'PASS' if c.passed else 'FAIL'}  {c.name.ljust(width)}  {c.detail}".rstrip())
    v = rep.verdicts
    print(
        f"{rep.case}: perm={str(v['permissible']).lower()} adm={str(v['admissible']).lower()} "
        f"adm_direct={str(v['admissible_direct']).lower()} haines={str(v['haines']).lower()} "
        f"checks={sum(c.passed for c in rep.checks)}/{len(rep.checks)}"
    )
    if args.json:
        _write_json(args.json, rep.to_json())
    return EXIT_OK if rep.passed else EXIT_CHECK


def cmd_enumerate(args) -> int:
    d = _datum(args.type)
    mu = _coweight(d, args.coweight)
    opts = EnumOptions(workers=args.workers, budget=args.budget, cache_dir=args.cache, stream=args.stream)
    try:
        if args.set == "both":
            rep = enumerate_both(d, mu, opts, list_difference=args.list)
            ok = rep.subset and rep.distinct
            print(
                f"{d.type_label} {args.coweight}: adm={rep.adm.cardinality} perm={rep.perm.cardinality} "
                f"diff={rep.difference} subset={'ok' if rep.subset else 'FAILED'}"
            )
            if args.list:
                for e in rep.extras:
                    print(json.dumps(e))
            doc = rep.to_json()
        else:
            fn = enumerate_adm if args.set == "adm" else enumerate_perm
            rep = fn(d, mu, opts)
            ok = True
            print(f"{d.type_label} {args.coweight}: {args.set}={rep.cardinality}")
            doc = rep.to_json()
    except BudgetExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    if args.json:
        _write_json(args.json, doc)
    return EXIT_OK if ok else EXIT_CHECK


def _element_from_args(d, mu, args) -> ExtAffElt:
    given = [args.element is not None, args.left_word is not None or args.right_word is not None, args.lam is not None]
    if sum(given) != 1:
        raise UsageError("give exactly one of --element, --lambda/--word, or --left-word/--right-word")
    try:
        if args.element is not None:
            text = args.element
            if not text.lstrip().startswith("{"):
                text = Path(text).read_text()
            return elt_from_json(d, json.loads(text))
        if args.lam is not None:
            return aff_make(d, _coweight(d, args.lam, mu), from_word(d, parse_word(args.word or "")))
        w2 = from_word(d, parse_word(args.left_word or ""))
        w1 = from_word(d, parse_word(args.right_word or ""))
        return finite(w2) * translation(d, mu) * finite(w1.inverse())
    except (ValueError, OSError) as exc:
        raise UsageError(f"malformed element: {exc}") from exc


def cmd_check(args) -> int:
    d = _datum(args.type)
    mu = _coweight(d, args.coweight)
    x = _element_from_args(d, mu, args)
    doc = certificate(d, mu, x)
    perm, adm, hn = doc["permissible"]["verdict"], doc["admissible"]["verdict"], doc["haines"]["verdict"]
    print(f"perm={str(perm).lower()} adm={str(adm).lower()} haines={str(hn).lower()}")
    if not perm:
        print(f"reason: {doc['permissible']['reason']}")
    if args.json:
        _write_json(args.json, doc)
    else:
        print(_dump(doc))
    return EXIT_OK


def cmd_crosscheck(args) -> int:
    from .crosscheck import MAX_RANK, run_crosscheck

    if not 1 <= args.max_rank <= MAX_RANK:
        raise UsageError(f"--max-rank must be between 1 and {MAX_RANK}")
    results = run_crosscheck(args.max_rank)
    for r in results:
        print(f"{'PASS' if r.passed else 'FAIL'}  {r.name}  ({r.cases} cases)")
        if not r.passed:
            print(f"      first failure: {r.failure}")
    if args.json:
        _write_json(args.json, [r.to_json() for r in results])
    return EXIT_OK if all(r.passed for r in results) else EXIT_CHECK


def cmd_recheck(args) -> int:
    try:
        doc = json.loads(Path(args.file).read_text())
        if "certificate" in doc and "checks" in doc:
            doc = doc["certificate"]
        d = _datum(args.type or doc["type"])
        problems = recheck_certificate(d, doc)
    except (OSError, KeyError, TypeError, ValueError) as exc:
        raise UsageError(f"cannot read certificate {args.file}: {exc}") from exc
    for p in problems:
        print(f"FAIL  {p}")
    print("certificate ok" if not problems else f"{len(problems)} problem(s)")
    return EXIT_OK if not problems else EXIT_CHECK


def cmd_datum(args) -> int:
    print(dump_datum(_datum(args.type)))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("-q", "--quiet", action="store_true", help="only warnings on stderr")
    common.add_argument("-v", "--verbose", action="store_true", help="debug output on stderr")
    p = argparse.ArgumentParser(prog="admperm", description="Admissible and permissible sets for minuscule coweights.")
    sub = p.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", parents=[common], help="check the E6/E7 element that is permissible but not admissible")
    v.add_argument("case", choices=sorted(CASES))
    v.add_argument("--json", metavar="PATH", help="write the report and certificate ('-' for stdout)")
    v.add_argument("--w2", metavar="WORD", help="replace w2 (negative control)")
    v.set_defaults(func=cmd_verify)

    e = sub.add_parser("enumerate", parents=[common], help="count Adm(mu), Perm(mu) or both")
    e.add_argument("--type", required=True)
    e.add_argument("--coweight", required=True, help="rho<i> or explicit rationals")
    e.add_argument("--set", choices=("adm", "perm", "both"), default="both")
    e.add_argument("--workers", type=int, default=1)
    e.add_argument("--cache", metavar="DIR", help="cache directory (default: $ADMPERM_CACHE)")
    e.add_argument("--budget", type=parse_budget, default=DEFAULT_BUDGET, help="memory budget, e.g. 4G")
    e.add_argument("--list", action="store_true", help="print Perm \\ Adm as JSON lines (with --set both)")
    e.add_argument("--stream", metavar="PATH", help="write the elements as JSON lines")
    e.add_argument("--json", metavar="PATH")
    e.set_defaults(func=cmd_enumerate)

    c = sub.add_parser("check", parents=[common], help="test one element")
    c.add_argument("--type", required=True)
    c.add_argument("--coweight", required=True)
    c.add_argument("--element", help='JSON {"lambda": [...], "word": [...]} or a file holding it')
    c.add_argument("--lambda", dest="lam", help="translation part: vector, rho<i>, mu, 2mu, ...")
    c.add_argument("--word", help="finite part as a word, with --lambda")
    c.add_argument("--left-word", help="w2 in w2 t_mu w1^-1")
    c.add_argument("--right-word", help="w1 in w2 t_mu w1^-1")
    c.add_argument("--json", metavar="PATH", help="write the certificate here instead of stdout")
    c.set_defaults(func=cmd_check)

    x = sub.add_parser("crosscheck", parents=[common], help="run the independent oracle suites")
    x.add_argument("--max-rank", type=int, default=3)
    x.add_argument("--json", metavar="PATH")
    x.set_defaults(func=cmd_crosscheck)

    r = sub.add_parser("recheck", parents=[common], help="validate a certificate JSON file")
    r.add_argument("file")
    r.add_argument("--type")
    r.set_defaults(func=cmd_recheck)

    dd = sub.add_parser("datum", parents=[common], help="print a root datum as JSON")
    dd.add_argument("--type", required=True)
    dd.set_defaults(func=cmd_datum)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    level = logging.WARNING if args.quiet else logging.DEBUG if args.verbose else logging.INFO
    logging.basicConfig(level=level, stream=sys.stderr, format="%(message)s")
    if getattr(args, "workers", 1) < 1:
        parser.error("--workers must be at least 1")
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"{parser.prog}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except BudgetExceeded as exc:
        print(f"{parser.prog}: error: {exc}", file=sys.stderr)
        return EXIT_BUDGET


if __name__ == "__main__":
    sys.exit(main())
