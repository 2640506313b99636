"""Command line front end.

Every command prints one JSON report on stdout (key-sorted, newline
terminated) and a short human log on stderr.  Exit status: 0 when all
checks pass, 1 when the report holds findings, 2 on bad usage or input.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path
from typing import Optional

from . import __version__, catalog, constructions, numtheory, theorems
from .config import CapExceeded
from .groupfile import GroupFileError, digest, parse_group_file, write_group_file
from .permgroup import PermGroup

log = logging.getLogger("hallrad")

EXIT_OK, EXIT_FINDING, EXIT_INPUT = 0, 1, 2


class InputError(Exception):
    pass


class Report:
    def __init__(self, command: str):
        self.command = command
        self.inputs: dict[str, str] = {}
        self.results = None
        self.findings: list[dict] = []

    def read_group(self, path: str) -> PermGroup:
        G = parse_group_file(path)
        self.inputs[path] = digest(path)
        return G

    def finding(self, subject: str, message: str) -> None:
        self.findings.append({"subject": subject, "message": message})

    def to_json(self) -> str:
        body = {"tool_version": __version__, "command": self.command, "inputs": self.inputs,
                "results": self.results, "findings": self.findings}
        return json.dumps(body, sort_keys=True, indent=2) + "\n"


# catalog ------------------------------------------------------------------


def _cases(args) -> list:
    if args.p is not None:
        cases = catalog.cases_for_prime(args.p, args.qcap, args.include_large_fermat)
    else:
        cases = catalog.all_cases(args.qcap, args.include_large_fermat)
    if getattr(args, "case", None) is not None:
        cases = [c for c in cases if c.case_id == args.case]
    return cases


def cmd_catalog_list(args, report: Report) -> None:
    report.results = [c.to_dict() for c in _cases(args)]
    log.info("%d case(s)", len(report.results))


def _verify_catalog(report: Report, cases) -> list[dict]:
    out = []
    for c in cases:
        r = catalog.verify_case(c)
        log.info("case %d %s: %s", c.case_id, c.T_name, "pass" if r.passed else "FAIL")
        if not r.passed:
            failed = [k for k in ("index_ok", "solvable_ok", "maximal", "hall",
                                  "aut_bound_ok", "class_count_ok") if not getattr(r, k)]
            report.finding(f"case {c.case_id} {c.T_name}", "failed: " + ", ".join(failed))
        out.append(r.to_dict())
    return out


def cmd_catalog_verify(args, report: Report) -> None:
    report.results = _verify_catalog(report, _cases(args))


# numtheory ----------------------------------------------------------------


def cmd_classify(args, report: Report) -> None:
    out = []
    for q in args.q:
        t = numtheory.classify_consecutive(q)
        log.info("%d: %s", q, t.outcome)
        out.append(t.to_dict())
    report.results = out


def cmd_pi0(args, report: Report) -> None:
    report.results = [{"p": p, "in_pi0": numtheory.in_pi0(p)} for p in args.p]


def cmd_scan(args, report: Report) -> None:
    scan = numtheory.scan_consecutive(args.hi, args.lo)
    for q in scan.anomalies:
        report.finding(f"q = {q}", "consecutive prime powers not in exactly one case")
    report.results = scan.to_dict()


# analysis -----------------------------------------------------------------


def _analyze(report: Report, name: str, G: PermGroup, H: PermGroup) -> dict:
    r = theorems.analyze_pair(G, H)
    for f in r.findings:
        report.finding(name, f)
    log.info("%s: p=%d alpha=%d |G/rad|=%d %s", name, r.p, r.alpha,
             r.series.quotient_order, "pass" if r.passed else "FINDING")
    d = r.to_dict()
    d["name"] = name
    return d


def cmd_analyze(args, report: Report) -> None:
    G = report.read_group(args.group)
    H = report.read_group(args.subgroup)
    report.results = _analyze(report, Path(args.group).stem, G, H)


def cmd_verify(args, report: Report) -> None:
    if args.suite == "catalog":
        report.results = _verify_catalog(report, catalog.all_cases())
    elif args.suite == "wreath":
        report.results = [_analyze(report, f.name, f.W, f.S)
                          for f in constructions.standard_family()]
    else:
        folder = args.dir or args.folder
        if folder is None:
            raise InputError("--suite corpus needs a directory")
        root = Path(folder)
        if not root.is_dir():
            raise InputError(f"{root}: not a directory")
        pairs = sorted(root.glob("*.group.grp"))
        if not pairs:
            raise InputError(f"{root}: no *.group.grp files")
        out = []
        for gpath in pairs:
            name = gpath.name[: -len(".group.grp")]
            hpath = gpath.with_name(name + ".subgroup.grp")
            if not hpath.exists():
                raise InputError(f"{hpath}: missing subgroup file")
            G = report.read_group(str(gpath))
            H = report.read_group(str(hpath))
            out.append(_analyze(report, name, G, H))
        report.results = out


# constructions ------------------------------------------------------------


def cmd_construct(args, report: Report) -> None:
    if args.kind == "wreath-top":
        G, H = report.read_group(args.group), report.read_group(args.subgroup)
        K = report.read_group(args.top)
        W, S = constructions.wreath_top(G, H, K)
    elif args.kind == "wreath-base":
        K, L = report.read_group(args.base), report.read_group(args.base_subgroup)
        G, H = report.read_group(args.group), report.read_group(args.subgroup)
        W, S = constructions.wreath_base(K, L, G, H)
    else:
        parts = []
        for item in args.pair or []:
            g, sep, h = item.partition(":")
            if not sep:
                raise InputError(f"--pair expects GROUP:SUBGROUP, got {item!r}")
            parts.append((report.read_group(g), report.read_group(h)))
        W, S = constructions.direct_product(parts)
    p, alpha = constructions.prime_power_index(W, S)
    write_group_file(args.out_group, W, f"{args.kind}, order {W.order()}")
    write_group_file(args.out_subgroup, S, f"{args.kind} subgroup, index {p}^{alpha}")
    report.results = {"kind": args.kind, "degree": W.degree, "W_order": W.order(),
                      "S_order": S.order(), "p": p, "alpha": alpha,
                      "out_group": args.out_group, "out_subgroup": args.out_subgroup}
    log.info("wrote %s and %s (index %d^%d)", args.out_group, args.out_subgroup, p, alpha)


# argument parsing ---------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="hallrad", description=__doc__.splitlines()[0])
    ap.add_argument("--version", action="version", version=f"hallrad {__version__}")
    ap.add_argument("--quiet", action="store_true", help="no log on stderr")
    sub = ap.add_subparsers(dest="command", required=True)

    cat = sub.add_parser("catalog", help="the simple groups with a solvable prime-power-index subgroup")
    csub = cat.add_subparsers(dest="action", required=True)
    for name, fn in (("list", cmd_catalog_list), ("verify", cmd_catalog_verify)):
        c = csub.add_parser(name)
        c.add_argument("--p", type=int)
        c.add_argument("--qcap", type=int, default=catalog.DEFAULT_Q_CAP)
        c.add_argument("--include-large-fermat", action="store_true")
        if name == "verify":
            c.add_argument("--case", type=int)
        c.set_defaults(func=fn, label=f"catalog {name}")

    nt = sub.add_parser("numtheory", help="prime-power arithmetic")
    nsub = nt.add_subparsers(dest="action", required=True)
    c = nsub.add_parser("classify", help="classify the pair (q, q+1)")
    c.add_argument("q", type=int, nargs="+")
    c.set_defaults(func=cmd_classify, label="numtheory classify")
    c = nsub.add_parser("pi0", help="membership in the admissible prime set")
    c.add_argument("p", type=int, nargs="+")
    c.set_defaults(func=cmd_pi0, label="numtheory pi0")
    c = nsub.add_parser("scan", help="classify every q in a range")
    c.add_argument("--hi", type=int, default=10**6)
    c.add_argument("--lo", type=int, default=2)
    c.set_defaults(func=cmd_scan, label="numtheory scan")

    an = sub.add_parser("analyze", help="analyze a group with a solvable subgroup of prime-power index")
    an.add_argument("--group", required=True)
    an.add_argument("--subgroup", required=True)
    an.add_argument("--json", help="also write the report to this file")
    an.set_defaults(func=cmd_analyze, label="analyze")

    ve = sub.add_parser("verify", help="run a whole suite")
    ve.add_argument("--suite", choices=("catalog", "wreath", "corpus"), required=True)
    ve.add_argument("folder", nargs="?", help="corpus directory of NAME.group.grp / NAME.subgroup.grp")
    ve.add_argument("--dir", help="same as the positional directory")
    ve.set_defaults(func=cmd_verify, label="verify")

    co = sub.add_parser("construct", help="build a product and write group files")
    co.add_argument("kind", choices=("wreath-top", "wreath-base", "product"))
    co.add_argument("--group")
    co.add_argument("--subgroup")
    co.add_argument("--top", help="wreath-top: the solvable permutation group on the blocks")
    co.add_argument("--base", help="wreath-base: the solvable base group K")
    co.add_argument("--base-subgroup", help="wreath-base: the subgroup L of K")
    co.add_argument("--pair", action="append", help="product: GROUP:SUBGROUP, repeatable")
    co.add_argument("--out-group", required=True)
    co.add_argument("--out-subgroup", required=True)
    co.set_defaults(func=cmd_construct, label="construct")
    return ap


_NEEDED = {"wreath-top": ("group", "subgroup", "top"),
           "wreath-base": ("base", "base_subgroup", "group", "subgroup"),
           "product": ("pair",)}


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    logging.basicConfig(level=logging.WARNING if args.quiet else logging.INFO,
                        format="%(message)s", stream=sys.stderr, force=True)
    if args.command == "construct":
        missing = [n for n in _NEEDED[args.kind] if getattr(args, n) is None]
        if missing:
            flags = ", ".join("--" + m.replace("_", "-") for m in missing)
            log.error("error: construct %s needs %s", args.kind, flags)
            return EXIT_INPUT
    label = args.label
    if args.command == "verify":
        label += f" --suite {args.suite}"
    report = Report(label)
    try:
        args.func(args, report)
    except (InputError, GroupFileError, theorems.PreconditionError,
            constructions.ConstructionError, CapExceeded, ValueError) as exc:
        log.error("error: %s", exc)
        return EXIT_INPUT
    text = report.to_json()
    sys.stdout.write(text)
    if getattr(args, "json", None):
        Path(args.json).write_text(text, encoding="utf-8")
    if report.findings:
        log.warning("%d finding(s)", len(report.findings))
        return EXIT_FINDING
    return EXIT_OK


run = main


if __name__ == "__main__":
    sys.exit(main())
