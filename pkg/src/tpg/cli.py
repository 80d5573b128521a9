"""Command line front end for the catalog, tables, proofs, and certificates.

Exit codes: 0 success, 1 verified discrepancy or failed check, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from dataclasses import dataclass
from pathlib import Path

from . import classify
from .axial import cert_from_dict, cert_to_dict, obstruct, verify_certificate
from .dihedral import (
    DIHEDRAL_TYPES,
    build,
    check_fusion,
    check_inclusion,
    check_m1,
    check_miyamoto,
)
from .fpgrp import parse_word, todd_coxeter, tp_presentation
from .permgrp import CapacityError

__all__ = ["RunConfig", "main", "run"]

CERT_SCHEMA = "tpg.certificate/1"


@dataclass(frozen=True)
class RunConfig:
    subcommand: str
    targets: tuple[str, ...]
    out: Path
    format: str
    verify: bool
    jobs: int
    capacity: int


def _parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="tpg",
        description="classification toolkit for triangle-point groups")
    p.add_argument("--out", default="out", metavar="DIR",
                   help="directory for emitted artifacts (default: out)")
    p.add_argument("--format", choices=("json", "markdown"),
                   default="markdown", help="stdout rendering")
    p.add_argument("--jobs", type=int, default=1, metavar="N",
                   help="parallel workers across independent targets")
    p.add_argument("--coset-capacity", type=int, default=10 ** 6, metavar="N",
                   dest="capacity", help="coset table size ceiling")
    p.add_argument("--verify", action="store_true",
                   help="re-check emitted artifacts where applicable")
    sub = p.add_subparsers(dest="subcommand", required=True)

    sc = sub.add_parser("catalog", help="maximal groups with validation")
    sc.add_argument("--only", metavar="NAME", help="restrict to one group")

    sn = sub.add_parser("normals",
                        help="normal subgroups of index > 12 with quotients")
    sn.add_argument("group", metavar="NAME")

    sd = sub.add_parser("dihedral", help="dihedral algebra checks")
    sd.add_argument("action", choices=("verify",))

    se = sub.add_parser("enumerate", help="coset enumeration from a file")
    se.add_argument("file", metavar="PRESENTATION")

    so = sub.add_parser("obstruct",
                        help="certify non-existence for an excluded type")
    so.add_argument("target", metavar="TYPE")

    sub.add_parser("classify", help="full pipeline with report emission")

    sv = sub.add_parser("verify", help="re-check a certificate file")
    sv.add_argument("file", metavar="CERTIFICATE")

    return p


def _config(ns: argparse.Namespace) -> RunConfig:
    targets = tuple(
        t for t in (getattr(ns, "only", None), getattr(ns, "group", None),
                    getattr(ns, "target", None), getattr(ns, "file", None))
        if t is not None)
    return RunConfig(
        subcommand=ns.subcommand, targets=targets, out=Path(ns.out),
        format=ns.format, verify=ns.verify, jobs=ns.jobs,
        capacity=ns.capacity)


def _usage_error(msg: str) -> int:
    print(f"tpg: error: {msg}", file=sys.stderr)
    return 2


def _table(headers: list[str], rows: list[list[str]]) -> str:
    lines = ["| " + " | ".join(headers) + " |",
             "| " + " | ".join("---" for _ in headers) + " |"]
    lines += ["| " + " | ".join(row) + " |" for row in rows]
    return "\n".join(lines)


# -- subcommands -----------------------------------------------------------------


def _cmd_catalog(cfg: RunConfig) -> int:
    only = cfg.targets[0] if cfg.targets else None
    if only is not None and only not in classify.GROUP_NAMES:
        return _usage_error(f"unknown group {only!r}; "
                            f"expected one of {', '.join(classify.GROUP_NAMES)}")
    entries = [e for e in classify.catalog() if only in (None, e.name)]
    if cfg.verify:
        for e in entries:
            lattice = classify.normal_subgroups_index_gt(e.group, 12)
            classify.quotient_records(e, lattice)
    rows = []
    for e in entries:
        r = ",".join("-" if x is None else str(x) for x in e.r)
        rows.append({
            "name": e.name, "type": e.claimed, "mnp": list(e.mnp),
            "r": r, "order": e.order, "source": e.source,
            "normals_index_gt_12": len(classify.table_rows(e.name)),
        })
    if cfg.format == "json":
        print(json.dumps(rows, indent=2))
    else:
        print(_table(
            ["name", "type", "(m,n,p)", "r", "order", "normals(index>12)"],
            [[d["name"], d["type"], str(tuple(d["mnp"])), f"({d['r']})",
              str(d["order"]), str(d["normals_index_gt_12"])] for d in rows]))
    return 0


def _cmd_normals(cfg: RunConfig) -> int:
    name = cfg.targets[0]
    if name not in classify.GROUP_NAMES:
        return _usage_error(f"unknown group {name!r}; "
                            f"expected one of {', '.join(classify.GROUP_NAMES)}")
    entry = next(e for e in classify.catalog() if e.name == name)
    recs = classify.quotient_records(entry)
    if cfg.format == "json":
        print(json.dumps([
            {"subgroup_order": r.subgroup_order, "words": list(r.words),
             "quotient_order": r.quotient_order, "type": r.type_name,
             "triangle_point": r.triangle_point, "repaired": r.repaired}
            for r in recs], indent=2))
    else:
        print(_table(
            ["|N|", "X", "quotient order", "type"],
            [[str(r.subgroup_order),
              ", ".join(r.words) + (" *" if r.repaired else ""),
              str(r.quotient_order), r.type_name] for r in recs]))
        if not recs:
            print(f"{name}: no normal subgroups of index > 12")
    return 0


def _cmd_dihedral(cfg: RunConfig) -> int:
    results = []
    for t in DIHEDRAL_TYPES:
        alg = build(t)
        failures = check_m1(alg) + check_fusion(alg) + check_miyamoto(alg)
        if t in ("4A", "4B", "6A"):
            failures += check_inclusion(alg)
        results.append({
            "type": t, "dim": alg.dim, "failures": failures,
            "gram_psd": alg.gram.is_psd(),
        })
    bad = [r for r in results if r["failures"] or not r["gram_psd"]]
    if cfg.format == "json":
        print(json.dumps(results, indent=2))
    else:
        for r in results:
            status = "ok" if r not in bad else "FAIL " + "; ".join(r["failures"])
            print(f"{r['type']}: dim {r['dim']}, gram "
                  f"{'psd' if r['gram_psd'] else 'NOT PSD'}, {status}")
    return 1 if bad else 0


def _read_presentation(path: Path):
    """Parse an enumeration request: mnp/r exponents plus extra words.

    Lines: `mnp: M N P`, optional `r: R1 R2 R3 R4 R5` ('-' = omitted),
    `relator: WORD`, `subgroup: WORD`, '#' comments.
    """
    mnp = None
    r = (None,) * 5
    extra: list[str] = []
    subgroup: list[str] = []
    for raw in path.read_text().splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, _, rest = line.partition(":")
        key, rest = key.strip(), rest.strip()
        if key == "mnp":
            mnp = tuple(int(x) for x in rest.split())
            if len(mnp) != 3:
                raise ValueError("mnp needs three integers")
        elif key == "r":
            parts = rest.split()
            if len(parts) != 5:
                raise ValueError("r needs five entries ('-' = omitted)")
            r = tuple(None if x == "-" else int(x) for x in parts)
        elif key == "relator":
            extra.append(rest)
        elif key == "subgroup":
            subgroup.append(rest)
        else:
            raise ValueError(f"unrecognized line {raw!r}")
    if mnp is None:
        raise ValueError("missing 'mnp:' line")
    pres = tp_presentation(*mnp, r)
    for w in extra:
        pres = pres.with_relator(parse_word(w), 1)
    return pres, tuple(parse_word(w) for w in subgroup)


def _cmd_enumerate(cfg: RunConfig) -> int:
    path = Path(cfg.targets[0]) if cfg.targets else None
    assert path is not None
    if not path.is_file():
        return _usage_error(f"no such file: {path}")
    try:
        pres, subgroup = _read_presentation(path)
    except ValueError as exc:
        return _usage_error(f"{path}: {exc}")
    try:
        table = todd_coxeter(pres, subgroup=subgroup, capacity=cfg.capacity)
    except CapacityError as exc:
        print(f"tpg: enumeration aborted: {exc}", file=sys.stderr)
        return 1
    if cfg.format == "json":
        print(json.dumps({"cosets": table.coset_count}))
    else:
        print(f"cosets: {table.coset_count}")
    return 0


def _safe_name(name: str) -> str:
    return re.sub(r"[^A-Za-z0-9]+", "_", name).strip("_")


def _cert_summary(cert) -> str:
    if cert.kind == "klein":
        members = ", ".join(p for p, _ in cert.members)
        return f"klein witness {members}"
    return (f"m1-audit witness triple {', '.join(cert.triple)}: "
            f"(u.v, w) = {cert.lhs} but (u, v.w) = {cert.rhs}")


def _cmd_obstruct(cfg: RunConfig) -> int:
    name = cfg.targets[0]
    if name not in classify.EXCLUDED_TYPE_NAMES:
        known = ", ".join(classify.EXCLUDED_TYPE_NAMES)
        return _usage_error(f"unknown excluded type {name!r}; expected one "
                            f"of: {known}")
    tcfg = classify.target_config(name)
    cert = obstruct(tcfg)
    if cert is None:
        print(f"tpg: no obstruction certified for {name}", file=sys.stderr)
        return 1
    if cfg.verify and not verify_certificate(tcfg, cert):
        print(f"tpg: emitted certificate failed re-verification for {name}",
              file=sys.stderr)
        return 1
    cfg.out.mkdir(parents=True, exist_ok=True)
    payload = {"schema": CERT_SCHEMA, "type": name,
               "certificate": cert_to_dict(cert)}
    dest = cfg.out / f"{_safe_name(name)}.cert.json"
    dest.write_text(json.dumps(payload, indent=2) + "\n")
    if cfg.format == "json":
        print(json.dumps(payload, indent=2))
    else:
        print(f"{name} (order {cert.group_order}): {_cert_summary(cert)}")
        print(f"wrote {dest}")
    return 0


def _cmd_verify(cfg: RunConfig) -> int:
    path = Path(cfg.targets[0]) if cfg.targets else None
    assert path is not None
    if not path.is_file():
        return _usage_error(f"no such file: {path}")
    try:
        payload = json.loads(path.read_text())
    except json.JSONDecodeError as exc:
        return _usage_error(f"{path}: invalid JSON ({exc})")
    if payload.get("schema") != CERT_SCHEMA:
        return _usage_error(f"{path}: expected schema {CERT_SCHEMA}")
    name = payload.get("type")
    if name not in classify.EXCLUDED_TYPE_NAMES:
        return _usage_error(f"{path}: unknown excluded type {name!r}")
    try:
        cert = cert_from_dict(payload["certificate"])
    except (KeyError, ValueError) as exc:
        return _usage_error(f"{path}: malformed certificate ({exc})")
    tcfg = classify.target_config(name)
    ok = verify_certificate(tcfg, cert)
    if cfg.format == "json":
        print(json.dumps({"type": name, "verified": ok}))
    else:
        verdict = "verified" if ok else "REJECTED"
        print(f"{name}: {verdict} ({_cert_summary(cert)})")
    return 0 if ok else 1


def _cmd_classify(cfg: RunConfig) -> int:
    report = classify.classify_all(jobs=max(1, cfg.jobs))
    paths = classify.write_outputs(report, cfg.out)
    rec = report.reconciliation
    if cfg.format == "json":
        print(json.dumps(classify.report_to_json(report), indent=2))
    else:
        print(f"distinct triangle-point types: {rec['computed_total']} "
              f"(stated: {rec['stated_total']})")
        print(f"excluded: {rec['computed_excluded']} "
              f"(stated: {rec['stated_excluded']})")
        print(f"admissible: {rec['computed_admissible']} "
              f"(stated: {rec['stated_admissible']})")
        for line in report.repairs:
            print(f"repair: {line}")
        for line in report.discrepancies:
            print(f"discrepancy: {line}")
        for p in paths:
            print(f"wrote {p}")
    return 1 if report.discrepancies else 0


def run(argv: list[str] | None = None) -> int:
    try:
        ns = _parser().parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    cfg = _config(ns)
    if cfg.jobs < 1:
        return _usage_error("--jobs must be at least 1")
    if cfg.capacity < 1:
        return _usage_error("--coset-capacity must be positive")
    handler = {
        "catalog": _cmd_catalog,
        "normals": _cmd_normals,
        "dihedral": _cmd_dihedral,
        "enumerate": _cmd_enumerate,
        "obstruct": _cmd_obstruct,
        "classify": _cmd_classify,
        "verify": _cmd_verify,
    }[cfg.subcommand]
    try:
        return handler(cfg)
    except classify.ClassificationError as exc:
        print(f"tpg: verified discrepancy: {exc}", file=sys.stderr)
        return 1


def main() -> int:
    return run()


if __name__ == "__main__":
    sys.exit(main())
