"""Command-line front end.

Subcommands emit tab-delimited text on stdout; certify and gaps can
also write JSON reports and PNG figures.  Exit codes: 0 success, 1 bad
input, 2 refused because the request falls outside the carried
hypotheses.

Dual types are named by Cartan letter and rank: A n is sl(n+1), B n is
so(2n+1), C n is sp(2n), D n is so(2n).  Exceptional letters G2, F4,
E6, E7, E8 take no rank.  All rationals are read and written as exact
strings like "3/2"; no floats appear in reports.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from fractions import Fraction
from pathlib import Path

from .certify import (CertificateReport, ModuleProfile, Witness, certify,
                      spectral_gap)
from .orbits import (DualType, HypothesisError, Orbit, exceptional, h_half,
                     h_half_norm_sq, h_vector, is_classical, o_min, orbit,
                     sl, so, sp, special_orbit)
from .springer import good_set, q_matrix_at_minus1_A
from .weyl import ConjugacyClass

_EXCEPTIONAL = ("G2", "F4", "E6", "E7", "E8")


def dual_type_of(family: str, rank=None) -> DualType:
    family = family.upper()
    if family in _EXCEPTIONAL:
        return exceptional(family)
    if rank is None:
        raise ValueError(f"family {family} needs --rank")
    rank = int(rank)
    if rank < 1:
        raise ValueError("rank must be positive")
    if family == "A":
        return sl(rank + 1)
    if family == "B":
        return so(2 * rank + 1)
    if family == "C":
        return sp(2 * rank)
    if family == "D":
        return so(2 * rank)
    raise ValueError(f"unknown family {family!r}")


def family_rank_of(t: DualType) -> tuple[str, int]:
    if t.family == "sl":
        return "A", t.param - 1
    if t.family == "sp":
        return "C", t.param // 2
    if t.family == "so":
        return ("B", t.param // 2) if t.param % 2 else ("D", t.param // 2)
    return t.family, 0


# ---------------------------------------------------------------------------
# JSON forms

def _part_json(p) -> list:
    return [int(x) for x in p]


def wtype_to_json(label) -> dict:
    if label and isinstance(label[0], int):
        return {"partition": _part_json(label)}
    out = {"bipartition": [_part_json(label[0]), _part_json(label[1])]}
    if len(label) == 3:
        out["tag"] = label[2]
    return out


def wtype_from_json(obj) -> tuple:
    if "partition" in obj:
        return tuple(int(x) for x in obj["partition"])
    a, b = obj["bipartition"]
    pair = (tuple(int(x) for x in a), tuple(int(x) for x in b))
    if "tag" in obj:
        return pair + (str(obj["tag"]),)
    return pair


def dual_type_to_json(t: DualType) -> dict:
    fam, rank = family_rank_of(t)
    if fam in _EXCEPTIONAL:
        return {"family": fam}
    return {"family": fam, "rank": rank}


def dual_type_from_json(obj) -> DualType:
    return dual_type_of(obj["family"], obj.get("rank"))


def orbit_to_json(o: Orbit) -> dict:
    out = dual_type_to_json(o.dual_type)
    if is_classical(o.dual_type):
        out["partition"] = _part_json(o.data)
    else:
        out["label"] = o.data
    return out


def orbit_from_json(obj) -> Orbit:
    t = dual_type_from_json(obj)
    return orbit(t, tuple(obj["partition"]) if "partition" in obj
                 else obj["label"])


def profile_to_json(p: ModuleProfile) -> dict:
    return {"dual_type": dual_type_to_json(p.dual_type),
            "nu": [str(x) for x in p.nu],
            "wtypes": [wtype_to_json(lab) for lab in p.wtypes],
            "is_hermitian": p.is_hermitian}


def profile_from_json(obj) -> ModuleProfile:
    return ModuleProfile(dual_type_from_json(obj["dual_type"]),
                         tuple(Fraction(x) for x in obj["nu"]),
                         tuple(wtype_from_json(w) for w in obj["wtypes"]),
                         bool(obj.get("is_hermitian", True)))


def witness_to_json(w: Witness) -> dict:
    return {"orbit": None if w.orbit is None else orbit_to_json(w.orbit),
            "rule": w.rule,
            "wtype": None if w.wtype is None else wtype_to_json(w.wtype),
            "nu_norm_sq": str(w.nu_norm_sq),
            "h_half_norm_sq": (None if w.h_half_norm_sq is None
                               else str(w.h_half_norm_sq))}


def witness_from_json(obj) -> Witness:
    return Witness(None if obj["orbit"] is None else orbit_from_json(obj["orbit"]),
                   obj["rule"],
                   None if obj["wtype"] is None else wtype_from_json(obj["wtype"]),
                   Fraction(obj["nu_norm_sq"]),
                   None if obj["h_half_norm_sq"] is None
                   else Fraction(obj["h_half_norm_sq"]))


def report_to_json(r: CertificateReport) -> dict:
    return {"verdict": r.verdict,
            "witnesses": [witness_to_json(w) for w in r.witnesses],
            "region": r.region,
            "log": list(r.log)}


def report_from_json(obj) -> CertificateReport:
    return CertificateReport(obj["verdict"],
                             tuple(witness_from_json(w)
                                   for w in obj["witnesses"]),
                             obj["region"], tuple(obj["log"]))


# ---------------------------------------------------------------------------
# Text forms

def _part_text(p) -> str:
    return "(" + ",".join(str(x) for x in p) + ")"


def format_label(label) -> str:
    if isinstance(label, str):
        return label
    if label and isinstance(label[0], int):
        return _part_text(label)
    body = f"{_part_text(label[0])}x{_part_text(label[1])}"
    if len(label) == 3:
        return f"({body}){label[2]}"
    return body


def parse_partition(text: str) -> tuple[int, ...]:
    text = text.strip().strip("()")
    if not text:
        return ()
    return tuple(int(x) for x in text.split(","))


# ---------------------------------------------------------------------------
# Subcommands

def _cmd_good(args) -> int:
    t = dual_type_of(args.family, args.rank)
    for label in sorted(good_set(t, args.orbit), key=format_label):
        print(format_label(label))
    return 0


def _cmd_omin(args) -> int:
    o = o_min(dual_type_of(args.family, args.rank))
    print(o.data if isinstance(o.data, str) else _part_text(o.data))
    return 0


def _cmd_hvec(args) -> int:
    t = dual_type_of(args.family, args.rank)
    o = orbit(t, parse_partition(args.partition))
    print("h\t" + ",".join(str(x) for x in h_vector(t, o)))
    print("h_half\t" + ",".join(str(x) for x in h_half(t, o)))
    print("norm_sq\t" + str(h_half_norm_sq(t, o)))
    return 0


def _cmd_certify(args) -> int:
    with open(args.infile) as fh:
        profile = profile_from_json(json.load(fh))
    report = certify(profile)
    print("verdict\t" + report.verdict)
    for w in report.witnesses:
        o_text = "-" if w.orbit is None else _part_text(w.orbit.data)
        l_text = "-" if w.wtype is None else format_label(w.wtype)
        h_text = "-" if w.h_half_norm_sq is None else str(w.h_half_norm_sq)
        print(f"witness\t{w.rule}\t{o_text}\t{l_text}\t"
              f"{w.nu_norm_sq}\t{h_text}")
    print("region\t" + report.region)
    for line in report.log:
        print("log\t" + line)
    if args.json:
        Path(args.json).write_text(
            json.dumps(report_to_json(report), indent=2) + "\n")
    if args.plot:
        from .plots import certificate_figure, save_figure
        save_figure(certificate_figure(report, profile), args.plot)
    return 0


def _cmd_gaps(args) -> int:
    t = dual_type_of(args.family, args.rank)
    if args.norm_sq is not None:
        g = spectral_gap(t, Fraction(args.norm_sq))
        for name, value in g.endpoints:
            print(f"endpoint\t{name}\t{value}")
        print(f"region\t{g.region}\t{g.annotation}")
    else:
        for which in ("regular", "subregular", "subsubregular"):
            try:
                value = h_half_norm_sq(t, special_orbit(t, which))
            except HypothesisError:
                break
            print(f"endpoint\t{which}\t{value}")
    if args.plot:
        from .plots import gap_figure, save_figure
        q = None if args.norm_sq is None else Fraction(args.norm_sq)
        save_figure(gap_figure(t, q), args.plot)
    return 0


_TABLE_TYPES = (("A", 3), ("A", 4), ("A", 5), ("B", 3), ("B", 4),
                ("C", 3), ("C", 4), ("D", 4), ("D", 5),
                ("G2", None), ("F4", None))


def _cmd_tables(args) -> int:
    from . import fixtures
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)

    goods = {}
    for fam, rank in _TABLE_TYPES:
        t = dual_type_of(fam, rank)
        key = fam if rank is None else f"{fam}{rank}"
        entry = {}
        for which in ("regular", "subregular", "subsubregular"):
            try:
                entry[which] = sorted(format_label(lab)
                                      for lab in good_set(t, which))
            except (HypothesisError, ValueError):
                continue
        goods[key] = entry
    (out / "good_sets.json").write_text(json.dumps(goods, indent=2) + "\n")

    qdata = []
    for n in range(2, 7):
        from .partitions import partitions_of
        labels = partitions_of(n)
        qdata.append({"n": n,
                      "labels": [_part_json(lam) for lam in labels],
                      "q_minus1": [list(row)
                                   for row in q_matrix_at_minus1_A(n)]})
    (out / "q_minus1.json").write_text(json.dumps(qdata, indent=2) + "\n")

    scen = {"A3": {"nu": [str(x) for x in fixtures.A3_NU], "rows": []},
            "C3": {"nu": [str(x) for x in fixtures.C3_NU], "rows": []},
            "F4": {"rows": []}}
    verdicts = {}
    for fam, row, prof in fixtures.scenario_profiles():
        key = "A3" if fam == "A" else "C3"
        verdict = certify(prof).verdict
        verdicts[(key, row.name)] = verdict
        scen[key]["rows"].append(
            {"name": row.name, "orbit": _part_json(row.orbit),
             "local_system": row.local_system,
             "wtypes": [wtype_to_json(w) for w in row.wtypes],
             "unitary": row.unitary, "hermitian": row.hermitian,
             "verdict": verdict})
    for r in fixtures.F4_ROWS:
        scen["F4"]["rows"].append(
            {"name": r.name, "orbit": r.orbit,
             "local_system": r.local_system,
             "wstructure": [[lab, m] for lab, m in r.wstructure],
             "unitary": r.unitary, "dual": r.dual})
    (out / "scenarios.json").write_text(json.dumps(scen, indent=2) + "\n")

    with open(out / "summary.csv", "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["family", "name", "orbit", "local_system",
                         "unitary", "verdict"])
        for fam, row, _ in fixtures.scenario_profiles():
            key = "A3" if fam == "A" else "C3"
            writer.writerow([key, row.name, _part_text(row.orbit),
                             row.local_system, row.unitary,
                             verdicts[(key, row.name)]])
        for r in fixtures.F4_ROWS:
            writer.writerow(["F4", r.name, r.orbit, r.local_system,
                             r.unitary, ""])
    for name in ("good_sets.json", "q_minus1.json", "scenarios.json",
                 "summary.csv"):
        print(f"wrote\t{out / name}")
    return 0


# ---------------------------------------------------------------------------

def _build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="weylcert",
        description="Exact Weyl-group certificates for unramified "
                    "principal series")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("good", help="list the good W-types at an orbit norm")
    p.add_argument("--family", required=True)
    p.add_argument("--rank", type=int)
    p.add_argument("--orbit", default="subregular",
                   choices=("regular", "subregular", "subsubregular"))
    p.set_defaults(func=_cmd_good)

    p = sub.add_parser("omin", help="print the minimal orbit with solvable "
                                    "centralizer")
    p.add_argument("--family", required=True)
    p.add_argument("--rank", type=int)
    p.set_defaults(func=_cmd_omin)

    p = sub.add_parser("hvec", help="print h, h/2 and |h/2|^2 for an orbit")
    p.add_argument("--family", required=True)
    p.add_argument("--rank", type=int)
    p.add_argument("--partition", required=True,
                   help="orbit partition, e.g. 4,2")
    p.set_defaults(func=_cmd_hvec)

    p = sub.add_parser("certify", help="run the certificate engine on a "
                                       "profile JSON file")
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--json", help="write the report as JSON here")
    p.add_argument("--plot", help="write a PNG figure here")
    p.set_defaults(func=_cmd_certify)

    p = sub.add_parser("gaps", help="print orbit-norm endpoints and locate "
                                    "a squared norm")
    p.add_argument("--family", required=True)
    p.add_argument("--rank", type=int)
    p.add_argument("--norm-sq", dest="norm_sq",
                   help="exact rational, e.g. 35/2")
    p.add_argument("--plot", help="write a PNG figure here")
    p.set_defaults(func=_cmd_gaps)

    p = sub.add_parser("tables", help="write the reference tables to a "
                                      "directory")
    p.add_argument("--out", default="weylcert-tables")
    p.set_defaults(func=_cmd_tables)
    return ap


def cli_main(argv=None) -> int:
    try:
        args = _build_parser().parse_args(argv)
    except SystemExit as e:
        return 0 if e.code == 0 else 1
    try:
        return args.func(args)
    except HypothesisError as e:
        print(f"refused: {e}", file=sys.stderr)
        return 2
    except (ValueError, ArithmeticError, OSError, KeyError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 1


def main() -> None:
    raise SystemExit(cli_main())
