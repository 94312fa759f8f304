"""Command-line front-end.

Subcommands
-----------
syt        list (or count) the standard tableaux of a shape
pedestal   the pedestal of a pair of extensions
poly       the pedestal polynomial of a shape or poset
pi         its one-variable volume specialization
verify     run an exact verifier: theorem, id01, id04, majcomaj, family
bijection  apply the splitting map (fwd) or its inverse (inv)

Targets are given as ``--shape 3,2`` (comma-separated parts) or
``--poset file.json`` with ``{"elements": [...], "covers": [[a, b], ...]}``.
Extensions are given as ``canonical``, a tableau literal ``[[1,3],[2]]`` for
shapes, or a label array ``["a","b"]`` for posets.  Output is canonical JSON
(byte-identical across runs) unless ``--format text`` is passed.

``verify`` exits 0 when the identity holds, 1 with a mismatch report when it
is falsified, and 2 on malformed input.  ``PEDESTAL_THREADS`` caps the
thread count used by the theorem verifier.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Sequence

from .errors import PedestalError
from .pedestal import (
    Pedestal,
    b_st,
    b_st_inverse,
    independence_report,
    pedestal,
    pedestal_polynomial,
    pi_poly,
)
from .posets import (
    LinearExtension,
    Poset,
    canonical_extension,
    extension_of_tableau,
    poset_from_covers,
)
from .ring import (
    FamilyReport,
    Series,
    UniPoly,
    family_membership_check,
    identity_01_report,
    identity_04_report,
    maj_comaj_report,
)
from .rpp import ReversePlanePartition, make_rpp, rpp_from_rows
from .shapes import (
    Partition,
    StandardTableau,
    enumerate_syt,
    make_partition,
    syt_count,
)


def canonical_json(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


# ---------------------------------------------------------------- parsing


def _parse_shape(text: str) -> Partition:
    parts = [int(p) for p in text.split(",") if p.strip() != ""]
    return make_partition(parts)


def _load_poset(path: str) -> Poset:
    with open(path, "r", encoding="utf-8") as handle:
        obj = json.load(handle)
    elements = obj["elements"]
    covers = [tuple(pair) for pair in obj["covers"]]
    return poset_from_covers(elements, covers)


def _resolve_target(args) -> tuple[Poset, Partition | None]:
    shape_given = getattr(args, "shape", None) is not None
    poset_given = getattr(args, "poset", None) is not None
    if shape_given == poset_given:
        raise PedestalError("exactly one of --shape and --poset is required")
    if shape_given:
        shape = _parse_shape(args.shape)
        from .posets import young_poset

        return young_poset(shape), shape
    return _load_poset(args.poset), None


def _parse_extension(poset: Poset, shape: Partition | None, literal: str | None) -> LinearExtension:
    if literal is None or literal == "canonical":
        return canonical_extension(poset)
    obj = json.loads(literal)
    if shape is not None:
        tab = StandardTableau.from_rows(obj)
        ext = extension_of_tableau(tab)
        if ext.poset != poset:
            raise PedestalError(f"tableau is not of shape {shape}")
        return ext
    return LinearExtension(poset, tuple(obj))


def _parse_rpp(poset: Poset, shape: Partition | None, literal: str) -> ReversePlanePartition:
    obj = json.loads(literal)
    if shape is not None:
        return rpp_from_rows(shape, obj)
    if not isinstance(obj, dict) or "values" not in obj:
        raise PedestalError('poset fillings are given as {"values": {...}}')
    return make_rpp(poset, obj["values"])


# -------------------------------------------------------------- rendering


def _extension_obj(ext: LinearExtension):
    shape = ext.poset.shape
    if shape is not None:
        from .posets import tableau_of_extension

        return [list(r) for r in tableau_of_extension(shape, ext).rows]
    return list(ext.order)


def _rpp_obj(filling: ReversePlanePartition):
    if filling.poset.shape is not None:
        return [list(r) for r in filling.rows()]
    return {"values": {str(e): v for e, v in zip(filling.poset.elements, filling.values)}}


def _pedestal_obj(ped: Pedestal) -> dict:
    return {
        "values": _rpp_obj(ped.rpp),
        "P": _extension_obj(ped.p_ext),
        "Q": _extension_obj(ped.q_ext),
    }


def _target_obj(shape: Partition | None, args) -> dict:
    if shape is not None:
        return {"shape": list(shape.parts)}
    return {"poset": args.poset}


def _monomial_text(m: tuple[int, ...]) -> str:
    if not m:
        return "1"
    pieces = []
    seen: dict[int, int] = {}
    for i in m:
        seen[i] = seen.get(i, 0) + 1
    for i in sorted(seen):
        k = seen[i]
        pieces.append(f"x{i}" if k == 1 else f"x{i}^{k}")
    return "*".join(pieces)


def _series_text(s: Series) -> str:
    if not s.terms:
        return "0"
    out = []
    for m, c in s.sorted_terms():
        body = _monomial_text(m)
        out.append(body if c == 1 else f"{c}*{body}")
    return " + ".join(out)


def _poly_text(p: UniPoly) -> str:
    if not p.coeffs:
        return "0"
    out = []
    for k, c in enumerate(p.coeffs):
        if c == 0:
            continue
        if k == 0:
            out.append(str(c))
        else:
            x = "x" if k == 1 else f"x^{k}"
            out.append(x if c == 1 else f"{c}*{x}")
    return " + ".join(out)


def _rpp_text(filling: ReversePlanePartition) -> str:
    if filling.poset.shape is not None:
        return " | ".join(" ".join(map(str, row)) for row in filling.rows())
    return " ".join(
        f"{e}={v}" for e, v in zip(filling.poset.elements, filling.values)
    )


def _extension_text(ext: LinearExtension) -> str:
    shape = ext.poset.shape
    if shape is not None:
        from .posets import tableau_of_extension

        return str(tableau_of_extension(shape, ext))
    return " ".join(str(e) for e in ext.order)


def _emit(args, obj, text: str) -> None:
    if args.format == "text":
        print(text)
    else:
        print(canonical_json(obj))


# --------------------------------------------------------------- commands


def _cmd_syt(args) -> int:
    shape = _parse_shape(args.shape)
    if args.count:
        count = syt_count(shape)
        _emit(args, count, str(count))
        return 0
    tabs = list(enumerate_syt(shape))
    obj = [[list(r) for r in t.rows] for t in tabs]
    _emit(args, obj, "\n".join(str(t) for t in tabs) if tabs else "(none)")
    return 0


def _cmd_pedestal(args) -> int:
    poset, shape = _resolve_target(args)
    p_ext = _parse_extension(poset, shape, args.p)
    q_ext = _parse_extension(poset, shape, args.q)
    ped = pedestal(p_ext, q_ext)
    text = (
        f"pedestal: {_rpp_text(ped.rpp)}\n"
        f"P: {_extension_text(p_ext)}\nQ: {_extension_text(q_ext)}"
    )
    _emit(args, _pedestal_obj(ped), text)
    return 0


def _cmd_poly(args) -> int:
    poset, shape = _resolve_target(args)
    p_ext = _parse_extension(poset, shape, args.p)
    series = pedestal_polynomial(p_ext)
    _emit(args, series.to_obj(), _series_text(series))
    return 0


def _cmd_pi(args) -> int:
    poset, shape = _resolve_target(args)
    poly = pi_poly(poset)
    _emit(args, poly.to_obj(), _poly_text(poly))
    return 0


def _family_obj(report: FamilyReport) -> dict:
    return {
        "shape": list(report.shape.parts),
        "tableaux": report.tableau_count,
        "family": [list(profile) for profile in report.family],
        "candidates": [
            {
                "name": c.name,
                "values": list(c.values),
                "member": c.member,
                "matching_tableau": (
                    [list(r) for r in c.matching_tableau.rows]
                    if c.matching_tableau is not None
                    else None
                ),
            }
            for c in report.candidates
        ],
    }


def _cmd_verify(args) -> int:
    threads = max(1, int(os.environ.get("PEDESTAL_THREADS", "1") or "1"))
    poset, shape = _resolve_target(args)
    result: dict = {"verifier": args.check}
    result.update(_target_obj(shape, args))
    ok = True
    text_lines = []

    if args.check == "theorem":
        report = independence_report(poset, threads=threads)
        ok = report is None
        if report is not None:
            result["mismatch"] = {
                "reference": _extension_obj(report.reference),
                "other": _extension_obj(report.other),
                "monomial": list(report.mismatch.monomial),
                "lhs": report.mismatch.lhs,
                "rhs": report.mismatch.rhs,
            }
            text_lines.append(
                f"FALSIFIED: polynomials differ at {report.mismatch.monomial}"
            )
    elif args.check == "id01":
        volume = args.volume if args.volume is not None else 2 * poset.n
        result["volume"] = volume
        p_ext = _parse_extension(poset, shape, args.p)
        mismatch = identity_01_report(poset, p_ext, volume)
        ok = mismatch is None
        if mismatch is not None:
            result["mismatch"] = {
                "monomial": list(mismatch.monomial),
                "lhs": mismatch.lhs,
                "rhs": mismatch.rhs,
            }
            text_lines.append(
                f"FALSIFIED at {mismatch.monomial}: {mismatch.lhs} != {mismatch.rhs}"
            )
    elif args.check in ("id04", "majcomaj", "family"):
        if shape is None:
            raise PedestalError(f"verify {args.check} requires --shape")
        if args.check == "family":
            report = family_membership_check(shape)
            ok = report.all_outside
            result.update(_family_obj(report))
            for c in report.candidates:
                status = "inside" if c.member else "outside"
                text_lines.append(f"{c.name}: {status} the family")
        else:
            checker = identity_04_report if args.check == "id04" else maj_comaj_report
            mismatch = checker(shape)
            ok = mismatch is None
            if mismatch is not None:
                result["mismatch"] = {
                    "label": mismatch.label,
                    "degree": mismatch.degree,
                    "lhs": mismatch.lhs,
                    "rhs": mismatch.rhs,
                }
                text_lines.append(
                    f"FALSIFIED ({mismatch.label}) at degree {mismatch.degree}:"
                    f" {mismatch.lhs} != {mismatch.rhs}"
                )

    result["ok"] = ok
    text_lines.insert(0, "ok" if ok else "falsified")
    _emit(args, result, "\n".join(text_lines))
    return 0 if ok else 1


def _cmd_bijection(args) -> int:
    poset, shape = _resolve_target(args)
    p_ext = _parse_extension(poset, shape, args.p)
    if args.direction == "fwd":
        if args.rpp is None:
            raise PedestalError("bijection fwd requires --rpp")
        filling = _parse_rpp(poset, shape, args.rpp)
        ped, mu = b_st(p_ext, filling)
        obj = {"pedestal": _pedestal_obj(ped), "mu": list(mu.parts)}
        text = (
            f"pedestal: {_rpp_text(ped.rpp)}\nQ: {_extension_text(ped.q_ext)}\n"
            f"mu: {mu}"
        )
        _emit(args, obj, text)
        return 0
    if args.q is None:
        raise PedestalError("bijection inv requires --q")
    q_ext = _parse_extension(poset, shape, args.q)
    mu = _parse_shape(args.mu) if args.mu else make_partition([])
    filling = b_st_inverse(p_ext, q_ext, mu)
    _emit(args, _rpp_obj(filling), _rpp_text(filling))
    return 0


# ----------------------------------------------------------------- driver


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pedestals",
        description="Exact pedestal-polynomial computations and identity verifiers.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p: argparse.ArgumentParser, poset_ok: bool = True) -> None:
        p.add_argument("--shape", help="comma-separated parts, e.g. 3,2")
        if poset_ok:
            p.add_argument("--poset", help="path to a poset JSON file")
        p.add_argument(
            "--format", choices=("json", "text"), default="json",
            help="output rendering (default json)",
        )

    p = sub.add_parser("syt", help="list or count standard tableaux")
    p.add_argument("--shape", required=True)
    p.add_argument("--count", action="store_true", help="print only the count")
    p.add_argument("--format", choices=("json", "text"), default="json")
    p.set_defaults(handler=_cmd_syt)

    p = sub.add_parser("pedestal", help="pedestal of a pair of extensions")
    common(p)
    p.add_argument("--p", default="canonical", help="base extension")
    p.add_argument("--q", required=True, help="comparison extension")
    p.set_defaults(handler=_cmd_pedestal)

    p = sub.add_parser("poly", help="pedestal polynomial")
    common(p)
    p.add_argument("--p", default="canonical", help="base extension")
    p.set_defaults(handler=_cmd_poly)

    p = sub.add_parser("pi", help="volume specialization of the pedestal polynomial")
    common(p)
    p.set_defaults(handler=_cmd_pi)

    p = sub.add_parser("verify", help="run an exact verifier")
    p.add_argument(
        "check", choices=("theorem", "id01", "id04", "majcomaj", "family")
    )
    common(p)
    p.add_argument("--p", default="canonical", help="base extension (id01)")
    p.add_argument(
        "--volume", "-V", type=int, default=None,
        help="volume bound for id01 (default 2n)",
    )
    p.set_defaults(handler=_cmd_verify)

    p = sub.add_parser("bijection", help="splitting map between fillings and pairs")
    p.add_argument("direction", choices=("fwd", "inv"))
    common(p)
    p.add_argument("--p", default="canonical", help="base extension")
    p.add_argument("--rpp", help="filling literal (fwd)")
    p.add_argument("--q", help="comparison extension (inv)")
    p.add_argument("--mu", default="", help="partition literal, e.g. 2,1 (inv)")
    p.set_defaults(handler=_cmd_bijection)

    return parser


def run(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as stop:
        return int(stop.code or 0)
    try:
        return args.handler(args)
    except (PedestalError, ValueError, KeyError, OSError, json.JSONDecodeError) as err:
        print(f"error: {err}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
