"""``locale-lab`` command line.

Exit codes: 0 pass / true, 1 fail / false, 2 invalid input.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .catalog import generate_catalog, resolve_frame_id
from .classifiers import FRAME_CLASSES, frame_class, frame_classes, table_audit
from .embeddings import EMBEDDING_CLASSES, EmbeddedSublocale, embedding_class, embedding_classes
from .errors import LocaleLabError
from .io import frame_to_json, hom_from_json
from .maps import MAP_CLASSES, LocalicMap, map_class, map_classes
from .reflections import KINDS, reflect
from .selections import (
    BETA_MODES,
    LAMBDA_MODES,
    beta_thm_witness,
    gamma_witness,
    lambda_thm_witness,
    selection,
    st_lambda_witness,
)
from .sublocales import Sublocale, is_sublocale
from .suites import SUITES, SuiteConfig, run_suite

EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2


class InputError(Exception):
    pass


def _frame(ref: str, max_poset: int | None = None):
    return resolve_frame_id(ref, max_poset)


def _load_json_arg(arg: str):
    """Inline JSON, or a path to a JSON file."""
    text = arg if arg.lstrip().startswith("{") else Path(arg).read_text()
    return json.loads(text)


def _map(args) -> LocalicMap:
    h = hom_from_json(_load_json_arg(args.hom), lambda ref: _frame(ref, args.max_poset))
    return LocalicMap(h)


def _flag(v: bool) -> str:
    return "yes" if v else "no"


def cmd_gen(args) -> int:
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    index = []
    for e in generate_catalog(args.max_poset):
        (out / f"{e.id}.json").write_text(json.dumps(frame_to_json(e.frame), indent=1) + "\n")
        index.append({"id": e.id, "n": e.frame.n, "provenance": e.provenance})
    (out / "index.json").write_text(json.dumps(index, indent=1) + "\n")
    print(f"wrote {len(index)} frames to {out}")
    return EXIT_OK


def cmd_classify(args) -> int:
    if args.audit_tables:
        frames = (
            [(args.frame, _frame(args.frame, args.max_poset))]
            if args.frame
            else [(e.id, e.frame) for e in generate_catalog(args.max_poset)]
        )
        cells = [dict(frame=fid, **cell.to_dict()) for fid, F in frames for cell in table_audit(F)]
        bad = [c for c in cells if c["asserted"] and not c["agrees"]]
        print(json.dumps({"cells": cells, "disagreements": len(bad)}, indent=1))
        return EXIT_FAIL if bad else EXIT_OK
    if not args.frame:
        raise InputError("classify needs --frame (or --audit-tables)")
    F = _frame(args.frame, args.max_poset)
    if args.tag:
        value = frame_class(F, args.tag)
        print(f"{args.tag}: {_flag(value)}")
        return EXIT_OK if value else EXIT_FAIL
    width = max(map(len, FRAME_CLASSES))
    for tag, value in frame_classes(F).items():
        print(f"{tag:<{width}}  {_flag(value)}")
    return EXIT_OK


def cmd_map_class(args) -> int:
    f = _map(args)
    if args.tag:
        value = map_class(f, args.tag)
        print(f"{args.tag}: {_flag(value)}")
        return EXIT_OK if value else EXIT_FAIL
    width = max(map(len, MAP_CLASSES))
    for tag, value in map_classes(f).items():
        print(f"{tag:<{width}}  {_flag(value)}")
    return EXIT_OK


def _modes(kind: str, mode: str) -> list[str]:
    thm_modes = BETA_MODES if kind == "beta" else LAMBDA_MODES
    if mode == "all":
        return ["defn"] + [f"thm:{m}" for m in thm_modes]
    if mode == "defn":
        return ["defn"]
    if mode.startswith("thm:") and mode[4:] in thm_modes:
        return [mode]
    raise InputError(f"mode {mode!r} not available for {kind}; use defn, all or thm:{{{','.join(thm_modes)}}}")


def cmd_gamma_check(args) -> int:
    f = _map(args)
    sel = selection(args.selection)
    if args.target_selection:
        if args.kind != "lambda":
            raise InputError("--target-selection needs --kind lambda")
        w = st_lambda_witness(f, sel, selection(args.target_selection))
        print(f"ST-lambda[{sel.name},{args.target_selection}]: {_flag(w is None)}")
        if w is not None:
            print(f"  witness: {w!r}")
        return EXIT_OK if w is None else EXIT_FAIL
    results = {}
    for mode in _modes(args.kind, args.mode):
        if mode == "defn":
            w = gamma_witness(f, sel, args.kind)
        elif args.kind == "beta":
            w = beta_thm_witness(f, sel, mode[4:])
        else:
            try:
                w = lambda_thm_witness(f, sel, mode[4:])
            except LocaleLabError as exc:
                if args.mode == "all":
                    print(f"{mode}: skipped ({exc})")
                    continue
                raise
        results[mode] = w is None
        print(f"{mode}: {_flag(w is None)}")
        if w is not None:
            print(f"  witness: {w!r}")
    if len(set(results.values())) > 1:
        print("DISAGREEMENT between modes")
        return EXIT_FAIL
    return EXIT_OK if all(results.values()) else EXIT_FAIL


def cmd_reflect(args) -> int:
    F = _frame(args.frame, args.max_poset)
    G, unit = reflect(F, args.kind)
    GF = G.as_frame
    print(f"{args.kind}{args.frame}: {GF.n} elements")
    if args.dump:
        print("ideals:")
        for i, name in enumerate(GF.names):
            print(f"  [{i}] {name}")
        print("unit:")
        for a in F.elements:
            print(f"  {F.names[a]} -> {GF.names[unit(a)]}")
    return EXIT_OK


def _parse_sublocale(F, text: str) -> Sublocale:
    members = set()
    for tok in (t.strip() for t in text.split(",") if t.strip()):
        if tok in F.names:
            members.add(F.index(tok))
        elif tok.isdigit() and int(tok) < F.n:
            members.add(int(tok))
        else:
            raise InputError(f"unknown element {tok!r}")
    if not is_sublocale(F, frozenset(members)):
        raise InputError(f"{{{text}}} is not a sublocale")
    return Sublocale(F, frozenset(members))


def cmd_embed(args) -> int:
    F = _frame(args.frame, args.max_poset)
    E = EmbeddedSublocale(_parse_sublocale(F, args.sublocale))
    if args.cls:
        value = embedding_class(E, args.cls)
        print(f"{args.cls}: {_flag(value)}")
        return EXIT_OK if value else EXIT_FAIL
    for tag, value in embedding_classes(E).items():
        print(f"{tag:<16}  {_flag(value)}")
    return EXIT_OK


def cmd_verify(args) -> int:
    names = list(SUITES) if args.suite == "all" else args.suite.split(",")
    for s in names:
        if s not in SUITES:
            raise InputError(f"unknown suite {s!r}; choose from all,{','.join(SUITES)}")
    if args.max_poset < 0 or args.workers < 1:
        raise InputError("max-poset must be >= 0 and workers >= 1")
    config = SuiteConfig(
        max_poset=args.max_poset,
        hom_cap=args.hom_cap,
        sublocale_cap=args.sublocale_cap,
        workers=args.workers,
    )
    catalog = generate_catalog(config.max_poset)
    reports = [run_suite(s, config, catalog) for s in names]
    for r in reports:
        print(r.to_text())
    if args.report:
        payload = {
            "config": {k: v for k, v in vars(config).items() if k != "workers"},
            "catalog": [e.id for e in catalog],
            "suites": [r.to_dict(timing=not args.no_timing) for r in reports],
        }
        Path(args.report).write_text(json.dumps(payload, indent=1, sort_keys=True) + "\n")
    return EXIT_OK if all(r.ok for r in reports) else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="locale-lab", description="Finite-frame computations and theorem suites.")
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, fn, help_):
        sp = sub.add_parser(name, help=help_)
        sp.set_defaults(fn=fn)
        sp.add_argument("--max-poset", type=int, default=3, help="catalog size used to resolve ids")
        return sp

    sp = add("gen", cmd_gen, "write the frame catalog as JSON files")
    sp.add_argument("--out", required=True)

    sp = add("classify", cmd_classify, "frame classes of a frame")
    sp.add_argument("--frame")
    g = sp.add_mutually_exclusive_group()
    g.add_argument("--all", action="store_true", help="every named class (default)")
    g.add_argument("--tag", choices=FRAME_CLASSES)
    g.add_argument("--audit-tables", action="store_true", help="table audit as JSON")

    sp = add("map-class", cmd_map_class, "map classes of a localic map")
    sp.add_argument("--hom", required=True, help="hom JSON file or inline JSON")
    g = sp.add_mutually_exclusive_group()
    g.add_argument("--all", action="store_true")
    g.add_argument("--tag", choices=MAP_CLASSES)

    sp = add("gamma-check", cmd_gamma_check, "decide S-beta / S-lambda / ST-lambda for a map")
    sp.add_argument("--hom", required=True)
    sp.add_argument("--selection", required=True)
    sp.add_argument("--target-selection", help="second selection for ST-lambda")
    sp.add_argument("--kind", choices=KINDS, default="beta")
    sp.add_argument("--mode", default="all", help="defn | all | thm:<mode>")

    sp = add("reflect", cmd_reflect, "build the beta or lambda reflection")
    sp.add_argument("--frame", required=True)
    sp.add_argument("--kind", choices=KINDS, default="beta")
    sp.add_argument("--dump", action="store_true")

    sp = add("embed", cmd_embed, "embedding classes of a sublocale")
    sp.add_argument("--frame", required=True)
    sp.add_argument("--sublocale", required=True, help='comma-separated element names, e.g. "0,1"')
    sp.add_argument("--class", dest="cls", choices=EMBEDDING_CLASSES)

    sp = add("verify", cmd_verify, "run theorem suites over the catalog")
    sp.add_argument("--suite", default="all")
    sp.add_argument("--workers", type=int, default=1)
    sp.add_argument("--hom-cap", type=int, default=10_000)
    sp.add_argument("--sublocale-cap", type=int, default=8)
    sp.add_argument("--report", help="write a JSON report here")
    sp.add_argument("--no-timing", action="store_true", help="omit wall times from the report")
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    try:
        return args.fn(args)
    except (InputError, LocaleLabError, ValueError, OSError, json.JSONDecodeError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
