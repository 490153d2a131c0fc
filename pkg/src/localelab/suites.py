"""Theorem suites run exhaustively over the frame catalog.

A suite is split into work units (one frame, or one target frame with every
map into it, or one ordered pair of frames).  Units run in a process pool when
``workers > 1``; results are merged in unit order, so the report does not
depend on scheduling.
"""
from __future__ import annotations

import json
import time
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from .catalog import CatalogEntry, enumerate_homs, generate_catalog
from .classifiers import (
    FRAME_CLASSES,
    class_evaluations,
    frame_class,
    parametric_class,
    table_audit,
)
from .embeddings import EmbeddedSublocale, booleanization, embedding_class, section5_audit
from .errors import CapExceeded, LiftNotRegular
from .frame import Relation, completely_below_by_scales
from .io import hom_to_json
from .maps import (
    LocalicMap,
    closed_by_images,
    image,
    is_onto,
    is_subfit,
    map_class,
    map_classes,
    nearly_open_by_sublocales,
    preimage,
)
from .reflections import (
    KINDS,
    frame_props,
    lift_hom,
    reflect,
    square_witness,
)
from .selections import (
    BETA_MODES,
    CLOSED,
    COZERO,
    LAMBDA_MODES,
    OPEN,
    REG_CLOSED,
    REG_OPEN,
    STANDARD,
    ZERO,
    beta_thm_witness,
    cb_preserving_conditions,
    gamma_witness,
    is_S_beta_map_thm,
    is_S_gamma_map,
    is_S_lambda_map_thm,
    is_ST_lambda_map,
    lambda_thm_witness,
)
from .sublocales import (
    Sublocale,
    closed_sublocale,
    closure,
    co_heyting_diff,
    completely_separated,
    enumerate_sublocales,
    interior,
    is_clopen,
    is_closed,
    is_open,
    is_sublocale,
    open_sublocale,
    sub_join,
    sub_meet,
    supplement,
    void,
    whole,
)

__all__ = ["SuiteConfig", "SuiteReport", "SUITES", "run_suite", "run_suites"]


@dataclass(frozen=True)
class SuiteConfig:
    max_poset: int = 3
    hom_cap: int = 10_000
    sublocale_cap: int = 8
    ideal_cap: int = 2**16
    workers: int = 1
    # test hook: "corrupt_cb" swaps every frame's ≪ table for ≤ after the reflections are built
    fault: str | None = None


@dataclass
class SuiteReport:
    suite: str
    instances: dict
    failures: list
    logs: list = field(default_factory=list)
    wall_time: float = 0.0

    @property
    def ok(self) -> bool:
        return not self.failures

    def to_dict(self, timing: bool = True) -> dict:
        d = {
            "suite": self.suite,
            "ok": self.ok,
            "instances": self.instances,
            "failures": self.failures,
            "logs": self.logs,
        }
        if timing:
            d["wall_time"] = round(self.wall_time, 3)
        return d

    def to_text(self) -> str:
        total = sum(self.instances.values())
        lines = [
            f"[{'PASS' if self.ok else 'FAIL'}] {self.suite}: {total} checks, "
            f"{len(self.failures)} failures, {len(self.logs)} logged, {self.wall_time:.2f}s"
        ]
        for fail in self.failures[:50]:
            lines.append("  " + json.dumps(fail, sort_keys=True))
        if len(self.failures) > 50:
            lines.append(f"  ... {len(self.failures) - 50} more")
        return "\n".join(lines)


class _Collector:
    def __init__(self):
        self.counts: Counter = Counter()
        self.failures: list = []
        self.logs: list = []

    def check(self, name: str, ok: bool, **witness):
        self.counts[name] += 1
        if not ok:
            self.failures.append({"check": name, **_jsonable(witness)})

    def log(self, name: str, **info):
        self.logs.append({"check": name, **_jsonable(info)})

    def result(self):
        return dict(self.counts), self.failures, self.logs


def _jsonable(obj):
    if isinstance(obj, dict):
        return {str(k): _jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_jsonable(v) for v in obj]
    if isinstance(obj, (bool, int, float, str)) or obj is None:
        return obj
    return repr(obj)


# helpers


def _hom_record(M: CatalogEntry, L: CatalogEntry, f: LocalicMap) -> dict:
    return hom_to_json(f.hom, M.id, L.id)


def _replay(rec: dict, sel: str, kind: str, mode: str = "all") -> str:
    return (
        f"locale-lab gamma-check --hom '{json.dumps(rec)}' --selection {sel} --kind {kind} --mode {mode}"
    )


def _maps(M: CatalogEntry, L: CatalogEntry, config: SuiteConfig):
    """Localic maps L → M (from homs M → L)."""
    return [LocalicMap(h) for h in enumerate_homs(M.frame, L.frame, config.hom_cap)]


def _maps_into(M: CatalogEntry, catalog: list, config: SuiteConfig):
    for L in catalog:
        for f in _maps(M, L, config):
            yield L, f


def _canonical_embeddings(M, kinds=("closed", "open", "cozero", "regular_closed", "booleanization")):
    F = M.frame
    subs = {}
    if "closed" in kinds:
        for a in F.elements:
            subs.setdefault(frozenset(closed_sublocale(F, a).members), f"closed({F.names[a]})")
    if "open" in kinds:
        for a in F.elements:
            subs.setdefault(frozenset(open_sublocale(F, a).members), f"open({F.names[a]})")
    if "cozero" in kinds:
        for a in sorted(F.coz):
            subs.setdefault(frozenset(open_sublocale(F, a).members), f"cozero({F.names[a]})")
    if "regular_closed" in kinds:
        for a in sorted(F.regular):
            subs.setdefault(frozenset(closed_sublocale(F, a).members), f"regular_closed({F.names[a]})")
    if "booleanization" in kinds:
        subs.setdefault(frozenset(F.regular), "booleanization")
    out = []
    for members, label in sorted(subs.items(), key=lambda kv: kv[1]):
        out.append((label, EmbeddedSublocale(Sublocale(F, members))))
    return out


def _apply_fault(entries, config: SuiteConfig):
    if config.fault is None:
        return
    if config.fault != "corrupt_cb":
        raise ValueError(f"unknown fault {config.fault!r}")
    for e in entries:
        F = e.frame
        for kind in KINDS:
            reflect(F, kind, config.ideal_cap)
        F.coz  # noqa: B018 - freeze the cozero set before the swap
        F.__dict__["cb"] = Relation.from_pairs(F.n, F.order_pairs())


# prelim: element calculus and sublocale identities


def _prelim_frame(entry: CatalogEntry, config: SuiteConfig, c: _Collector):
    F, fid = entry.frame, entry.id
    E = F.elements
    c.check("cb_oracle", F.cb == completely_below_by_scales(F), frame=fid)
    c.check("cb_interpolative", F.cb.is_interpolative(), frame=fid)
    leq = Relation.from_pairs(F.n, F.order_pairs())
    c.check("cb_in_rb_in_leq", F.cb <= F.rb and F.rb <= leq, frame=fid)
    for a in E:
        for b in E:
            for x in E:
                ok = F.leq[F.meet[a][x]][b] == F.leq[x][F.arrow[a][b]]
                c.check("heyting_adjunction", ok, frame=fid, witness=(a, b, x))
        c.check("double_pseudocomplement", F.leq[a][F.pc[F.pc[a]]] and F.pc[a] == F.pc[F.pc[F.pc[a]]], frame=fid, witness=a)
    coz = F.coz
    c.check("coz_bounds", F.bot in coz and F.top in coz, frame=fid)
    for a in coz:
        for b in coz:
            c.check("coz_sublattice", F.meet[a][b] in coz and F.join[a][b] in coz, frame=fid, witness=(a, b))
            if F.join[a][b] == F.top:
                ok = any(
                    F.join[a][x] == F.top and F.join[b][y] == F.top and F.meet[x][y] == F.bot
                    for x in coz
                    for y in coz
                )
                c.check("coz_normal", ok, frame=fid, witness=(a, b))
    whole_F, O = whole(F), void(F)
    for a in E:
        Ca, Oa = closed_sublocale(F, a), open_sublocale(F, a)
        c.check("complements", sub_join([Ca, Oa]) == whole_F and sub_meet(Ca, Oa) == O, frame=fid, witness=a)
        c.check("closure_of_open", closure(Oa) == closed_sublocale(F, F.pc[a]), frame=fid, witness=a)
        c.check("interior_of_closed", interior(Ca) == open_sublocale(F, F.pc[a]), frame=fid, witness=a)
        c.check("open_supplement", supplement(Oa, config.sublocale_cap) == Ca, frame=fid, witness=a)
        for b in E:
            Cb, Ob = closed_sublocale(F, b), open_sublocale(F, b)
            c.check("closed_join", sub_join([Ca, Cb]) == closed_sublocale(F, F.meet[a][b]), frame=fid, witness=(a, b))
            c.check("closed_meet", sub_meet(Ca, Cb) == closed_sublocale(F, F.join[a][b]), frame=fid, witness=(a, b))
            c.check("open_meet", sub_meet(Oa, Ob) == open_sublocale(F, F.meet[a][b]), frame=fid, witness=(a, b))
            c.check("open_join", sub_join([Oa, Ob]) == open_sublocale(F, F.join[a][b]), frame=fid, witness=(a, b))
            rb = (b, a) in F.rb
            c.check(
                "rather_below_sublocales",
                rb == (closure(Ob) <= Oa) == (Ca <= interior(Cb)),
                frame=fid,
                witness=(b, a),
            )
            c.check("cs_cb", ((a, b) in F.cb) == completely_separated(Oa, Cb), frame=fid, witness=(a, b))
    subs = enumerate_sublocales(F, config.sublocale_cap)
    for S in subs:
        c.check("enumerated_valid", is_sublocale(F, S.members), frame=fid, witness=S)
        c.check("supplement_closure", closure(supplement(S, config.sublocale_cap)) == supplement(interior(S), config.sublocale_cap), frame=fid, witness=S)
        c.check("closure_idempotent", closure(closure(S)) == closure(S) and interior(interior(S)) == interior(S), frame=fid, witness=S)
        for T in subs:
            cs = completely_separated(S, T)
            c.check("cs_symmetric", cs == completely_separated(T, S), frame=fid, witness=(S, T))
            c.check("cs_closure", cs == completely_separated(closure(S), closure(T)), frame=fid, witness=(S, T))
            if cs:
                # separating cozero sublocales with disjoint closures exist
                ok = any(
                    S <= open_sublocale(F, u) and T <= open_sublocale(F, v)
                    and F.meet[u][v] == F.bot
                    and completely_separated(open_sublocale(F, u), open_sublocale(F, v))
                    for u in coz
                    for v in coz
                )
                c.check("cs_normal", ok, frame=fid, witness=(S, T))
                for S2 in subs:
                    if S2 <= S:
                        c.check("cs_monotone", completely_separated(S2, T), frame=fid, witness=(S2, S, T))
            D = co_heyting_diff(S, T, config.sublocale_cap)
            for A in subs:
                c.check("co_heyting_adjunction", (D <= A) == (S <= sub_join([T, A])), frame=fid, witness=(S, T, A))


def _largest_inside(f: LocalicMap, T: Sublocale, subs) -> Sublocale:
    inside = [S for S in subs if all(f(x) in T.members for x in S.members)]
    return sub_join(inside, f.domain)


def _prelim_pair(M: CatalogEntry, L: CatalogEntry, config: SuiteConfig, c: _Collector):
    subs_L = enumerate_sublocales(L.frame, config.sublocale_cap)
    subs_M = enumerate_sublocales(M.frame, config.sublocale_cap)
    Lf, Mf = L.frame, M.frame
    for f in _maps(M, L, config):
        rec = _hom_record(M, L, f)
        c.check("image_void", image(f, void(Lf)) == void(Mf), hom=rec)
        c.check("preimage_bounds", preimage(f, whole(Mf)) == whole(Lf) and preimage(f, void(Mf)) == void(Lf), hom=rec)
        for S in subs_L:
            c.check("image_is_sublocale", is_sublocale(Mf, image(f, S).members), hom=rec, witness=S)
        pre = {T: preimage(f, T) for T in subs_M}
        for T in subs_M:
            c.check("preimage_oracle", pre[T] == _largest_inside(f, T, subs_L), hom=rec, witness=T)
            for S in subs_L:
                c.check("image_preimage_adjunction", (image(f, S) <= T) == (S <= pre[T]), hom=rec, witness=(S, T))
            if is_closed(T) or is_open(T):
                c.check(
                    "preimage_complement",
                    preimage(f, supplement(T, config.sublocale_cap)) == supplement(pre[T], config.sublocale_cap),
                    hom=rec,
                    witness=T,
                )
        for a in Lf.elements:
            c.check("closure_image_closed", closure(image(f, closed_sublocale(Lf, a))) == closed_sublocale(Mf, f(a)), hom=rec, witness=a)
            c.check("f_top_reflects", f(a) != Mf.top or a == Lf.top, hom=rec, witness=a)
            for b in Lf.elements:
                c.check("f_meets", f(Lf.meet[a][b]) == Mf.meet[f(a)][f(b)], hom=rec, witness=(a, b))
        for x in Mf.elements:
            for b in Lf.elements:
                c.check("f_arrow", f(Lf.arrow[f.h(x)][b]) == Mf.arrow[x][f(b)], hom=rec, witness=(x, b))
        cls = map_classes(f)
        implications = [
            ("closed", "z_closed"),
            ("closed", "rc_closed"),
            ("open", "nearly_open"),
            ("nearly_open", "co_nearly_open"),
            ("nearly_open", "ro_nearly_open"),
            ("open", "co_open"),
            ("co_preserving", "co_open"),
            ("rego_preserving", "ro_open"),
            ("z_preserving", "z_closed"),
            ("regc_preserving", "rc_closed"),
        ]
        for p, q in implications:
            c.check(f"implies:{p}->{q}", not cls[p] or cls[q], hom=rec)
        c.check("proper_is_closed", cls["proper"] == cls["closed"], hom=rec)
        c.check("z_preserving_split", cls["z_preserving"] == (cls["z_closed"] and all(f(a) in Mf.coz for a in Lf.coz)), hom=rec)
        c.check("closed_by_images", cls["closed"] == closed_by_images(f), hom=rec)
        c.check("z_closed_by_images", cls["z_closed"] == closed_by_images(f, Lf.coz), hom=rec)
        c.check("rc_closed_by_images", cls["rc_closed"] == closed_by_images(f, Lf.regular), hom=rec)
        c.check("nearly_open_by_sublocales", cls["nearly_open"] == nearly_open_by_sublocales(f), hom=rec)
        c.check("co_nearly_open_by_sublocales", cls["co_nearly_open"] == nearly_open_by_sublocales(f, Mf.coz), hom=rec)
        c.check("ro_nearly_open_by_sublocales", cls["ro_nearly_open"] == nearly_open_by_sublocales(f, Mf.regular), hom=rec)
        if is_subfit(Mf):
            for tag, elems in (("closed", Lf.elements), ("z_closed", Lf.coz), ("rc_closed", Lf.regular)):
                weak = all(
                    f(Lf.join[a][f.h(b)]) != Mf.top or Mf.join[f(a)][b] == Mf.top
                    for a in elems
                    for b in Mf.elements
                )
                c.check(f"closed_weak_form:{tag}", cls[tag] == weak, hom=rec)


# reflections


def _reflections_frame(entry: CatalogEntry, config: SuiteConfig, c: _Collector):
    F, fid = entry.frame, entry.id
    props = frame_props(F)
    for kind in KINDS:
        try:
            G, unit = reflect(F, kind, config.ideal_cap)
        except (LiftNotRegular, CapExceeded) as exc:
            c.check(f"reflect:{kind}", False, frame=fid, error=str(exc))
            continue
        gp = frame_props(G.as_frame)
        c.check(f"unit_dense:{kind}", unit(F.bot) == G.as_frame.bot, frame=fid)
        c.check(f"unit_injective_iff_cr:{kind}", unit.is_injective() == props["completely_regular"], frame=fid)
        c.check(f"unit_is_right_adjoint:{kind}", unit.map.values == unit.values, frame=fid)
        if kind == "beta":
            c.check("beta_regular", gp["regular"] and gp["compact"], frame=fid)
            c.check("beta_ideals_regular", all(all(any((a, b) in F.cb for b in I) for a in I) for I in G.ideals), frame=fid)
        else:
            c.check("lambda_completely_regular", gp["completely_regular"], frame=fid)
            c.check("lambda_ideals_in_coz", all(I <= F.coz for I in G.ideals), frame=fid)
        GF = G.as_frame
        for i in GF.elements:
            for j in GF.elements:
                c.check(f"ideal_join_oracle:{kind}", GF.join[i][j] == G.join_ideals(i, j), frame=fid, witness=(i, j))
    if F.complemented == frozenset(F.elements):
        for kind in KINDS:
            G, unit = reflect(F, kind)
            c.check(f"boolean_fixed:{kind}", G.as_frame.n == F.n and unit.is_injective(), frame=fid)


def _reflections_pair(M: CatalogEntry, L: CatalogEntry, config: SuiteConfig, c: _Collector):
    for f in _maps(M, L, config):
        rec = _hom_record(M, L, f)
        for kind in KINDS:
            try:
                w = square_witness(f, kind)
                hg = lift_hom(f.hom, kind)
            except LiftNotRegular as exc:
                c.check(f"lift_regular:{kind}", False, hom=rec, error=str(exc), witness=exc.witness)
                continue
            c.check(f"squares:{kind}", w is None, hom=rec, witness=w)
            _, uM = reflect(M.frame, kind)
            GL, uL = reflect(L.frame, kind)
            for a in M.frame.elements:
                ok = GL.as_frame.leq[hg(uM(a))][uL(f.h(a))]
                c.check(f"lift_inequality:{kind}", ok, hom=rec, witness=a)


# selection oracles


def _beta_oracle_pair(M: CatalogEntry, L: CatalogEntry, config: SuiteConfig, c: _Collector):
    for f in _maps(M, L, config):
        rec = _hom_record(M, L, f)
        verdict = {}
        for sel in STANDARD:
            defn = gamma_witness(f, sel, "beta")
            verdict[sel.name] = defn is None
            for mode in BETA_MODES:
                w = beta_thm_witness(f, sel, mode)
                c.check(
                    "beta_defn_vs_thm",
                    (defn is None) == (w is None),
                    hom=rec,
                    selection=sel.name,
                    mode=mode,
                    defn_witness=defn,
                    thm_witness=w,
                    replay=_replay(rec, sel.name, "beta"),
                )
        for small, big in (("zero", "closed"), ("cozero", "open"), ("regular_closed", "closed"), ("regular_open", "open")):
            c.check("beta_monotone", not verdict[big] or verdict[small], hom=rec, selection=(small, big))
        if map_class(f, "nearly_open"):
            c.check("nearly_open_regc_vs_open", verdict["regular_closed"] == verdict["open"], hom=rec)


def _lambda_oracle_pair(M: CatalogEntry, L: CatalogEntry, config: SuiteConfig, c: _Collector):
    Mf = M.frame
    for f in _maps(M, L, config):
        rec = _hom_record(M, L, f)
        cls = map_classes(f)
        lam = {}
        for sel in STANDARD:
            defn = gamma_witness(f, sel, "lambda")
            lam[sel.name] = defn is None
            for mode in LAMBDA_MODES:
                w = lambda_thm_witness(f, sel, mode)
                c.check(
                    "lambda_defn_vs_thm",
                    (defn is None) == (w is None),
                    hom=rec,
                    selection=sel.name,
                    mode=mode,
                    defn_witness=defn,
                    thm_witness=w,
                    replay=_replay(rec, sel.name, "lambda"),
                )
            beta = is_S_gamma_map(f, sel, "beta")
            c.check("beta_implies_lambda", not beta or lam[sel.name], hom=rec, selection=sel.name)
            c.check("ST_cozero_is_lambda", is_ST_lambda_map(f, sel, COZERO) == lam[sel.name], hom=rec, selection=sel.name)
            for T in STANDARD:
                # claimed for every 𝔗 but not a consequence of the definitions on
                # non-regular frames; counterexamples are logged, not failed
                if beta and not is_ST_lambda_map(f, sel, T):
                    c.log("beta_not_ST", hom=rec, selection=(sel.name, T.name))
        st = lambda S, T: is_ST_lambda_map(f, S, T)
        c.check("ST_open_open_iff_nearly_open", st(OPEN, OPEN) == cls["nearly_open"], hom=rec)
        c.check("ST_cozero_open_iff_co_nearly_open", st(COZERO, OPEN) == cls["co_nearly_open"], hom=rec)
        c.check("ST_regopen_open_iff_ro_nearly_open", st(REG_OPEN, OPEN) == cls["ro_nearly_open"], hom=rec)
        c.check("ST_open_regopen_iff_nearly_open", st(OPEN, REG_OPEN) == cls["nearly_open"], hom=rec)
        c.check("ST_cozero_regopen_implies_co_nearly_open", not st(COZERO, REG_OPEN) or cls["co_nearly_open"], hom=rec)
        c.check("ST_regopen_regopen_implies_ro_nearly_open", not st(REG_OPEN, REG_OPEN) or cls["ro_nearly_open"], hom=rec)
        c.check("ST_zero_zero_iff_zero_beta", st(ZERO, ZERO) == is_S_beta_map_thm(f, ZERO), hom=rec)
        for S, T in ((OPEN, CLOSED), (CLOSED, OPEN), (ZERO, COZERO), (COZERO, ZERO), (REG_OPEN, REG_CLOSED), (REG_CLOSED, REG_OPEN)):
            c.check("ST_supplements_selected", st(S, T), hom=rec, selection=(S.name, T.name))
        for tag, T in (("co_preserving", COZERO), ("z_preserving", ZERO), ("rego_preserving", REG_OPEN), ("regc_preserving", REG_CLOSED)):
            if cls[tag]:
                for S in STANDARD:
                    c.check("T_preserving_implies_ST", st(S, T), hom=rec, selection=(S.name, T.name))
        c.check("closed_lambda_implies_z_heavy", not lam["closed"] or cls["z_heavy"], hom=rec)
        if is_subfit(Mf):
            c.check("subfit:ST_closed_closed_iff_closed", st(CLOSED, CLOSED) == cls["closed"], hom=rec)
            stz, strc = st(CLOSED, ZERO), st(CLOSED, REG_CLOSED)
            c.check("subfit:z_preserving_chain", (not cls["z_preserving"] or stz) and (not stz or cls["z_closed"]), hom=rec)
            c.check("subfit:regc_preserving_chain", (not cls["regc_preserving"] or strc) and (not strc or cls["rc_closed"]), hom=rec)
        Lf = L.frame
        weak = all(
            Lf.join[f.h(a)][b] != Lf.top or any(Mf.join[a][d] == Mf.top and Lf.leq[f.h(d)][b] for d in Mf.elements)
            for a in Mf.coz
            for b in Lf.elements
        )
        weak2 = all(
            f(Lf.join[f.h(a)][b]) != Mf.top or Mf.join[a][f(b)] == Mf.top for a in Mf.coz for b in Lf.elements
        )
        c.check("ST_zero_closed_element_forms", st(ZERO, CLOSED) == weak == weak2, hom=rec)


def _ass_pair(M: CatalogEntry, L: CatalogEntry, config: SuiteConfig, c: _Collector):
    for f in _maps(M, L, config):
        rec = _hom_record(M, L, f)
        cb = map_class(f, "cb_preserving")
        thm = is_S_beta_map_thm(f, OPEN, "iii")
        c.check("ass", cb == thm, hom=rec, cb_preserving=cb, open_beta=thm, replay=_replay(rec, "open", "beta"))
        conds = cb_preserving_conditions(f)
        c.check("cb_preserving_conditions", len(set(conds.values())) == 1, hom=rec, conditions=conds)
        if thm:
            Lf = L.frame
            for a in sorted(Lf.complemented):
                S = closed_sublocale(Lf, a)
                c.check("clopen_images", is_clopen(closure(image(f, S))), hom=rec, witness=S)


# characterization sweeps over maps into a fixed codomain


def _sweep(c, name, M, holds, maps, predicate, target, canon=()):
    """Forward: if ``holds`` every map passing ``predicate`` satisfies ``target``.
    Converse: if not, some map passing ``predicate`` fails ``target``; the
    canonical embeddings are tried first, then the enumerated maps."""
    pool = list(canon) + list(maps)
    if holds:
        for label, f in pool:
            if predicate(f):
                c.check(f"{name}:forward", target(f), codomain=M.id, map=label)
    else:
        found = next((label for label, f in pool if predicate(f) and not target(f)), None)
        c.check(f"{name}:converse", found is not None, codomain=M.id)


def _labelled_maps(M, catalog, config):
    out = []
    for L, f in _maps_into(M, catalog, config):
        out.append((json.dumps(_hom_record(M, L, f)), f))
    return out


def _emb(M, kinds):
    return [(f"embedding {label}", E.j) for label, E in _canonical_embeddings(M, kinds)]


def _normality_codomain(M: CatalogEntry, catalog, config: SuiteConfig, c: _Collector):
    Mf = M.frame
    maps = _labelled_maps(M, catalog, config)
    closed_emb = _emb(M, ("closed",))
    for sel in STANDARD:
        ns = parametric_class(Mf, "S_normally_separated", sel)
        beta = lambda f, sel=sel: is_S_beta_map_thm(f, sel, "iii")
        for tag in ("z_closed", "closed", "proper"):
            _sweep(c, f"normal_sep[{sel.name}]:{tag}", M, ns, maps, lambda f, t=tag: map_class(f, t), beta, closed_emb)
    rc_emb = _emb(M, ("regular_closed",))
    for cls_tag, sel in (("weakly_delta_NS", ZERO), ("almost_normal", CLOSED), ("mildly_normal", REG_CLOSED)):
        _sweep(
            c,
            f"rc_preserving[{cls_tag}]",
            M,
            frame_class(Mf, cls_tag),
            maps,
            lambda f: map_class(f, "regc_preserving"),
            lambda f, sel=sel: is_S_beta_map_thm(f, sel, "iii"),
            rc_emb,
        )
    # preservation under onto maps
    for label, f in maps:
        if not is_onto(f):
            continue
        Lf = f.domain
        if is_S_beta_map_thm(f, ZERO):
            for tag in ("delta_normally_separated", "weakly_delta_NS"):
                if frame_class(Lf, tag):
                    c.check(f"preserve_onto_zero_beta:{tag}", frame_class(Mf, tag), map=label)
        if is_S_beta_map_thm(f, CLOSED):
            for tag in ("normal", "almost_normal"):
                if frame_class(Lf, tag):
                    c.check(f"preserve_onto_closed_beta:{tag}", frame_class(Mf, tag), map=label)


def _disconnected_codomain(M: CatalogEntry, catalog, config: SuiteConfig, c: _Collector):
    Mf = M.frame
    maps = _labelled_maps(M, catalog, config)
    open_emb = _emb(M, ("open",))
    closed_emb = _emb(M, ("closed",))
    for sel in STANDARD:
        disc = parametric_class(Mf, "S_disconnected", sel)
        beta = lambda f, sel=sel: is_S_beta_map_thm(f, sel, "iii")
        for tag in ("co_open", "open"):
            _sweep(c, f"disconnected_open[{sel.name}]:{tag}", M, disc, maps, lambda f, t=tag: map_class(f, t), beta, open_emb)
    coz_emb = _emb(M, ("cozero",))
    for cls_tag, sel in (("F_frame", COZERO), ("basically_disconnected", OPEN)):
        _sweep(
            c,
            f"co_preserving[{cls_tag}]",
            M,
            frame_class(Mf, cls_tag),
            maps,
            lambda f: map_class(f, "co_preserving"),
            lambda f, sel=sel: is_S_beta_map_thm(f, sel, "iii"),
            coz_emb,
        )
    # Boolean and P-frame codomains
    boolean, pframe = frame_class(Mf, "boolean"), frame_class(Mf, "P_frame")
    every = lambda f: True
    sb = lambda sel: (lambda f: is_S_beta_map_thm(f, sel, "iii"))
    for tag in ("closed", "z_closed", "proper"):
        _sweep(c, f"boolean_codomain:{tag}->open_beta", M, boolean, maps, lambda f, t=tag: map_class(f, t), sb(OPEN), closed_emb)
        _sweep(c, f"pframe_codomain:{tag}->cozero_beta", M, pframe, maps, lambda f, t=tag: map_class(f, t), sb(COZERO), closed_emb)
    for tag in ("open", "co_open"):
        _sweep(c, f"boolean_codomain:{tag}->closed_beta", M, boolean, maps, lambda f, t=tag: map_class(f, t), sb(CLOSED), open_emb)
        _sweep(c, f"pframe_codomain:{tag}->zero_beta", M, pframe, maps, lambda f, t=tag: map_class(f, t), sb(ZERO), open_emb)
    all_emb = _emb(M, ("closed", "open", "cozero", "regular_closed", "booleanization"))
    _sweep(c, "every_map:open_beta", M, boolean, maps, every, sb(OPEN), all_emb)
    _sweep(c, "every_map:closed_beta", M, boolean, maps, every, sb(CLOSED), all_emb)
    _sweep(c, "every_map:cozero_beta", M, pframe, maps, every, sb(COZERO), all_emb)
    _sweep(c, "every_map:zero_beta", M, pframe, maps, every, sb(ZERO), all_emb)
    for label, f in maps + all_emb:
        if boolean:
            c.check("same_verdict:boolean", sb(CLOSED)(f) == sb(OPEN)(f), map=label)
        if pframe:
            c.check("same_verdict:pframe", sb(ZERO)(f) == sb(COZERO)(f), map=label)
    # maps out of disconnected domains, and preservation under dense maps
    for label, f in maps:
        Lf = f.domain
        open_beta = sb(OPEN)(f)
        if open_beta:
            for sel in STANDARD:
                if parametric_class(Lf, "S_disconnected", sel):
                    for S in sel(Lf):
                        c.check("disconnected_domain_clopen_closure", is_clopen(closure(image(f, S))), map=label, selection=sel.name, witness=S)
            if frame_class(Lf, "ED"):
                c.check("ED_open_beta_nearly_open", map_class(f, "nearly_open"), map=label)
        if not map_class(f, "dense"):
            continue
        if open_beta:
            for tag in ("extremally_disconnected", "basically_disconnected"):
                if frame_class(Lf, tag):
                    c.check(f"preserve_dense_open_beta:{tag}", frame_class(Mf, tag), map=label)
        if sb(COZERO)(f):
            for tag in ("basically_disconnected", "F_frame"):
                if frame_class(Lf, tag):
                    c.check(f"preserve_dense_cozero_beta:{tag}", frame_class(Mf, tag), map=label)


def _lambda_families_codomain(M: CatalogEntry, catalog, config: SuiteConfig, c: _Collector):
    Mf = M.frame
    maps = _labelled_maps(M, catalog, config)
    open_emb = _emb(M, ("open",))
    closed_emb = _emb(M, ("closed",))
    for sel in STANDARD:
        sep = parametric_class(Mf, "S_coz_separating", sel)
        lam = lambda f, sel=sel: is_S_lambda_map_thm(f, sel, "iv")
        for tag in ("co_open", "open"):
            _sweep(c, f"coz_separating[{sel.name}]:{tag}", M, sep, maps, lambda f, t=tag: map_class(f, t), lam, open_emb)
    for cls_tag, sel in (("Oz", OPEN), ("weakly_Oz", COZERO)):
        for tag in ("co_open", "open"):
            _sweep(
                c,
                f"oz_characterization[{cls_tag}]:{tag}",
                M,
                frame_class(Mf, cls_tag),
                maps,
                lambda f, t=tag: map_class(f, t),
                lambda f, sel=sel: is_S_lambda_map_thm(f, sel, "iv"),
                open_emb,
            )
    for T, t_open in ((OPEN, "open"), (COZERO, "co_open"), (REG_OPEN, "ro_open")):
        for S in STANDARD:
            sep = parametric_class(Mf, "S_T_separating", S, T)
            st = lambda f, S=S, T=T: is_ST_lambda_map(f, S, T)
            for tag in (t_open, "open"):
                _sweep(c, f"ST_open[{S.name},{T.name}]:{tag}", M, sep, maps, lambda f, t=tag: map_class(f, t), st, open_emb)
    for T, t_closed in ((CLOSED, "closed"), (ZERO, "z_closed"), (REG_CLOSED, "rc_closed")):
        for S in STANDARD:
            sep = parametric_class(Mf, "S_T_star_separating", S, T)
            st = lambda f, S=S, T=T: is_ST_lambda_map(f, S, T)
            for tag in (t_closed, "closed", "proper"):
                _sweep(c, f"ST_star_closed[{S.name},{T.name}]:{tag}", M, sep, maps, lambda f, t=tag: map_class(f, t), st, closed_emb)


# frame-level classifier audits


def _tables_frame(entry: CatalogEntry, config: SuiteConfig, c: _Collector):
    F, fid = entry.frame, entry.id
    for cell in table_audit(F):
        where = f"{cell.table}[{cell.row},{cell.column}]"
        if cell.asserted:
            c.check("table_cell", cell.agrees, frame=fid, cell=where, expected=cell.expected, parametric=cell.parametric, named=cell.named)
        else:
            c.log("table_cell_unasserted", frame=fid, cell=where, expected=cell.expected, parametric=cell.parametric, named=cell.named)
    for tag in FRAME_CLASSES:
        ev = class_evaluations(F, tag)
        check = {
            "almost_normal": "almost_normal_five_way",
            "P_frame": "pframe_three_way",
            "boolean": "boolean_three_way",
        }.get(tag, "class_evaluations")
        c.check(check, len(set(ev.values())) == 1, frame=fid, tag=tag, evaluations=ev)
    for sel in STANDARD:
        c.check(
            "disc_closure_mode",
            parametric_class(F, "S_disconnected", sel) == parametric_class(F, "S_disconnected", sel, mode="closure"),
            frame=fid,
            selection=sel.name,
        )
        if parametric_class(F, "S_disconnected", sel):
            c.check("disconnected_implies_coz_separating", parametric_class(F, "S_coz_separating", sel), frame=fid, selection=sel.name)


def _section5_frame(entry: CatalogEntry, config: SuiteConfig, c: _Collector):
    F, fid = entry.frame, entry.id
    for row in section5_audit(F, config.sublocale_cap):
        c.check(f"section5:{row['check']}", row["agrees"], frame=fid, sublocale=row["sublocale"], left=row["left"], right=row["right"])
    for S in enumerate_sublocales(F, config.sublocale_cap):
        E = EmbeddedSublocale(S)
        for a in F.elements:
            other = (closed_sublocale(F, a).members & S.members)
            c.check("j_star_two_ways", E.j_star(a) == F.meet_all(other), frame=fid, sublocale=S, witness=a)
            c.check(
                "traces",
                E.restrict(closed_sublocale(F, a)) == closed_sublocale(E.as_frame, E.local[E.j_star(a)])
                and E.restrict(open_sublocale(F, a)) == open_sublocale(E.as_frame, E.local[E.j_star(a)]),
                frame=fid,
                sublocale=S,
                witness=a,
            )
    B = booleanization(F)
    c.check("booleanization_dense", closure(B.carrier) == whole(F), frame=fid)
    c.check("booleanization_boolean", frame_class(B.as_frame, "boolean"), frame=fid)
    c.check("booleanization_j_star", all(B.j_star(a) == F.pc[F.pc[a]] for a in F.elements), frame=fid)
    zeros_placed = all(embedding_class(EmbeddedSublocale(Z), "normally_placed") for Z in ZERO(F))
    c.check("zeros_normally_placed_iff_delta_NS", zeros_placed == frame_class(F, "delta_NS"), frame=fid)
    E = EmbeddedSublocale(whole(F))
    c.check("improper_embedding_all_classes", all(embedding_class(E, t) for t in ("C1", "strong_C1", "C_star", "z_embedded", "normally_placed")), frame=fid)


# registry

_FRAME_UNITS = {
    "prelim": _prelim_frame,
    "reflections": _reflections_frame,
    "tables": _tables_frame,
    "section5": _section5_frame,
}
_PAIR_UNITS = {
    "prelim": _prelim_pair,
    "reflections": _reflections_pair,
    "beta_oracle": _beta_oracle_pair,
    "lambda_oracle": _lambda_oracle_pair,
    "ass": _ass_pair,
}
_CODOMAIN_UNITS = {
    "normality": _normality_codomain,
    "disconnected": _disconnected_codomain,
    "lambda_families": _lambda_families_codomain,
}

SUITES = (
    "prelim",
    "beta_oracle",
    "lambda_oracle",
    "ass",
    "normality",
    "disconnected",
    "lambda_families",
    "tables",
    "section5",
    "reflections",
)


def _run_unit(args):
    suite, kind, payload, catalog, config = args
    c = _Collector()
    entries = list(catalog) if kind == "codomain" else list(payload)
    _apply_fault(entries, config)
    try:
        if kind == "frame":
            _FRAME_UNITS[suite](payload[0], config, c)
        elif kind == "pair":
            _PAIR_UNITS[suite](payload[0], payload[1], config, c)
        else:
            M = next(e for e in catalog if e.id == payload[0].id)
            _CODOMAIN_UNITS[suite](M, catalog, config, c)
    except CapExceeded as exc:
        c.log("cap_exceeded", unit=[e.id for e in payload], error=str(exc))
    return c.result()


def _units(suite: str, catalog: list):
    units = []
    if suite in _FRAME_UNITS:
        units += [("frame", (e,), None) for e in catalog]
    if suite in _PAIR_UNITS:
        units += [("pair", (M, L), None) for M in catalog for L in catalog]
    if suite in _CODOMAIN_UNITS:
        units += [("codomain", (M,), catalog) for M in catalog]
    return units


def run_suite(suite_id: str, config: SuiteConfig | None = None, catalog: list | None = None) -> SuiteReport:
    if suite_id not in SUITES:
        raise ValueError(f"unknown suite {suite_id!r}; choose from {SUITES}")
    config = config or SuiteConfig()
    if catalog is None:
        catalog = generate_catalog(config.max_poset)
    start = time.perf_counter()
    jobs = [(suite_id, kind, payload, cat or (), config) for kind, payload, cat in _units(suite_id, catalog)]
    if config.workers > 1:
        with ProcessPoolExecutor(max_workers=config.workers) as pool:
            results = list(pool.map(_run_unit, jobs))
    else:
        results = [_run_unit(job) for job in jobs]
    counts: Counter = Counter()
    failures, logs = [], []
    for cnt, fails, lg in results:
        counts.update(cnt)
        failures += fails
        logs += lg
    return SuiteReport(
        suite=suite_id,
        instances=dict(sorted(counts.items())),
        failures=failures,
        logs=logs,
        wall_time=time.perf_counter() - start,
    )


def run_suites(suite_ids, config: SuiteConfig | None = None) -> list[SuiteReport]:
    config = config or SuiteConfig()
    catalog = generate_catalog(config.max_poset)
    ids = SUITES if suite_ids in ("all", ["all"], ("all",)) else suite_ids
    return [run_suite(s, config, catalog) for s in ids]
