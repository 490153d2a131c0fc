"""Frame-level classes: parametric separation families and the named classes.

Each named class has a primary element-level evaluation and, where an
equivalent sublocale-level phrasing exists, further evaluations returned by
:func:`class_evaluations` for cross-checking.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from .frame import Frame
from .maps import is_subfit
from .selections import (
    CLOSED,
    COZERO,
    OPEN,
    REG_CLOSED,
    REG_OPEN,
    ZERO,
    Selection,
    selection,
)
from .sublocales import (
    closed_sublocale,
    closure,
    completely_separated,
    interior,
    is_clopen,
    open_sublocale,
    sub_meet,
)

__all__ = [
    "FRAME_CLASSES",
    "FAMILIES",
    "frame_class",
    "frame_classes",
    "class_evaluations",
    "parametric_class",
    "AuditCell",
    "table_audit",
    "SUMMARY_TABLE",
    "TABLE_ST",
    "TABLE_ST_STAR",
]


# parametric families


def _disjoint(A, B) -> bool:
    return sub_meet(A, B).is_void


def _s_normally_separated(F: Frame, S: Selection) -> bool:
    closeds = CLOSED(F)
    return all(
        completely_separated(X, C) for X in S(F) for C in closeds if _disjoint(X, C)
    )


def _s_disconnected(F: Frame, S: Selection) -> bool:
    opens = OPEN(F)
    return all(
        completely_separated(X, U) for X in S(F) for U in opens if _disjoint(X, U)
    )


def _s_disconnected_by_closure(F: Frame, S: Selection) -> bool:
    return all(is_clopen(closure(X)) for X in S(F))


def _s_t_separating(F: Frame, S: Selection, T: Selection) -> bool:
    ts = T(F)
    for X in S(F):
        for U in OPEN(F):
            if _disjoint(X, U) and not any(_disjoint(X, Y) and U <= Y for Y in ts):
                return False
    return True


def _s_t_star_separating(F: Frame, S: Selection, T: Selection) -> bool:
    ts = T(F)
    for X in S(F):
        for C in CLOSED(F):
            if _disjoint(X, C) and not any(_disjoint(X, Y) and C <= Y for Y in ts):
                return False
    return True


def _s_coz_separating(F: Frame, S: Selection) -> bool:
    return _s_t_separating(F, S, COZERO)


FAMILIES = ("S_normally_separated", "S_disconnected", "S_coz_separating", "S_T_separating", "S_T_star_separating")


def parametric_class(F: Frame, family: str, S, T=None, mode: str = "defn") -> bool:
    """Decide a parametric family.

    ``mode="closure"`` is accepted for ``S_disconnected`` and decides it by
    asking that the closure of every selected sublocale be clopen.
    """
    S = selection(S)
    if family == "S_normally_separated":
        return _s_normally_separated(F, S)
    if family == "S_disconnected":
        if mode == "closure":
            return _s_disconnected_by_closure(F, S)
        return _s_disconnected(F, S)
    if family == "S_coz_separating":
        return _s_coz_separating(F, S)
    if family in ("S_T_separating", "S_T_star_separating"):
        if T is None:
            raise ValueError(f"{family} needs a second selection")
        T = selection(T)
        if family == "S_T_separating":
            return _s_t_separating(F, S, T)
        return _s_t_star_separating(F, S, T)
    raise ValueError(f"unknown family {family!r}; choose from {FAMILIES}")


# named classes, element level


def _normal_pair(F: Frame, a: int, b: int) -> bool:
    """a∨b = 1 implies some u∧v = 0 with a∨u = 1 = b∨v."""
    if F.join[a][b] != F.top:
        return True
    return any(
        F.meet[u][v] == F.bot and F.join[a][u] == F.top and F.join[b][v] == F.top
        for u in F.elements
        for v in F.elements
    )


def _normal(F):
    return all(_normal_pair(F, a, b) for a in F.elements for b in F.elements)


def _almost_normal(F):
    return all(_normal_pair(F, a, r) for a in F.elements for r in F.regular)


def _mildly_normal(F):
    return all(_normal_pair(F, a, b) for a in F.regular for b in F.regular)


def _closed_pairs_separated(F, left, right) -> bool:
    # disjoint 𝔠(a), 𝔠(b) (a∨b = 1) must be completely separated
    return all(
        completely_separated(closed_sublocale(F, a), closed_sublocale(F, b))
        for a in left
        for b in right
        if F.join[a][b] == F.top
    )


def _delta_ns(F):
    return _closed_pairs_separated(F, F.coz, F.elements)


def _weakly_delta_ns(F):
    return _closed_pairs_separated(F, F.coz, F.regular)


def _ed(F):
    return all(F.join[F.pc[a]][F.pc[F.pc[a]]] == F.top for a in F.elements)


def _bd(F):
    return all(F.join[F.pc[a]][F.pc[F.pc[a]]] == F.top for a in F.coz)


def _f_frame(F):
    return all(
        completely_separated(open_sublocale(F, a), open_sublocale(F, b))
        for a in F.coz
        for b in F.coz
        if F.meet[a][b] == F.bot
    )


def _oz(F):
    return F.regular <= F.coz


def _weakly_oz(F):
    targets = {F.pc[c] for c in F.coz}
    return F.regular <= targets


def _p_frame(F):
    return F.coz <= F.complemented


def _boolean(F):
    return len(F.complemented) == F.n


def _perfectly_normal(F):
    return len(F.coz) == F.n


def _almost_p(F):
    return all(F.pc[F.pc[a]] == a for a in F.coz)


def _coole(F):
    from .embeddings import booleanization, embedding_class

    return embedding_class(booleanization(F), "z_embedded")


def _closed_in_disjoint_regular_closed(F):
    # disjoint closed sublocales lie in disjoint regular closed sublocales
    for a in F.elements:
        for b in F.elements:
            if F.join[a][b] != F.top:
                continue
            if not any(
                F.leq[r][a] and F.leq[s][b] and F.join[r][s] == F.top
                for r in F.regular
                for s in F.regular
            ):
                return False
    return True


_NAMED: dict[str, Callable[[Frame], bool]] = {
    "normal": _normal,
    "almost_normal": _almost_normal,
    "mildly_normal": _mildly_normal,
    "delta_normally_separated": _delta_ns,
    "weakly_delta_NS": _weakly_delta_ns,
    "extremally_disconnected": _ed,
    "basically_disconnected": _bd,
    "F_frame": _f_frame,
    "Oz": _oz,
    "weakly_Oz": _weakly_oz,
    "P_frame": _p_frame,
    "boolean": _boolean,
    "perfectly_normal": _perfectly_normal,
    "almost_P": _almost_p,
    "subfit": is_subfit,
    "coole": _coole,
}

_ALIASES = {
    "ED": "extremally_disconnected",
    "BD": "basically_disconnected",
    "delta_NS": "delta_normally_separated",
    "F": "F_frame",
    "P": "P_frame",
}

FRAME_CLASSES = tuple(_NAMED)


def _tag(tag: str) -> str:
    tag = _ALIASES.get(tag, tag)
    if tag not in _NAMED:
        raise ValueError(f"unknown frame class {tag!r}; choose from {FRAME_CLASSES}")
    return tag


def frame_class(F: Frame, tag: str) -> bool:
    return _NAMED[_tag(tag)](F)


def frame_classes(F: Frame) -> dict[str, bool]:
    return {tag: fn(F) for tag, fn in _NAMED.items()}


# second evaluations


def _almost_normal_views(F: Frame) -> dict[str, bool]:
    rb, E = F.rb, F.elements
    interp = all(any((b, x) in rb and (x, a) in rb for x in E) for b, a in rb.pairs())
    iii = all(
        completely_separated(closed_sublocale(F, a), closed_sublocale(F, r))
        for a in E
        for r in F.regular
        if F.join[a][r] == F.top
    )
    iv = True
    v = True
    for a in E:
        for b in E:
            Ca, inner = closed_sublocale(F, a), interior(closed_sublocale(F, b))
            if Ca <= inner and not any(
                Ca <= open_sublocale(F, x) and closure(open_sublocale(F, x)) <= inner for x in E
            ):
                iv = False
            cl_b, Oa = closure(open_sublocale(F, b)), open_sublocale(F, a)
            if cl_b <= Oa and not any(
                cl_b <= open_sublocale(F, x) and closure(open_sublocale(F, x)) <= Oa for x in E
            ):
                v = False
    return {
        "element": _almost_normal(F),
        "rb_interpolates": interp,
        "regular_closed_separated": iii,
        "closed_interior_squeeze": iv,
        "open_closure_squeeze": v,
    }


def class_evaluations(F: Frame, tag: str) -> dict[str, bool]:
    """Every available evaluation of a named class, keyed by a short label."""
    tag = _tag(tag)
    out = {"element": _NAMED[tag](F)}
    if tag == "normal":
        out["S_normally_separated(closed)"] = _s_normally_separated(F, CLOSED)
    elif tag == "almost_normal":
        out.update(_almost_normal_views(F))
        out["S_normally_separated(regular_closed)"] = _s_normally_separated(F, REG_CLOSED)
    elif tag == "mildly_normal":
        out["regular_closed_pairs_separated"] = _closed_pairs_separated(F, F.regular, F.regular)
    elif tag == "delta_normally_separated":
        out["S_normally_separated(zero)"] = _s_normally_separated(F, ZERO)
    elif tag == "extremally_disconnected":
        out["S_disconnected(open)"] = _s_disconnected(F, OPEN)
    elif tag == "basically_disconnected":
        out["S_disconnected(cozero)"] = _s_disconnected(F, COZERO)
    elif tag == "Oz":
        out["S_coz_separating(open)"] = _s_coz_separating(F, OPEN)
    elif tag == "weakly_Oz":
        out["S_coz_separating(cozero)"] = _s_coz_separating(F, COZERO)
    elif tag == "P_frame":
        out["S_normally_separated(cozero)"] = _s_normally_separated(F, COZERO)
        out["S_disconnected(zero)"] = _s_disconnected(F, ZERO)
    elif tag == "boolean":
        out["S_normally_separated(open)"] = _s_normally_separated(F, OPEN)
        out["S_disconnected(closed)"] = _s_disconnected(F, CLOSED)
        out["closed_and_open_clopen"] = all(
            is_clopen(closed_sublocale(F, a)) and is_clopen(open_sublocale(F, a)) for a in F.elements
        )
    elif tag == "perfectly_normal":
        out["S_T_separating(closed,cozero)"] = _s_t_separating(F, CLOSED, COZERO)
    return out


# table audit

_SEL = {"open": OPEN, "closed": CLOSED, "cozero": COZERO, "zero": ZERO, "regular_open": REG_OPEN, "regular_closed": REG_CLOSED}
_COLS = ("open", "closed", "cozero", "zero", "regular_open", "regular_closed")

# "--" = every frame, None = blank (no class offered), "prose:" = described only in words
SUMMARY_TABLE = {
    "closed": ("normal", "boolean"),
    "zero": ("delta_normally_separated", "P_frame"),
    "open": ("boolean", "extremally_disconnected"),
    "cozero": ("P_frame", "basically_disconnected"),
    "regular_closed": ("almost_normal", "extremally_disconnected"),
    "regular_open": ("extremally_disconnected", "extremally_disconnected"),
}

TABLE_ST = {
    "open": ("--", "--", "Oz", "Oz", "--", "--"),
    "closed": ("--", "boolean", "perfectly_normal", "boolean", "boolean", "boolean"),
    "cozero": ("--", "--", "weakly_Oz", "--", "--", "--"),
    "zero": ("--", "P_frame", "--", "P_frame", "almost_P", "P_frame"),
    "regular_open": ("--", "--", "Oz", "Oz", "--", "--"),
    "regular_closed": ("--", "extremally_disconnected", "Oz", "extremally_disconnected", "--", "extremally_disconnected"),
}

TABLE_ST_STAR = {
    "open": ("boolean", "--", "boolean", "perfectly_normal", "boolean", "boolean"),
    "closed": ("--", "--", "normal", "normal", None, "prose:closed_in_disjoint_regular_closed"),
    "cozero": ("P_frame", "--", "P_frame", "--", "P_frame", "almost_P"),
    "zero": ("--", "--", "--", "delta_normally_separated", None, None),
    "regular_open": ("extremally_disconnected", "--", "extremally_disconnected", "Oz", "extremally_disconnected", "--"),
    "regular_closed": ("--", "--", None, None, "--", None),
}

# classes whose definition is an editorial choice; their cells are logged, not asserted
_AUDIT_ONLY = {"almost_P"}

_PROSE = {"closed_in_disjoint_regular_closed": _closed_in_disjoint_regular_closed}


@dataclass(frozen=True)
class AuditCell:
    table: str
    row: str
    column: str
    expected: str | None
    parametric: bool
    named: bool | None
    asserted: bool

    @property
    def agrees(self) -> bool:
        if self.expected is None:
            return True
        return self.parametric == self.named

    def to_dict(self) -> dict:
        return {
            "table": self.table,
            "row": self.row,
            "column": self.column,
            "expected": self.expected,
            "parametric": self.parametric,
            "named": self.named,
            "asserted": self.asserted,
            "agrees": self.agrees,
        }


def _named_value(F: Frame, expected: str | None) -> tuple[bool | None, bool]:
    """(named value, asserted?) for one table cell."""
    if expected is None:
        return None, False
    if expected == "--":
        return True, True
    if expected.startswith("prose:"):
        return _PROSE[expected[6:]](F), False
    return frame_class(F, expected), expected not in _AUDIT_ONLY


def table_audit(F: Frame) -> list[AuditCell]:
    """Evaluate every cell of the three summary tables on F."""
    cells = []
    for row, (ns, disc) in SUMMARY_TABLE.items():
        S = _SEL[row]
        cells.append(AuditCell("summary", row, "S_normally_separated", ns, _s_normally_separated(F, S), frame_class(F, ns), True))
        cells.append(AuditCell("summary", row, "S_disconnected", disc, _s_disconnected(F, S), frame_class(F, disc), True))
    for name, table, fn in (("ST", TABLE_ST, _s_t_separating), ("ST_star", TABLE_ST_STAR, _s_t_star_separating)):
        for row, entries in table.items():
            for col, expected in zip(_COLS, entries):
                value = fn(F, _SEL[row], _SEL[col])
                named, asserted = _named_value(F, expected)
                cells.append(AuditCell(name, row, col, expected, value, named, asserted))
    return cells
