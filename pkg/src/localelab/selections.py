"""Selections of sublocales and the Sγ-, Sβ-, Sλ- and STλ-map predicates.

Each characterization is available both definitionally (through the
reflections) and through its element- or sublocale-level condition, so the
two can be compared.  Witness functions return the first failing instance
or ``None``; the ``is_*`` predicates wrap them.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable

from .errors import ModeRequiresComplemented
from .frame import Frame
from .maps import LocalicMap, map_class, preimage
from .reflections import lift_hom, reflect
from .sublocales import (
    Sublocale,
    closed_sublocale,
    completely_separated,
    open_sublocale,
    sub_join,
    sub_meet,
    supplement,
    whole,
)

__all__ = [
    "Selection",
    "CLOSED",
    "OPEN",
    "ZERO",
    "COZERO",
    "REG_CLOSED",
    "REG_OPEN",
    "STANDARD",
    "selection",
    "select",
    "BETA_MODES",
    "LAMBDA_MODES",
    "gamma_witness",
    "is_S_gamma_map",
    "beta_thm_witness",
    "is_S_beta_map_thm",
    "lambda_thm_witness",
    "is_S_lambda_map_thm",
    "st_lambda_witness",
    "is_ST_lambda_map",
    "cb_preserving_conditions",
]


@dataclass(frozen=True)
class Selection:
    """Assigns to each frame a list of its sublocales.

    ``complemented`` declares that every selected sublocale has a complement
    in S(L); some theorem modes refuse selections without it.
    """

    name: str
    pick: Callable[[Frame], list] = field(compare=False)
    complemented: bool = False
    standard: bool = field(default=False, compare=False)

    def __call__(self, F: Frame) -> list[Sublocale]:
        if not self.standard:
            return list(self.pick(F))
        key = ("selection", self.name)
        if key not in F._memo:
            F._memo[key] = list(self.pick(F))
        return F._memo[key]

    def __repr__(self) -> str:
        return f"Selection({self.name})"

    @classmethod
    def custom(cls, name: str, pick: Callable[[Frame], list], complemented: bool = False) -> "Selection":
        return cls(name, pick, complemented)


def _closed_on(elems_of):
    return lambda F: [closed_sublocale(F, a) for a in sorted(elems_of(F))]


def _open_on(elems_of):
    return lambda F: [open_sublocale(F, a) for a in sorted(elems_of(F))]


def _all(F):
    return F.elements


def _coz(F):
    return F.coz


def _reg(F):
    return F.regular


# closed and open sublocales are complements of each other, so all six are complemented
CLOSED = Selection("closed", _closed_on(_all), True, True)
OPEN = Selection("open", _open_on(_all), True, True)
ZERO = Selection("zero", _closed_on(_coz), True, True)
COZERO = Selection("cozero", _open_on(_coz), True, True)
REG_CLOSED = Selection("regular_closed", _closed_on(_reg), True, True)
REG_OPEN = Selection("regular_open", _open_on(_reg), True, True)

STANDARD = (CLOSED, OPEN, ZERO, COZERO, REG_CLOSED, REG_OPEN)

_ALIASES = {
    "closed": CLOSED, "c": CLOSED,
    "open": OPEN, "o": OPEN,
    "zero": ZERO, "z": ZERO,
    "cozero": COZERO, "coz": COZERO,
    "regular_closed": REG_CLOSED, "regc": REG_CLOSED, "reg_closed": REG_CLOSED,
    "regular_open": REG_OPEN, "rego": REG_OPEN, "reg_open": REG_OPEN,
}


def selection(name: str | Selection) -> Selection:
    if isinstance(name, Selection):
        return name
    try:
        return _ALIASES[name.lower()]
    except KeyError:
        raise ValueError(f"unknown selection {name!r}; choose from {sorted(_ALIASES)}") from None


def select(sel: Selection | str, F: Frame) -> list[Sublocale]:
    return selection(sel)(F)


# Sγ-maps, definitionally


def gamma_witness(f: LocalicMap, sel: Selection, kind: str):
    """First S in sel(M) with h^γ(γ_M(⋀S)) != γ_L(⋀f₋₁[S]), or None."""
    L, M = f.domain, f.codomain
    _, unit_M = reflect(M, kind)
    _, unit_L = reflect(L, kind)
    hg = lift_hom(f.hom, kind)
    for S in sel(M):
        if hg(unit_M(S.bottom)) != unit_L(preimage(f, S).bottom):
            return S
    return None


def is_S_gamma_map(f: LocalicMap, sel: Selection, kind: str) -> bool:
    return gamma_witness(f, sel, kind) is None


# Sβ-maps through the completely below relation

BETA_MODES = ("iii", "ii", "iv", "v", "vi", "vii", "viii")
# which sublocales are tested against f₋₁[S] in the separation-transfer modes
_BETA_TEST_CLASS = {
    "ii": OPEN,
    "iv": ZERO,
    "v": COZERO,
    "vi": REG_OPEN,
    "vii": REG_CLOSED,
    "viii": CLOSED,
}


def beta_thm_witness(f: LocalicMap, sel: Selection, mode: str = "iii"):
    """First (S, x) violating the chosen characterization of Sβ-maps, or None.

    Mode ``iii``: every a ≪ ⋀f₋₁[S] has some b with a <= h(b) and b ≪ ⋀S.
    The other modes: every test sublocale X of L completely separated from
    f₋₁[S] lies in f₋₁[Y] for a test sublocale Y of M completely separated
    from S (open, zero, cozero, regular open, regular closed, closed).
    """
    L, M = f.domain, f.codomain
    if mode == "iii":
        for S in sel(M):
            p, s = preimage(f, S).bottom, S.bottom
            for a in L.cb.predecessors(p):
                if not any(L.leq[a][f.h(b)] and (b, s) in M.cb for b in M.elements):
                    return S, a
        return None
    try:
        tests = _BETA_TEST_CLASS[mode]
    except KeyError:
        raise ValueError(f"unknown beta mode {mode!r}; choose from {BETA_MODES}") from None
    targets = [(Y, preimage(f, Y)) for Y in tests(M)]
    for S in sel(M):
        P = preimage(f, S)
        good = [PY for Y, PY in targets if completely_separated(Y, S)]
        for X in tests(L):
            if completely_separated(X, P) and not any(X <= PY for PY in good):
                return S, X
    return None


def is_S_beta_map_thm(f: LocalicMap, sel: Selection, mode: str = "iii") -> bool:
    return beta_thm_witness(f, sel, mode) is None


# Sλ-maps through cozero elements

LAMBDA_MODES = ("iv", "ii", "iii", "v", "vi")


def _void_meet(A: Sublocale, B: Sublocale) -> bool:
    return sub_meet(A, B).is_void


def lambda_thm_witness(f: LocalicMap, sel: Selection, mode: str = "iv"):
    """First (S, x) violating the chosen characterization of Sλ-maps, or None.

    Modes ``v`` and ``vi`` use supplements S# and need a complemented selection.
    """
    L, M = f.domain, f.codomain
    if mode in ("v", "vi") and not sel.complemented:
        raise ModeRequiresComplemented(f"mode {mode} needs a complemented selection, {sel.name} is not")
    if mode == "iv":
        for S in sel(M):
            p, s = preimage(f, S).bottom, S.bottom
            for x in L.coz:
                if not L.leq[x][p]:
                    continue
                if not any(M.leq[y][s] and L.leq[x][f.h(y)] for y in M.coz):
                    return S, x
        return None
    zeros_L, zeros_M = ZERO(L), ZERO(M)
    cozs_L, cozs_M = COZERO(L), COZERO(M)
    pre = {id(D): preimage(f, D) for D in zeros_M + cozs_M}
    for S in sel(M):
        P = preimage(f, S)
        if mode == "ii":
            for Z in zeros_L:
                if P <= Z and not any(S <= D and pre[id(D)] <= Z for D in zeros_M):
                    return S, Z
        elif mode == "iii":
            for C in cozs_L:
                if _void_meet(P, C) and not any(_void_meet(S, D) and C <= pre[id(D)] for D in cozs_M):
                    return S, C
        elif mode == "v":
            Sc = supplement(S)
            PSc = preimage(f, Sc)
            for C in cozs_L:
                if C <= PSc and not any(D <= Sc and C <= pre[id(D)] for D in cozs_M):
                    return S, C
        elif mode == "vi":
            Sc = supplement(S)
            PSc = preimage(f, Sc)
            for Z in zeros_L:
                if sub_join([Z, PSc]) != whole(L):
                    continue
                if not any(sub_join([D, Sc]) == whole(M) and pre[id(D)] <= Z for D in zeros_M):
                    return S, Z
        else:
            raise ValueError(f"unknown lambda mode {mode!r}; choose from {LAMBDA_MODES}")
    return None


def is_S_lambda_map_thm(f: LocalicMap, sel: Selection, mode: str = "iv") -> bool:
    return lambda_thm_witness(f, sel, mode) is None


# generalized STλ-maps


def st_lambda_witness(f: LocalicMap, S_sel: Selection, T_sel: Selection):
    """First (S, T) with f₋₁[S] ∩ T = O but no T' in T_sel(M) missing S with T ⊆ f₋₁[T']."""
    L, M = f.domain, f.codomain
    targets = [(Tp, preimage(f, Tp)) for Tp in T_sel(M)]
    for S in S_sel(M):
        P = preimage(f, S)
        good = [PT for Tp, PT in targets if _void_meet(S, Tp)]
        for T in T_sel(L):
            if _void_meet(P, T) and not any(T <= PT for PT in good):
                return S, T
    return None


def is_ST_lambda_map(f: LocalicMap, S_sel: Selection, T_sel: Selection) -> bool:
    return st_lambda_witness(f, S_sel, T_sel) is None


def cb_preserving_conditions(f: LocalicMap) -> dict[str, bool]:
    """The five equivalent descriptions of ≪-preserving maps, each evaluated directly."""
    L, M = f.domain, f.codomain
    _, bM = reflect(M, "beta")
    _, bL = reflect(L, "beta")
    hb = lift_hom(f.hom, "beta")
    cond_v = True
    for x in M.elements:
        target = L.pc[f.h(x)]
        for a in L.cb.predecessors(target):
            if not any(L.leq[a][f.h(b)] and (b, M.pc[x]) in M.cb for b in M.elements):
                cond_v = False
    return {
        "cb_preserving": map_class(f, "cb_preserving"),
        "open_beta_defn": is_S_gamma_map(f, OPEN, "beta"),
        "open_beta_separation": is_S_beta_map_thm(f, OPEN, "ii"),
        "beta_pseudocomplements": all(
            hb(bM(M.pc[x])) == bL(L.pc[f.h(x)]) for x in M.elements
        ),
        "cb_pseudocomplements": cond_v,
    }
