"""Sublocales materialized as frames, their embeddings, and embedding classes."""
from __future__ import annotations

from .frame import Frame, validate_frame
from .maps import FrameHom, LocalicMap, map_class
from .selections import CLOSED, COZERO, OPEN, ZERO, is_S_gamma_map, is_ST_lambda_map
from .sublocales import (
    Sublocale,
    closed_sublocale,
    closure,
    completely_separated,
    enumerate_sublocales,
    is_clopen,
    is_sublocale,
    open_sublocale,
    sub_meet,
)

__all__ = [
    "EmbeddedSublocale",
    "EMBEDDING_CLASSES",
    "embed",
    "booleanization",
    "embedding_class",
    "embedding_classes",
    "section5_audit",
]


class EmbeddedSublocale:
    """A sublocale S of L as a frame of its own, with the embedding j: S → L.

    Order and meets are inherited from L; joins are recomputed inside S.
    ``j_star(a)`` is the least member of S above a, the left adjoint of j.
    """

    def __init__(self, carrier: Sublocale):
        L = carrier.frame
        if not is_sublocale(L, carrier.members):
            raise ValueError(f"{carrier!r} is not a sublocale")
        self.parent = L
        self.carrier = carrier
        self.elems = tuple(sorted(carrier.members))
        self.local = {x: i for i, x in enumerate(self.elems)}
        leq = [[L.leq[x][y] for y in self.elems] for x in self.elems]
        self.as_frame: Frame = validate_frame(leq, [L.names[x] for x in self.elems])
        self.hom = FrameHom(L, self.as_frame, [self.local[self.j_star(a)] for a in L.elements])
        self.j = LocalicMap(self.hom)
        assert self.j.values == self.elems, "right adjoint of j* is not the inclusion"

    def __repr__(self) -> str:
        return f"EmbeddedSublocale({self.carrier!r})"

    def j_star(self, a: int) -> int:
        return self.parent.meet_all(s for s in self.elems if self.parent.leq[a][s])

    def lift(self, sub: Sublocale) -> Sublocale:
        """A sublocale of S read as a sublocale of L."""
        return Sublocale(self.parent, frozenset(self.elems[i] for i in sub.members))

    def restrict(self, T: Sublocale) -> Sublocale:
        """T ∩ S as a sublocale of S (the localic preimage under j)."""
        return Sublocale(self.as_frame, frozenset(self.local[x] for x in T.members & self.carrier.members))


def embed(S: Sublocale) -> EmbeddedSublocale:
    return EmbeddedSublocale(S)


def booleanization(L: Frame) -> EmbeddedSublocale:
    return EmbeddedSublocale(Sublocale(L, L.regular))


# embedding classes


def _zeros_local(E: EmbeddedSublocale):
    return [closed_sublocale(E.as_frame, c) for c in sorted(E.as_frame.coz)]


def _c1(E: EmbeddedSublocale) -> bool:
    L = E.parent
    for Z in _zeros_local(E):
        Zl = E.lift(Z)
        for F in ZERO(L):
            if sub_meet(Z, E.restrict(F)).is_void and not completely_separated(Zl, F):
                return False
    return True


def _strong_c1(E: EmbeddedSublocale) -> bool:
    L = E.parent
    local_zeros = set(_zeros_local(E))
    for Z in local_zeros:
        Zl = E.lift(Z)
        for a in L.elements:
            Ca = closed_sublocale(L, a)
            trace = E.restrict(Ca)
            if trace in local_zeros and sub_meet(Z, trace).is_void and not completely_separated(Zl, Ca):
                return False
    return True


def _c_star(E: EmbeddedSublocale) -> bool:
    # complete separation only sees closures, so closed sublocales of S suffice
    S = E.as_frame
    closeds = [closed_sublocale(S, a) for a in S.elements]
    for A in closeds:
        for B in closeds:
            if completely_separated(A, B) and not completely_separated(E.lift(A), E.lift(B)):
                return False
    return True


def _z_embedded(E: EmbeddedSublocale) -> bool:
    traces = {E.restrict(Z) for Z in ZERO(E.parent)}
    return all(Z in traces for Z in _zeros_local(E))


def _normally_placed(E: EmbeddedSublocale) -> bool:
    L, S = E.parent, E.carrier
    zeros = ZERO(L)
    for a in L.elements:
        Ca = closed_sublocale(L, a)
        if sub_meet(Ca, S).is_void and not any(Ca <= Z and sub_meet(Z, S).is_void for Z in zeros):
            return False
    return True


_CLASSES = {
    "C1": _c1,
    "strong_C1": _strong_c1,
    "C_star": _c_star,
    "z_embedded": _z_embedded,
    "normally_placed": _normally_placed,
}

EMBEDDING_CLASSES = tuple(_CLASSES)


def embedding_class(E: EmbeddedSublocale, tag: str) -> bool:
    try:
        return _CLASSES[tag](E)
    except KeyError:
        raise ValueError(f"unknown embedding class {tag!r}; choose from {EMBEDDING_CLASSES}") from None


def embedding_classes(E: EmbeddedSublocale) -> dict[str, bool]:
    return {tag: fn(E) for tag, fn in _CLASSES.items()}


def _cozero_squeeze(E: EmbeddedSublocale) -> bool:
    """S ⊆ 𝔠(a) implies S ⊆ D ⊆ 𝔠(a) for some cozero D of L."""
    L, S = E.parent, E.carrier
    cozs = COZERO(L)
    for a in L.elements:
        Ca = closed_sublocale(L, a)
        if S <= Ca and not any(S <= D and D <= Ca for D in cozs):
            return False
    return True


def section5_audit(L: Frame, cap: int = 8) -> list[dict]:
    """Both sides of each embedding equivalence, for every sublocale of L.

    Rows carry ``left``/``right`` values; a row disagrees when they differ.
    """
    from .classifiers import frame_class

    rows = []

    def add(S, name, left, right):
        rows.append({"sublocale": repr(S), "check": name, "left": left, "right": right, "agrees": left == right})

    for S in enumerate_sublocales(L, cap):
        E = EmbeddedSublocale(S)
        j = E.j
        add(S, "C1 <=> S_zero beta", _c1(E), is_S_gamma_map(j, ZERO, "beta"))
        add(S, "strong_C1 <=> S_closed beta", _strong_c1(E), is_S_gamma_map(j, CLOSED, "beta"))
        add(
            S,
            "C_star and clopen closure <=> S_open beta",
            _c_star(E) and is_clopen(closure(S)),
            is_S_gamma_map(j, OPEN, "beta"),
        )
        add(
            S,
            "z_embedded and cozero squeeze <=> S_open T_cozero lambda",
            _z_embedded(E) and _cozero_squeeze(E),
            is_ST_lambda_map(j, OPEN, COZERO),
        )
        add(S, "normally_placed <=> j z_heavy", _normally_placed(E), map_class(j, "z_heavy"))
        if S.members == L.regular:
            add(S, "booleanization: S_open beta <=> ED", is_S_gamma_map(j, OPEN, "beta"), frame_class(L, "ED"))
            add(S, "booleanization: S_cozero beta <=> BD", is_S_gamma_map(j, COZERO, "beta"), frame_class(L, "BD"))
            add(S, "booleanization: C_star <=> ED", _c_star(E), frame_class(L, "ED"))
            add(S, "booleanization: S_zero beta <=> P_frame", is_S_gamma_map(j, ZERO, "beta"), frame_class(L, "P"))
            add(S, "booleanization: S_closed beta <=> boolean", is_S_gamma_map(j, CLOSED, "beta"), frame_class(L, "boolean"))
            add(S, "booleanization: S_open T_cozero lambda <=> coole", is_ST_lambda_map(j, OPEN, COZERO), frame_class(L, "coole"))
        if any(open_sublocale(L, c) == S for c in L.coz):
            add(S, "cozero sublocale is normally placed", _normally_placed(E), True)
    return rows
