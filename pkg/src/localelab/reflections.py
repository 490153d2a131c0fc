"""Stone–Čech (regular ideals) and Lindelöf (σ-ideals of Coz) reflections.

Both reflections are materialized as explicit :class:`~localelab.frame.Frame`
objects ordered by inclusion, so every frame and sublocale operation applies
to them unchanged.  On a finite carrier countable joins are finite, so
σ-ideals of Coz L are just its ideals.
"""
from __future__ import annotations

from dataclasses import dataclass

from .errors import CapExceeded, LiftNotRegular
from .frame import Frame, validate_frame
from .maps import FrameHom, LocalicMap, right_adjoint

__all__ = [
    "KINDS",
    "DEFAULT_IDEAL_CAP",
    "IdealFrame",
    "UnitMap",
    "reflect",
    "is_ideal",
    "is_regular_ideal",
    "lift_hom",
    "lifted_map",
    "check_squares",
    "square_witness",
    "frame_props",
]

KINDS = ("beta", "lambda")
DEFAULT_IDEAL_CAP = 2**16


def _check_kind(kind: str):
    if kind not in KINDS:
        raise ValueError(f"unknown reflection kind {kind!r}; choose from {KINDS}")


def _base(L: Frame, kind: str) -> frozenset:
    return frozenset(L.elements) if kind == "beta" else L.coz


def is_ideal(L: Frame, base: frozenset, I: frozenset) -> bool:
    """Non-empty, down-closed inside ``base`` and closed under binary joins."""
    if not I or not I <= base:
        return False
    for a in I:
        if any(L.leq[x][a] and x not in I for x in base):
            return False
        if any(L.join[a][b] not in I for b in I):
            return False
    return True


def is_regular_ideal(L: Frame, I: frozenset) -> bool:
    return all(any((a, b) in L.cb for b in I) for a in I)


@dataclass(frozen=True, eq=False)
class IdealFrame:
    base: Frame
    kind: str
    ideals: tuple
    as_frame: Frame
    index: dict

    def ideal(self, i: int) -> frozenset:
        return self.ideals[i]

    def join_of(self, i: int) -> int:
        """γ_L*: an ideal goes to the join of its members."""
        return self.base.join_all(self.ideals[i])

    def join_ideals(self, i: int, j: int) -> int:
        """Least ideal of this frame containing ideals i and j, by closure iteration.

        Down-close and join-close the union, then intersect every member ideal
        above the result (for beta the closure need not be regular).
        """
        L = self.base
        basis = _base(L, self.kind)
        cur = set(self.ideals[i] | self.ideals[j])
        changed = True
        while changed:
            changed = False
            for a in list(cur):
                for x in basis:
                    if L.leq[x][a] and x not in cur:
                        cur.add(x)
                        changed = True
                for b in list(cur):
                    if L.join[a][b] not in cur:
                        cur.add(L.join[a][b])
                        changed = True
        above = [I for I in self.ideals if cur <= I]
        out = frozenset.intersection(*above)
        return self.index[out]


@dataclass(frozen=True, eq=False)
class UnitMap:
    """The unit γ_L: L → γL, stored with its left adjoint γ_L* (joins of ideals)."""

    ideal_frame: IdealFrame
    values: tuple
    map: LocalicMap

    def __call__(self, a: int) -> int:
        return self.values[a]

    def is_injective(self) -> bool:
        return len(set(self.values)) == len(self.values)


def _unit_ideal(L: Frame, kind: str, a: int) -> frozenset:
    if kind == "beta":
        return frozenset(x for x in L.elements if (x, a) in L.cb)
    return frozenset(x for x in L.coz if L.leq[x][a])


def _label(L: Frame, I: frozenset) -> str:
    return "{" + ",".join(L.names[x] for x in sorted(I)) + "}"


def reflect(L: Frame, kind: str, cap: int = DEFAULT_IDEAL_CAP) -> tuple[IdealFrame, UnitMap]:
    """Build γL (γ = beta or lambda) and the unit map L → γL.

    Every ideal of a finite join-semilattice is principal, so the candidates
    are the sets base ∩ ↓c for c in L; each is re-checked as an ideal (and for
    beta as a regular ideal).
    """
    _check_kind(kind)
    key = ("reflect", kind)
    if key in L._memo:
        return L._memo[key]
    basis = _base(L, kind)
    candidates = {frozenset(x for x in basis if L.leq[x][c]) for c in L.elements}
    ideals = [I for I in candidates if is_ideal(L, basis, I)]
    if kind == "beta":
        ideals = [I for I in ideals if is_regular_ideal(L, I)]
    if len(ideals) > cap:
        raise CapExceeded(f"{len(ideals)} ideals exceed the cap {cap}")
    ideals.sort(key=lambda I: (len(I), sorted(I)))
    leq = [[I <= J for J in ideals] for I in ideals]
    GF = validate_frame(leq, [_label(L, I) for I in ideals])
    index = {I: k for k, I in enumerate(ideals)}
    IF = IdealFrame(L, kind, tuple(ideals), GF, index)

    star = FrameHom(GF, L, [IF.join_of(k) for k in range(len(ideals))])
    units = []
    for a in L.elements:
        I = _unit_ideal(L, kind, a)
        if I not in index:
            raise LiftNotRegular(f"unit ideal of {L.names[a]} is not a {kind} ideal", witness=a)
        units.append(index[I])
    unit = UnitMap(IF, tuple(units), right_adjoint(star))
    L._memo[key] = (IF, unit)
    return IF, unit


def lift_hom(h: FrameHom, kind: str) -> FrameHom:
    """h^γ: γM → γL for h: M → L.

    beta: I ↦ ↓h[I]; lambda: I ↦ {b ∈ Coz L : b <= h(x) for some x ∈ I}.
    Raises LiftNotRegular when the image set is not an ideal of γL.
    """
    _check_kind(kind)
    M, L = h.source, h.target
    GM, _ = reflect(M, kind)
    GL, _ = reflect(L, kind)
    basis = _base(L, kind)
    values = []
    for I in GM.ideals:
        hs = [h.values[x] for x in I]
        J = frozenset(y for y in basis if any(L.leq[y][v] for v in hs))
        if J not in GL.index:
            raise LiftNotRegular(
                f"lift of ideal {_label(M, I)} is {_label(L, J)}, not an ideal of {kind}L",
                witness=(sorted(I), sorted(J)),
            )
        values.append(GL.index[J])
    return FrameHom(GM.as_frame, GL.as_frame, values)


def lifted_map(f: LocalicMap, kind: str) -> LocalicMap:
    return right_adjoint(lift_hom(f.hom, kind))


def square_witness(f: LocalicMap, kind: str):
    """First place where a reflection square fails to commute, or None.

    Squares: h·γ_M* = γ_L*·h^γ on γM, and γ_M·f = f^γ·γ_L on L.
    """
    L, M = f.domain, f.codomain
    GM, unit_M = reflect(M, kind)
    GL, unit_L = reflect(L, kind)
    hg = lift_hom(f.hom, kind)
    fg = right_adjoint(hg)
    for i in range(len(GM.ideals)):
        if f.h(GM.join_of(i)) != GL.join_of(hg(i)):
            return ("frame_square", i)
    for a in L.elements:
        if unit_M(f(a)) != fg(unit_L(a)):
            return ("localic_square", a)
    return None


def check_squares(f: LocalicMap, kind: str) -> bool:
    return square_witness(f, kind) is None


def frame_props(F: Frame) -> dict[str, bool]:
    """compact / regular / completely_regular.

    Compactness holds for every finite frame: a cover of 1 is already finite.
    """
    return {
        "compact": True,
        "regular": all(F.join_all(F.rb.predecessors(a)) == a for a in F.elements),
        "completely_regular": all(F.join_all(F.cb.predecessors(a)) == a for a in F.elements),
    }
