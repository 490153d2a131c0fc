"""Sublocales of a finite frame and the coframe operations on them."""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable

from .errors import CapExceeded, FrameMismatch
from .frame import Frame

__all__ = [
    "Sublocale",
    "SublocaleKind",
    "DEFAULT_CAP",
    "is_sublocale",
    "closed_sublocale",
    "open_sublocale",
    "void",
    "whole",
    "sub_meet",
    "sub_join",
    "closure",
    "interior",
    "interior_element",
    "supplement",
    "co_heyting_diff",
    "completely_separated",
    "enumerate_sublocales",
    "sublocale_kinds",
    "is_open",
    "is_closed",
    "is_clopen",
]

DEFAULT_CAP = 8


@dataclass(frozen=True)
class Sublocale:
    frame: Frame
    members: frozenset

    def __post_init__(self):
        object.__setattr__(self, "members", frozenset(self.members))

    def __le__(self, other: "Sublocale") -> bool:
        _same_frame(self, other)
        return self.members <= other.members

    def __contains__(self, x: int) -> bool:
        return x in self.members

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self):
        return iter(sorted(self.members))

    @property
    def bottom(self) -> int:
        """⋀S, which lies in S because S is meet-closed."""
        return self.frame.meet_all(self.members)

    @property
    def is_void(self) -> bool:
        return self.members == frozenset([self.frame.top])

    def labels(self) -> list[str]:
        return [self.frame.names[x] for x in sorted(self.members)]

    def __repr__(self) -> str:
        return "{" + ",".join(self.labels()) + "}"


def _same_frame(*subs: Sublocale) -> Frame:
    F = subs[0].frame
    for S in subs[1:]:
        if S.frame is not F:
            raise FrameMismatch("sublocales belong to different frames")
    return F


def is_sublocale(F: Frame, members: Iterable[int]) -> bool:
    m = frozenset(members)
    if F.top not in m:
        return False
    for s in m:
        for t in m:
            if F.meet[s][t] not in m:
                return False
        for x in F.elements:
            if F.arrow[x][s] not in m:
                return False
    return True


def closed_sublocale(F: Frame, a: int) -> Sublocale:
    return Sublocale(F, F.up(a))


def open_sublocale(F: Frame, a: int) -> Sublocale:
    return Sublocale(F, frozenset(F.arrow[a][b] for b in F.elements))


def void(F: Frame) -> Sublocale:
    return Sublocale(F, frozenset([F.top]))


def whole(F: Frame) -> Sublocale:
    return Sublocale(F, frozenset(F.elements))


def sub_meet(S: Sublocale, T: Sublocale) -> Sublocale:
    F = _same_frame(S, T)
    return Sublocale(F, S.members & T.members)


def _meet_closure(F: Frame, items: Iterable[int]) -> frozenset:
    out = set(items) | {F.top}
    frontier = list(out)
    while frontier:
        new = []
        for x in frontier:
            for y in list(out):
                m = F.meet[x][y]
                if m not in out:
                    out.add(m)
                    new.append(m)
        frontier = new
    return frozenset(out)


def sub_join(subs: Iterable[Sublocale], frame: Frame | None = None) -> Sublocale:
    """Join in S(L): all meets of subsets of the union."""
    subs = list(subs)
    if not subs:
        if frame is None:
            raise ValueError("empty join needs the frame")
        return void(frame)
    F = _same_frame(*subs)
    union = frozenset().union(*(S.members for S in subs))
    out = Sublocale(F, _meet_closure(F, union))
    assert is_sublocale(F, out.members), "join of sublocales is not arrow-closed"
    return out


def closure(S: Sublocale) -> Sublocale:
    return closed_sublocale(S.frame, S.bottom)


def interior_element(S: Sublocale) -> int:
    """The largest a with 𝔬(a) ⊆ S."""
    F = S.frame
    return F.join_all(x for x in F.elements if open_sublocale(F, x).members <= S.members)


def interior(S: Sublocale) -> Sublocale:
    return open_sublocale(S.frame, interior_element(S))


def is_closed(S: Sublocale) -> bool:
    return S.members == S.frame.up(S.bottom)


def is_open(S: Sublocale) -> bool:
    return interior(S).members == S.members


def is_clopen(S: Sublocale) -> bool:
    return is_closed(S) and is_open(S)


def _complement_fast(S: Sublocale) -> Sublocale | None:
    """Complement of an open or closed sublocale, or None for other shapes."""
    F = S.frame
    if is_closed(S):
        return open_sublocale(F, S.bottom)
    a = interior_element(S)
    if open_sublocale(F, a).members == S.members:
        return closed_sublocale(F, a)
    return None


def enumerate_sublocales(F: Frame, cap: int = DEFAULT_CAP) -> list[Sublocale]:
    """Every sublocale of F once, ordered by size then by sorted members."""
    if F.n > cap:
        raise CapExceeded(f"frame has {F.n} elements, enumeration cap is {cap}")
    key = ("sublocales",)
    if key in F._memo:
        return F._memo[key]
    rest = [x for x in F.elements if x != F.top]
    found = []
    for k in range(len(rest) + 1):
        for combo in combinations(rest, k):
            m = frozenset(combo) | {F.top}
            if is_sublocale(F, m):
                found.append(m)
    found.sort(key=lambda m: (len(m), sorted(m)))
    out = [Sublocale(F, m) for m in found]
    F._memo[key] = out
    return out


def co_heyting_diff(S: Sublocale, T: Sublocale, cap: int = DEFAULT_CAP) -> Sublocale:
    """S ∖ T, the least A with S ⊆ T ∨ A.

    When T is open or closed it has a complement T' and S ∖ T = S ∩ T'.
    Otherwise S(L) is scanned, which needs the frame under the enumeration cap.
    """
    F = _same_frame(S, T)
    comp = _complement_fast(T)
    if comp is not None:
        return sub_meet(S, comp)
    members = frozenset(F.elements)
    for A in enumerate_sublocales(F, cap):
        if S.members <= sub_join([T, A]).members:
            members &= A.members
    return Sublocale(F, members)


def supplement(S: Sublocale, cap: int = DEFAULT_CAP) -> Sublocale:
    return co_heyting_diff(whole(S.frame), S, cap)


def completely_separated(S: Sublocale, T: Sublocale) -> bool:
    """S and T lie in disjoint zero sublocales 𝔠(a), 𝔠(b): a, b cozero, a∨b = 1."""
    F = _same_frame(S, T)
    s, t = S.bottom, T.bottom
    left = [a for a in F.coz if F.leq[a][s]]
    right = [b for b in F.coz if F.leq[b][t]]
    return any(F.join[a][b] == F.top for a in left for b in right)


@dataclass(frozen=True)
class SublocaleKind:
    """A claim that a sublocale has a particular shape, with its witnessing element."""

    tag: str
    witness: int | None = None

    TAGS = ("open", "closed", "zero", "cozero", "regular_open", "regular_closed", "clopen", "generic")

    def check(self, S: Sublocale) -> bool:
        F = S.frame
        a = self.witness
        if self.tag == "generic":
            return is_sublocale(F, S.members)
        if self.tag == "clopen":
            return a in F.complemented and closed_sublocale(F, a) == S
        if self.tag in ("closed", "zero", "regular_closed"):
            if closed_sublocale(F, a) != S:
                return False
        else:
            if open_sublocale(F, a) != S:
                return False
        if self.tag in ("zero", "cozero"):
            return a in F.coz
        if self.tag in ("regular_open", "regular_closed"):
            return a in F.regular
        return True


def sublocale_kinds(S: Sublocale) -> list[SublocaleKind]:
    """Every kind that applies to S; ``generic`` is always included."""
    F = S.frame
    kinds = []
    if is_closed(S):
        a = S.bottom
        kinds.append(SublocaleKind("closed", a))
        if a in F.coz:
            kinds.append(SublocaleKind("zero", a))
        if a in F.regular:
            kinds.append(SublocaleKind("regular_closed", a))
        if a in F.complemented:
            kinds.append(SublocaleKind("clopen", a))
    a = interior_element(S)
    if open_sublocale(F, a) == S:
        kinds.append(SublocaleKind("open", a))
        if a in F.coz:
            kinds.append(SublocaleKind("cozero", a))
        if a in F.regular:
            kinds.append(SublocaleKind("regular_open", a))
    kinds.append(SublocaleKind("generic"))
    return kinds
