"""Finite frames and their element calculus.

A finite frame is the same thing as a finite bounded distributive lattice:
every join is finite, so the infinite distributive law collapses to the
binary one.  Elements are the integers ``0..n-1``; all operation tables are
computed once, when the frame is validated, and never change afterwards.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import product
from typing import Iterable, Sequence

from .errors import NotALattice, NotAPoset, NotDistributive, Unbounded, FrameError

__all__ = [
    "Frame",
    "Relation",
    "validate_frame",
    "frame_from_pairs",
    "builtin",
    "BUILTINS",
    "heyting_arrow",
    "pseudocomplement",
    "rather_below",
    "completely_below",
    "completely_below_by_scales",
    "cozero_elements",
    "element_predicates",
]


@dataclass(frozen=True)
class Relation:
    """A binary relation on the elements of one frame.

    ``rows[a]`` is a bitmask with bit ``b`` set iff ``(a, b)`` is in the relation.
    """

    n: int
    rows: tuple

    @classmethod
    def from_pairs(cls, n: int, pairs: Iterable[tuple[int, int]]) -> "Relation":
        rows = [0] * n
        for a, b in pairs:
            rows[a] |= 1 << b
        return cls(n, tuple(rows))

    def __contains__(self, pair) -> bool:
        a, b = pair
        return bool(self.rows[a] >> b & 1)

    def __iter__(self):
        return iter(self.pairs())

    def __len__(self) -> int:
        return sum(bin(r).count("1") for r in self.rows)

    def __le__(self, other: "Relation") -> bool:
        return all(r & ~s == 0 for r, s in zip(self.rows, other.rows))

    def pairs(self) -> list[tuple[int, int]]:
        return [(a, b) for a in range(self.n) for b in range(self.n) if self.rows[a] >> b & 1]

    def successors(self, a: int) -> list[int]:
        return [b for b in range(self.n) if self.rows[a] >> b & 1]

    def predecessors(self, b: int) -> list[int]:
        return [a for a in range(self.n) if self.rows[a] >> b & 1]

    def is_interpolative(self) -> bool:
        return all(
            any((a, c) in self and (c, b) in self for c in range(self.n))
            for a, b in self.pairs()
        )


class Frame:
    """An immutable finite frame with precomputed order, meet and join tables.

    Build instances with :func:`validate_frame` (or :func:`frame_from_pairs`);
    the constructor trusts its arguments.
    """

    def __init__(self, leq, meet, join, bot: int, top: int, names: Sequence[str] | None = None):
        self.n = len(leq)
        self.leq = tuple(tuple(bool(x) for x in row) for row in leq)
        self.meet = tuple(tuple(row) for row in meet)
        self.join = tuple(tuple(row) for row in join)
        self.bot = bot
        self.top = top
        if names is None:
            names = [str(i) for i in range(self.n)]
        self.names = tuple(str(x) for x in names)
        # scratch space for caches owned by other modules (reflections, enumerations)
        self._memo: dict = {}

    def __repr__(self) -> str:
        return f"Frame(n={self.n}, names={list(self.names)})"

    def __getstate__(self):
        state = self.__dict__.copy()
        state["_memo"] = {}
        return state

    @property
    def elements(self) -> range:
        return range(self.n)

    def le(self, a: int, b: int) -> bool:
        return self.leq[a][b]

    def meet_all(self, items: Iterable[int]) -> int:
        out = self.top
        for x in items:
            out = self.meet[out][x]
        return out

    def join_all(self, items: Iterable[int]) -> int:
        out = self.bot
        for x in items:
            out = self.join[out][x]
        return out

    def up(self, a: int) -> frozenset:
        return frozenset(x for x in self.elements if self.leq[a][x])

    def down(self, a: int) -> frozenset:
        return frozenset(x for x in self.elements if self.leq[x][a])

    def name(self, a: int) -> str:
        return self.names[a]

    def index(self, label) -> int:
        """Element index from a name or an integer-like label."""
        if isinstance(label, int):
            if not 0 <= label < self.n:
                raise IndexError(f"element {label} out of range for frame of size {self.n}")
            return label
        label = str(label).strip()
        if label in self.names:
            return self.names.index(label)
        return self.index(int(label))

    def order_pairs(self) -> list[tuple[int, int]]:
        return [(a, b) for a in self.elements for b in self.elements if self.leq[a][b]]

    # element calculus

    @cached_property
    def arrow(self) -> tuple:
        """Heyting implication table: ``arrow[a][b]`` is the largest x with a∧x ≤ b."""
        table = []
        for a in self.elements:
            row = []
            for b in self.elements:
                row.append(self.join_all(x for x in self.elements if self.leq[self.meet[a][x]][b]))
            table.append(tuple(row))
        return tuple(table)

    @cached_property
    def pc(self) -> tuple:
        return tuple(self.arrow[a][self.bot] for a in self.elements)

    @cached_property
    def rb(self) -> Relation:
        return Relation.from_pairs(
            self.n,
            ((b, a) for b in self.elements for a in self.elements if self.join[self.pc[b]][a] == self.top),
        )

    @cached_property
    def cb(self) -> Relation:
        # greatest fixpoint of R -> {(a,b) in R : a R c R b for some c}, from the rather-below relation
        rows = list(self.rb.rows)
        changed = True
        while changed:
            changed = False
            for a in self.elements:
                for b in self.elements:
                    if not rows[a] >> b & 1:
                        continue
                    if not any(rows[a] >> c & 1 and rows[c] >> b & 1 for c in self.elements):
                        rows[a] &= ~(1 << b)
                        changed = True
        return Relation(self.n, tuple(rows))

    @cached_property
    def coz(self) -> frozenset:
        return frozenset(
            a for a in self.elements if self.join_all(self.cb.predecessors(a)) == a
        )

    @cached_property
    def regular(self) -> frozenset:
        """The regular elements L* = {a*}."""
        return frozenset(self.pc[a] for a in self.elements)

    @cached_property
    def complemented(self) -> frozenset:
        return frozenset(a for a in self.elements if self.join[a][self.pc[a]] == self.top)

    @property
    def is_trivial(self) -> bool:
        return self.n == 1


def _closure_table(n: int, rel) -> list[list[bool]]:
    t = [[bool(rel[i][j]) or i == j for j in range(n)] for i in range(n)]
    for k in range(n):
        for i in range(n):
            if t[i][k]:
                for j in range(n):
                    if t[k][j]:
                        t[i][j] = True
    return t


def validate_frame(raw, names: Sequence[str] | None = None) -> Frame:
    """Check that ``raw`` (an n×n boolean order table) is a finite frame and build it.

    Checks run in the order poset, bounded, lattice, distributive; the first
    failure raises with a witness.
    """
    try:
        leq = [[bool(x) for x in row] for row in raw]
    except TypeError as exc:
        raise NotAPoset("order table must be a sequence of rows") from exc
    n = len(leq)
    if any(len(row) != n for row in leq):
        raise NotAPoset("order table must be square", witness=None)
    if n == 0:
        raise Unbounded("empty order has no bottom or top", witness=())
    if names is not None and len(names) != n:
        raise FrameError(f"expected {n} names, got {len(names)}")

    for a in range(n):
        if not leq[a][a]:
            raise NotAPoset(f"not reflexive at {a}", witness=(a,))
    for a in range(n):
        for b in range(a + 1, n):
            if leq[a][b] and leq[b][a]:
                raise NotAPoset(f"not antisymmetric: {a} <= {b} <= {a}", witness=(a, b))
    for a, b, c in product(range(n), repeat=3):
        if leq[a][b] and leq[b][c] and not leq[a][c]:
            raise NotAPoset(f"not transitive: {a} <= {b} <= {c}", witness=(a, b, c))

    bots = [a for a in range(n) if all(leq[a][x] for x in range(n))]
    tops = [a for a in range(n) if all(leq[x][a] for x in range(n))]
    if not bots:
        minimal = tuple(a for a in range(n) if not any(leq[x][a] and x != a for x in range(n)))
        raise Unbounded("no least element", witness=minimal)
    if not tops:
        maximal = tuple(a for a in range(n) if not any(leq[a][x] and x != a for x in range(n)))
        raise Unbounded("no greatest element", witness=maximal)

    meet = [[0] * n for _ in range(n)]
    join = [[0] * n for _ in range(n)]
    for a in range(n):
        for b in range(n):
            lower = [x for x in range(n) if leq[x][a] and leq[x][b]]
            glb = [x for x in lower if all(leq[y][x] for y in lower)]
            upper = [x for x in range(n) if leq[a][x] and leq[b][x]]
            lub = [x for x in upper if all(leq[x][y] for y in upper)]
            if not glb or not lub:
                raise NotALattice(f"no {'meet' if not glb else 'join'} for ({a}, {b})", witness=(a, b))
            meet[a][b] = glb[0]
            join[a][b] = lub[0]

    for a, b, c in product(range(n), repeat=3):
        if meet[a][join[b][c]] != join[meet[a][b]][meet[a][c]]:
            raise NotDistributive(f"a∧(b∨c) != (a∧b)∨(a∧c) at {(a, b, c)}", witness=(a, b, c))

    return Frame(leq, meet, join, bots[0], tops[0], names)


def frame_from_pairs(n: int, pairs: Iterable[Sequence[int]], names: Sequence[str] | None = None) -> Frame:
    """Frame from generating pairs ``i <= j``; reflexive and transitive closure is applied."""
    rel = [[False] * n for _ in range(n)]
    for pair in pairs:
        i, j = pair
        if not (0 <= i < n and 0 <= j < n):
            raise NotAPoset(f"pair {pair} out of range", witness=tuple(pair))
        rel[i][j] = True
    return validate_frame(_closure_table(n, rel), names)


def _chain(k: int, names) -> Frame:
    return frame_from_pairs(k, [(i, i + 1) for i in range(k - 1)], names)


BUILTINS = {
    "C2": lambda: _chain(2, ["0", "1"]),
    "C3": lambda: _chain(3, ["0", "m", "1"]),
    "C4": lambda: _chain(4, ["0", "x", "y", "1"]),
    "B4": lambda: frame_from_pairs(4, [(0, 1), (0, 2), (1, 3), (2, 3)], ["0", "a", "b", "1"]),
}


def builtin(name: str) -> Frame:
    try:
        return BUILTINS[name]()
    except KeyError:
        raise KeyError(f"unknown builtin frame {name!r}; choose from {sorted(BUILTINS)}") from None


def heyting_arrow(F: Frame, a: int, b: int) -> int:
    return F.arrow[a][b]


def pseudocomplement(F: Frame, a: int) -> int:
    return F.pc[a]


def rather_below(F: Frame) -> Relation:
    return F.rb


def completely_below(F: Frame) -> Relation:
    return F.cb


def completely_below_by_scales(F: Frame, depth: int = 3) -> Relation:
    """Completely-below computed from scales, independently of the fixpoint.

    A scale from b to a is a family (s_q) over the rationals of [0, 1] with
    s_0 = b, s_1 = a and s_p ≺ s_q whenever p < q.  On a finite carrier the
    family takes finitely many values, so some value c occurs at two distinct
    interior rationals, which forces b ≺ c ≺ c ≺ a.  Conversely such a c gives
    the step scale (b, c, c, ..., a).  Each candidate c is found by exhaustive
    search and the resulting step scale is verified on the dyadic grid of
    denominator ``2**depth``.
    """
    rb = F.rb
    grid = [k / 2**depth for k in range(2**depth + 1)]
    pairs = []
    for b in F.elements:
        for a in F.elements:
            for c in F.elements:
                scale = [b if q == 0 else a if q == 1 else c for q in grid]
                if all((scale[i], scale[j]) in rb for i in range(len(grid)) for j in range(i + 1, len(grid))):
                    pairs.append((b, a))
                    break
    return Relation.from_pairs(F.n, pairs)


def cozero_elements(F: Frame) -> frozenset:
    return F.coz


def element_predicates(F: Frame, a: int) -> dict[str, bool]:
    return {
        "complemented": a in F.complemented,
        "regular": F.pc[F.pc[a]] == a,
        "cozero": a in F.coz,
        "dense": F.pc[a] == F.bot,
    }
