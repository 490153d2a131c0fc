"""Isomorph-free catalog of small frames and homomorphism enumeration.

Finite frames are the downset lattices of finite posets, and non-isomorphic
posets give non-isomorphic lattices.  Posets are grown one maximal point at
a time and deduplicated with networkx isomorphism tests.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import combinations, permutations
from pathlib import Path

import networkx as nx

from .errors import CapExceeded, FrameError, GuardExceeded
from .frame import BUILTINS, Frame, builtin, frame_from_pairs
from .maps import FrameHom

__all__ = [
    "CatalogEntry",
    "MAX_POSET_GUARD",
    "posets_up_to_iso",
    "downset_lattice",
    "generate_catalog",
    "frames_isomorphic",
    "enumerate_homs",
    "resolve_frame_id",
    "rings_of_sets",
]

MAX_POSET_GUARD = 6
_POINTS = "abcdef"


@dataclass(frozen=True)
class CatalogEntry:
    id: str
    frame: Frame
    provenance: str

    def __repr__(self) -> str:
        return f"CatalogEntry({self.id}, n={self.frame.n})"


def _poset_graph(k: int, below: tuple) -> nx.DiGraph:
    g = nx.DiGraph()
    g.add_nodes_from(range(k))
    g.add_edges_from((i, j) for j in range(k) for i in range(k) if below[j] >> i & 1)
    return g


def posets_up_to_iso(k: int) -> list[tuple]:
    """Posets on {0..k-1}, one per isomorphism class.

    A poset is a tuple of bitmasks: ``below[j]`` holds the points strictly
    below j.  Point k-1 is always maximal, so every poset of size k arises by
    adding a maximal point over a downset of a poset of size k-1.
    """
    if k == 0:
        return [()]
    out: list[tuple] = []
    graphs: list[nx.DiGraph] = []
    for P in posets_up_to_iso(k - 1):
        for D in _downsets(k - 1, P):
            Q = P + (D,)
            g = _poset_graph(k, Q)
            if any(nx.is_isomorphic(g, h) for h in graphs):
                continue
            out.append(Q)
            graphs.append(g)
    return out


def _downsets(k: int, below: tuple) -> list[int]:
    found = []
    for mask in range(1 << k):
        if all(below[i] & ~mask == 0 for i in range(k) if mask >> i & 1):
            found.append(mask)
    return found


def downset_lattice(k: int, below: tuple) -> Frame:
    """Downsets of the poset ordered by inclusion; named by their points."""
    ds = sorted(_downsets(k, below), key=lambda m: (bin(m).count("1"), m))
    full = (1 << k) - 1

    def name(m):
        if m == 0:
            return "0"
        if m == full:
            return "1"
        return "".join(_POINTS[i] for i in range(k) if m >> i & 1)

    pairs = [(i, j) for i, x in enumerate(ds) for j, y in enumerate(ds) if x & ~y == 0]
    return frame_from_pairs(len(ds), pairs, [name(m) for m in ds])


def _hasse(F: Frame) -> nx.DiGraph:
    g = nx.DiGraph()
    g.add_nodes_from(F.elements)
    for a in F.elements:
        for b in F.elements:
            if a != b and F.leq[a][b] and not any(
                c not in (a, b) and F.leq[a][c] and F.leq[c][b] for c in F.elements
            ):
                g.add_edge(a, b)
    return g


def frames_isomorphic(F: Frame, G: Frame) -> bool:
    return F.n == G.n and nx.is_isomorphic(_hasse(F), _hasse(G))


def _describe(k: int, below: tuple) -> str:
    rel = [f"{_POINTS[i]}<{_POINTS[j]}" for j in range(k) for i in range(k) if below[j] >> i & 1]
    pts = ",".join(_POINTS[:k])
    return f"downsets of poset [{pts}]" + (" with " + ",".join(rel) if rel else " (antichain)")


def generate_catalog(max_poset_size: int = 3) -> list[CatalogEntry]:
    """Downset lattices of all posets with 1..max points, plus the builtins.

    The trivial one-element frame (empty poset) is left out.
    """
    if max_poset_size > MAX_POSET_GUARD:
        raise GuardExceeded(f"max poset size {max_poset_size} exceeds the guard {MAX_POSET_GUARD}")
    if max_poset_size < 0:
        raise ValueError("max poset size must be non-negative")
    builtins = {name: builtin(name) for name in BUILTINS}
    entries: list[CatalogEntry] = []
    used = set()
    for k in range(1, max_poset_size + 1):
        for i, P in enumerate(posets_up_to_iso(k)):
            F = downset_lattice(k, P)
            prov = _describe(k, P)
            match = next((n for n, B in builtins.items() if n not in used and frames_isomorphic(F, B)), None)
            if match is not None:
                used.add(match)
                entries.append(CatalogEntry(match, builtins[match], f"builtin {match}; {prov}"))
            else:
                entries.append(CatalogEntry(f"P{k}.{i}", F, prov))
    for name, B in builtins.items():
        if name not in used:
            entries.append(CatalogEntry(name, B, f"builtin {name}"))
    for x, y in combinations(entries, 2):
        assert not frames_isomorphic(x.frame, y.frame), f"{x.id} and {y.id} are isomorphic"
    return entries


def rings_of_sets(k: int) -> list[frozenset]:
    """Independent generator: lattices of subsets of k points, up to relabelling.

    Families containing the empty and the full set, closed under union and
    intersection, and separating points.  These are exactly the downset
    lattices of k-point posets.  Returns one canonical family per class.
    """
    full = (1 << k) - 1
    middle = list(range(1, full))
    seen = set()
    out = []
    for bits in range(1 << len(middle)):
        fam = {0, full} | {middle[i] for i in range(len(middle)) if bits >> i & 1}
        if any((x | y) not in fam or (x & y) not in fam for x in fam for y in fam):
            continue
        if any(
            all((s >> p & 1) == (s >> q & 1) for s in fam) for p in range(k) for q in range(p + 1, k)
        ):
            continue
        canon = min(
            tuple(sorted(sum(1 << perm[i] for i in range(k) if s >> i & 1) for s in fam))
            for perm in permutations(range(k))
        )
        if canon not in seen:
            seen.add(canon)
            out.append(frozenset(canon))
    return out


def enumerate_homs(M: Frame, L: Frame, cap: int = 10_000) -> list[FrameHom]:
    """All 0, 1, ∧, ∨ preserving tables M → L, in lexicographic order."""
    order = sorted(M.elements, key=lambda x: (sum(M.leq[y][x] for y in M.elements), x))
    pos = {x: i for i, x in enumerate(order)}
    values = [None] * M.n
    found: list[tuple] = []

    def consistent(x: int, v: int) -> bool:
        if x == M.bot and v != L.bot or x == M.top and v != L.top:
            return False
        for y in order[: pos[x]]:
            w = values[y]
            if M.leq[y][x] and not L.leq[w][v] or M.leq[x][y] and not L.leq[v][w]:
                return False
            m, j = M.meet[x][y], M.join[x][y]
            if values[m] is not None and values[m] != L.meet[v][w]:
                return False
            if values[j] is not None and values[j] != L.join[v][w]:
                return False
        # x may itself be the meet or join of two earlier points
        earlier = order[: pos[x]]
        for y in earlier:
            for z in earlier:
                if M.meet[y][z] == x and L.meet[values[y]][values[z]] != v:
                    return False
                if M.join[y][z] == x and L.join[values[y]][values[z]] != v:
                    return False
        return True

    def rec(i: int):
        if i == len(order):
            found.append(tuple(values))
            if len(found) > cap:
                raise CapExceeded(f"more than {cap} homomorphisms")
            return
        x = order[i]
        for v in L.elements:
            if consistent(x, v):
                values[x] = v
                rec(i + 1)
                values[x] = None

    rec(0)
    found.sort()
    # each table is fully re-validated by FrameHom
    return [FrameHom(M, L, t) for t in found]


def _load_frame_file(path: Path) -> Frame:
    from .io import frame_from_json

    return frame_from_json(json.loads(path.read_text()))


def resolve_frame_id(ref: str, max_poset_size: int | None = None) -> Frame:
    """A builtin name, a catalog id such as ``P3.2``, or a path to a frame JSON file."""
    if ref in BUILTINS:
        return builtin(ref)
    if ref.startswith("P") and "." in ref:
        try:
            k = int(ref[1:].split(".")[0])
        except ValueError:
            k = None
        if k is not None:
            size = max(k, max_poset_size or 0)
            for e in generate_catalog(size):
                if e.id == ref:
                    return e.frame
            raise FrameError(f"no catalog entry {ref!r}")
    path = Path(ref)
    if path.exists():
        return _load_frame_file(path)
    raise FrameError(f"cannot resolve frame {ref!r}: not a builtin, catalog id, or file")
