"""Frame homomorphisms, localic maps, image/preimage, and map classes.

Orientation: a :class:`FrameHom` ``h: M -> L`` has a right adjoint, the
localic map ``f: L -> M`` with ``f(a) = ⋁{b : h(b) <= a}``.
"""
from __future__ import annotations

from typing import Callable, Sequence

from .errors import FrameMismatch, NotAHom
from .frame import Frame
from .sublocales import (
    Sublocale,
    closed_sublocale,
    interior_element,
    is_closed,
    open_sublocale,
)

__all__ = [
    "FrameHom",
    "LocalicMap",
    "MAP_CLASSES",
    "right_adjoint",
    "identity_hom",
    "localic_map",
    "image",
    "preimage",
    "map_class",
    "map_classes",
    "is_subfit",
    "is_onto",
]


class FrameHom:
    """A 0, 1, ∧, ∨ preserving table ``values`` from ``source`` (M) to ``target`` (L)."""

    def __init__(self, source: Frame, target: Frame, values: Sequence[int], check: bool = True):
        self.source = source
        self.target = target
        self.values = tuple(int(v) for v in values)
        if check:
            self._validate()

    def _validate(self):
        M, L, h = self.source, self.target, self.values
        if len(h) != M.n:
            raise NotAHom(f"expected {M.n} values, got {len(h)}")
        if any(not 0 <= v < L.n for v in h):
            raise NotAHom("value out of range for target frame")
        if h[M.bot] != L.bot:
            raise NotAHom("h(0) != 0", witness=("bot", M.bot))
        if h[M.top] != L.top:
            raise NotAHom("h(1) != 1", witness=("top", M.top))
        for a in M.elements:
            for b in M.elements:
                if h[M.meet[a][b]] != L.meet[h[a]][h[b]]:
                    raise NotAHom(f"h does not preserve the meet of {(a, b)}", witness=("meet", a, b))
                if h[M.join[a][b]] != L.join[h[a]][h[b]]:
                    raise NotAHom(f"h does not preserve the join of {(a, b)}", witness=("join", a, b))

    def __call__(self, x: int) -> int:
        return self.values[x]

    def __repr__(self) -> str:
        return f"FrameHom({list(self.values)})"

    def is_injective(self) -> bool:
        return len(set(self.values)) == len(self.values)


class LocalicMap:
    """The right adjoint ``f: L -> M`` of a frame homomorphism ``h: M -> L``."""

    def __init__(self, hom: FrameHom):
        self.hom = hom
        L, M, h = hom.target, hom.source, hom.values
        self.domain = L
        self.codomain = M
        self.values = tuple(
            M.join_all(b for b in M.elements if L.leq[h[b]][a]) for a in L.elements
        )
        for a in L.elements:
            for b in M.elements:
                if L.leq[h[b]][a] != M.leq[b][self.values[a]]:
                    raise NotAHom(f"adjunction fails at a={a}, b={b}", witness=("adjunction", a, b))

    def __call__(self, a: int) -> int:
        return self.values[a]

    def h(self, b: int) -> int:
        return self.hom.values[b]

    def __repr__(self) -> str:
        return f"LocalicMap(f={list(self.values)}, h={list(self.hom.values)})"


def right_adjoint(h: FrameHom) -> LocalicMap:
    return LocalicMap(h)


def localic_map(source: Frame, target: Frame, values: Sequence[int]) -> LocalicMap:
    """Localic map ``target -> source`` from the hom table ``source -> target``."""
    return LocalicMap(FrameHom(source, target, values))


def identity_hom(F: Frame) -> FrameHom:
    return FrameHom(F, F, list(F.elements))


def image(f: LocalicMap, S: Sublocale) -> Sublocale:
    if S.frame is not f.domain:
        raise FrameMismatch("sublocale is not in the domain of the map")
    out = Sublocale(f.codomain, frozenset(f(s) for s in S.members))
    return out


def preimage(f: LocalicMap, T: Sublocale) -> Sublocale:
    """The localic preimage f₋₁[T]: the largest sublocale of L inside f⁻¹[T].

    Closed and open T use 𝔠(h(a)) and 𝔬(h(a)).  In general the answer is
    {x : f(y → x) ∈ T for every y}, which is a sublocale (it contains 1, and
    y→(x∧x') and y→(z→x) = (y∧z)→x stay in the set) lying inside f⁻¹[T]
    (take y = 1) and containing every sublocale inside f⁻¹[T].
    """
    if T.frame is not f.codomain:
        raise FrameMismatch("sublocale is not in the codomain of the map")
    L = f.domain
    if is_closed(T):
        return closed_sublocale(L, f.h(T.bottom))
    a = interior_element(T)
    if open_sublocale(T.frame, a) == T:
        return open_sublocale(L, f.h(a))
    return Sublocale(
        L,
        frozenset(x for x in L.elements if all(f(L.arrow[y][x]) in T.members for y in L.elements)),
    )


def is_onto(f: LocalicMap) -> bool:
    return set(f.values) == set(f.codomain.elements)


def is_subfit(F: Frame) -> bool:
    for a in F.elements:
        for b in F.elements:
            if F.leq[a][b]:
                continue
            if not any(F.join[a][c] == F.top and F.join[b][c] != F.top for c in F.elements):
                return False
    return True


# map classes


def _closed_on(f: LocalicMap, elems) -> bool:
    L, M = f.domain, f.codomain
    return all(
        f(L.join[a][f.h(b)]) == M.join[f(a)][b] for a in elems for b in M.elements
    )


def _nearly_open_on(f: LocalicMap, elems) -> bool:
    L, M = f.domain, f.codomain
    return all(f.h(M.pc[a]) == L.pc[f.h(a)] for a in elems)


def _open_image(f: LocalicMap, elems, target_ok: Callable[[Frame, int], bool] | None = None) -> bool:
    """f[𝔬(a)] is open for each a in elems (and its element satisfies target_ok)."""
    L = f.domain
    for a in elems:
        img = image(f, open_sublocale(L, a))
        w = interior_element(img)
        if open_sublocale(f.codomain, w) != img:
            return False
        if target_ok is not None and not target_ok(f.codomain, w):
            return False
    return True


def _dense(f):
    return f(f.domain.bot) == f.codomain.bot


def _closed(f):
    return _closed_on(f, f.domain.elements)


def _z_closed(f):
    return _closed_on(f, f.domain.coz)


def _rc_closed(f):
    return _closed_on(f, f.domain.regular)


def _z_preserving(f):
    return _z_closed(f) and all(f(a) in f.codomain.coz for a in f.domain.coz)


def _regc_preserving(f):
    return _rc_closed(f) and all(f(a) in f.codomain.regular for a in f.domain.regular)


def _open(f):
    return _open_image(f, f.domain.elements)


def _co_open(f):
    return _open_image(f, f.domain.coz)


def _ro_open(f):
    return _open_image(f, f.domain.regular)


def _co_preserving(f):
    return _open_image(f, f.domain.coz, lambda M, w: w in M.coz)


def _rego_preserving(f):
    return _open_image(f, f.domain.regular, lambda M, w: w in M.regular)


def _nearly_open(f):
    return _nearly_open_on(f, f.codomain.elements)


def _co_nearly_open(f):
    return _nearly_open_on(f, f.codomain.coz)


def _ro_nearly_open(f):
    return _nearly_open_on(f, f.codomain.regular)


def _cb_preserving(f):
    L, M = f.domain, f.codomain
    return all((f(a), f(b)) in M.cb for a, b in L.cb.pairs())


def _z_heavy(f):
    # f₋₁[𝔠(a)] = O means h(a) = 1; a zero Z = 𝔠(c) ⊇ 𝔠(a) needs c <= a, and f₋₁[Z] = O needs h(c) = 1
    L, M = f.domain, f.codomain
    for a in M.elements:
        if f.h(a) != L.top:
            continue
        if not any(M.leq[c][a] and f.h(c) == L.top for c in M.coz):
            return False
    return True


_PREDICATES: dict[str, Callable[[LocalicMap], bool]] = {
    "dense": _dense,
    "closed": _closed,
    "z_closed": _z_closed,
    "rc_closed": _rc_closed,
    "z_preserving": _z_preserving,
    "regc_preserving": _regc_preserving,
    # finite directed sets have a top element, so every monotone map preserves directed joins
    "proper": _closed,
    "open": _open,
    "nearly_open": _nearly_open,
    "co_nearly_open": _co_nearly_open,
    "ro_nearly_open": _ro_nearly_open,
    "co_open": _co_open,
    "ro_open": _ro_open,
    "co_preserving": _co_preserving,
    "rego_preserving": _rego_preserving,
    "cb_preserving": _cb_preserving,
    "z_heavy": _z_heavy,
}

MAP_CLASSES = tuple(_PREDICATES)


def map_class(f: LocalicMap, tag: str) -> bool:
    try:
        pred = _PREDICATES[tag]
    except KeyError:
        raise ValueError(f"unknown map class {tag!r}; choose from {MAP_CLASSES}") from None
    return pred(f)


def map_classes(f: LocalicMap) -> dict[str, bool]:
    return {tag: pred(f) for tag, pred in _PREDICATES.items()}


def closed_by_images(f: LocalicMap, elems=None) -> bool:
    """Image-side reading of closedness: f[𝔠(a)] is closed for each a in elems."""
    L = f.domain
    elems = L.elements if elems is None else elems
    return all(is_closed(image(f, closed_sublocale(L, a))) for a in elems)


def nearly_open_by_sublocales(f: LocalicMap, elems=None) -> bool:
    """f₋₁[cl 𝔬(a)] = cl f₋₁[𝔬(a)] for each a in elems (of the codomain)."""
    from .sublocales import closure

    M = f.codomain
    elems = M.elements if elems is None else elems
    return all(
        preimage(f, closure(open_sublocale(M, a))) == closure(preimage(f, open_sublocale(M, a)))
        for a in elems
    )
