from __future__ import annotations

from itertools import product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from localelab.catalog import enumerate_homs
from localelab.errors import NotAHom
from localelab.maps import (
    MAP_CLASSES,
    FrameHom,
    LocalicMap,
    closed_by_images,
    identity_hom,
    image,
    is_subfit,
    localic_map,
    map_class,
    map_classes,
    nearly_open_by_sublocales,
    preimage,
)
from localelab.sublocales import closed_sublocale, closure, enumerate_sublocales, sub_join, void, whole

from conftest import frames


def _brute_homs(M, L):
    """Every function M → L that preserves 0, 1, binary meets and joins."""
    out = []
    for vals in product(L.elements, repeat=M.n):
        if vals[M.bot] != L.bot or vals[M.top] != L.top:
            continue
        if all(
            vals[M.meet[a][b]] == L.meet[vals[a]][vals[b]] and vals[M.join[a][b]] == L.join[vals[a]][vals[b]]
            for a in M.elements
            for b in M.elements
        ):
            out.append(vals)
    return sorted(out)


def test_right_adjoint_values(C2, C3):
    m = C3.index("m")
    f = localic_map(C3, C2, [0, 0, 1])
    assert (f(0), f(1)) == (m, C3.top)
    g = localic_map(C3, C2, [0, 1, 1])
    assert (g(0), g(1)) == (0, C3.top)


def test_bad_tables_rejected(C3, C2):
    with pytest.raises(NotAHom):
        FrameHom(C3, C2, [1, 1, 1])
    with pytest.raises(NotAHom):
        FrameHom(C3, C2, [0, 1, 0])


def test_image_and_preimage_values(C2, C3):
    m = C3.index("m")
    f = localic_map(C3, C2, [0, 0, 1])
    assert image(f, whole(C2)).members == frozenset({m, C3.top})
    assert preimage(f, closed_sublocale(C3, m)) == whole(C2)
    assert image(f, void(C2)) == void(C3)


def test_map_class_values(C2, C3, B4):
    f = localic_map(C3, C2, [0, 0, 1])
    assert not map_class(f, "dense")
    assert not map_class(f, "cb_preserving")
    for F in (C2, C3, B4):
        ident = LocalicMap(identity_hom(F))
        assert all(map_classes(ident).values())
    with pytest.raises(ValueError):
        map_class(f, "nonsense")


def test_subfit_values(C2, C3, B4):
    assert is_subfit(B4) and is_subfit(C2)
    assert not is_subfit(C3)


def test_hom_counts(C2, C3, B4):
    assert len(enumerate_homs(C3, C2)) == 2
    assert len(enumerate_homs(B4, C2)) == 2
    for e in (C2, C3, B4):
        assert tuple(e.elements) in [h.values for h in enumerate_homs(e, e)]


def test_hom_enumeration_matches_brute_force(catalog):
    small = [e.frame for e in catalog if e.frame.n <= 5]
    for M in small:
        for L in small:
            assert [h.values for h in enumerate_homs(M, L)] == [tuple(v) for v in _brute_homs(M, L)]


@st.composite
def localic_maps(draw, max_points=3):
    M = draw(frames(max_points))
    L = draw(frames(max_points))
    return LocalicMap(draw(st.sampled_from(enumerate_homs(M, L))))


@settings(max_examples=60)
@given(localic_maps())
def test_image_preimage_adjunction(f):
    L, M = f.domain, f.codomain
    subs_L, subs_M = enumerate_sublocales(L), enumerate_sublocales(M)
    for T in subs_M:
        pre = preimage(f, T)
        # preimage is the largest sublocale mapped inside T
        inside = [S for S in subs_L if all(f(x) in T.members for x in S.members)]
        assert pre == sub_join(inside, L)
        for S in subs_L:
            assert (image(f, S) <= T) == (S <= pre)


@settings(max_examples=60)
@given(localic_maps())
def test_localic_map_laws(f):
    L, M = f.domain, f.codomain
    for a in L.elements:
        assert closure(image(f, closed_sublocale(L, a))) == closed_sublocale(M, f(a))
        assert f(a) != M.top or a == L.top
        for b in L.elements:
            assert f(L.meet[a][b]) == M.meet[f(a)][f(b)]
    for x in M.elements:
        for b in L.elements:
            assert f(L.arrow[f.h(x)][b]) == M.arrow[x][f(b)]


@settings(max_examples=60)
@given(localic_maps())
def test_class_cross_checks(f):
    cls = map_classes(f)
    assert set(cls) == set(MAP_CLASSES)
    assert cls["proper"] == cls["closed"] == closed_by_images(f)
    assert cls["nearly_open"] == nearly_open_by_sublocales(f)
    assert not cls["open"] or cls["nearly_open"]
    assert not cls["closed"] or (cls["z_closed"] and cls["rc_closed"])
