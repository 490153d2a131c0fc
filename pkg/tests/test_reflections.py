from __future__ import annotations

import pytest

from localelab.catalog import enumerate_homs, frames_isomorphic
from localelab.frame import builtin
from localelab.maps import FrameHom, LocalicMap, identity_hom
from localelab.reflections import (
    check_squares,
    frame_props,
    is_regular_ideal,
    lift_hom,
    reflect,
    square_witness,
)


def test_beta_of_chain(C3):
    G, unit = reflect(C3, "beta")
    assert G.as_frame.n == 2
    assert G.ideal(unit(C3.index("m"))) == frozenset({0})
    # {0, m} is an ideal but not regular
    assert not is_regular_ideal(C3, frozenset({0, C3.index("m")}))


def test_lambda_of_chain(C3):
    G, unit = reflect(C3, "lambda")
    assert [sorted(I) for I in G.ideals] == [[0], [0, 2]]
    assert G.ideal(unit(C3.index("m"))) == frozenset({0})


def test_beta_of_boolean(B4):
    G, unit = reflect(B4, "beta")
    assert frames_isomorphic(G.as_frame, B4)
    assert unit.is_injective()


def test_lifts_on_chain(C2, C3):
    ident = lift_hom(identity_hom(C3), "beta")
    assert ident.values == tuple(range(ident.source.n))
    h = FrameHom(C3, C2, [0, 0, 1])
    hb = lift_hom(h, "beta")
    GC2, _ = reflect(C2, "beta")
    assert [GC2.ideal(v) for v in hb.values] == [frozenset({0}), frozenset({0, 1})]
    hl = lift_hom(FrameHom(C3, C2, [0, 1, 1]), "lambda")
    assert hl.values[-1] == hl.target.top


def test_frame_props(C3, B4):
    assert frame_props(C3) == {"compact": True, "regular": False, "completely_regular": False}
    assert frame_props(B4) == {"compact": True, "regular": True, "completely_regular": True}


def test_unknown_kind(C3):
    with pytest.raises(ValueError):
        reflect(C3, "gamma")


def test_squares_and_units_over_catalog(catalog):
    for M in catalog:
        props = frame_props(M.frame)
        for kind in ("beta", "lambda"):
            G, unit = reflect(M.frame, kind)
            assert unit(M.frame.bot) == G.as_frame.bot
            assert unit.is_injective() == props["completely_regular"]
        assert frame_props(reflect(M.frame, "beta")[0].as_frame)["regular"]
        for L in catalog:
            for h in enumerate_homs(M.frame, L.frame):
                f = LocalicMap(h)
                for kind in ("beta", "lambda"):
                    assert square_witness(f, kind) is None, (M.id, L.id, h.values, kind)


def test_identity_squares():
    for name in ("C2", "C3", "C4", "B4"):
        F = builtin(name)
        assert check_squares(LocalicMap(identity_hom(F)), "beta")
        assert check_squares(LocalicMap(identity_hom(F)), "lambda")
