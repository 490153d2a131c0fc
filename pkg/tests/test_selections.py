from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from localelab.catalog import enumerate_homs
from localelab.embeddings import EmbeddedSublocale, booleanization
from localelab.errors import ModeRequiresComplemented
from localelab.maps import LocalicMap, identity_hom, localic_map, map_class
from localelab.selections import (
    BETA_MODES,
    CLOSED,
    COZERO,
    LAMBDA_MODES,
    OPEN,
    REG_OPEN,
    STANDARD,
    ZERO,
    Selection,
    cb_preserving_conditions,
    is_S_beta_map_thm,
    is_S_gamma_map,
    is_S_lambda_map_thm,
    is_ST_lambda_map,
    selection,
)
from localelab.sublocales import enumerate_sublocales, open_sublocale, void, whole

from conftest import frames


@st.composite
def localic_maps(draw, max_points=3):
    M = draw(frames(max_points))
    L = draw(frames(max_points))
    return LocalicMap(draw(st.sampled_from(enumerate_homs(M, L))))


def test_selection_values(C2, C3, B4):
    assert {S.members for S in ZERO(C3)} == {whole(C3).members, void(C3).members}
    assert {S.members for S in CLOSED(C2)} == {whole(C2).members, void(C2).members}
    assert len({S.members for S in REG_OPEN(B4)}) == 4
    assert selection("coz") is COZERO and selection("regc").name == "regular_closed"
    with pytest.raises(ValueError):
        selection("bogus")


def test_non_cb_preserving_map_fails_open_beta(C2, C3):
    f = localic_map(C3, C2, [0, 0, 1])
    assert not is_S_gamma_map(f, OPEN, "beta")
    for mode in BETA_MODES:
        assert not is_S_beta_map_thm(f, OPEN, mode)


def test_identity_is_every_kind_of_map(catalog):
    for e in catalog:
        ident = LocalicMap(identity_hom(e.frame))
        for sel in STANDARD:
            assert is_S_gamma_map(ident, sel, "beta") and is_S_gamma_map(ident, sel, "lambda")
            for T in STANDARD:
                assert is_ST_lambda_map(ident, sel, T)


def test_booleanization_of_chain_is_open_beta(C3):
    assert is_S_gamma_map(booleanization(C3).j, OPEN, "beta")


def test_open_embedding_of_chain_is_open_lambda(C3):
    j = EmbeddedSublocale(open_sublocale(C3, C3.index("m"))).j
    assert is_S_lambda_map_thm(j, OPEN) and is_S_gamma_map(j, OPEN, "lambda")


def test_complemented_modes_need_complemented_selection(C3):
    every = Selection.custom("every", enumerate_sublocales)
    ident = LocalicMap(identity_hom(C3))
    assert is_S_lambda_map_thm(ident, every, "iv")
    for mode in ("v", "vi"):
        with pytest.raises(ModeRequiresComplemented):
            is_S_lambda_map_thm(ident, every, mode)


@settings(max_examples=80)
@given(localic_maps())
def test_beta_definition_matches_every_theorem_mode(f):
    for sel in STANDARD:
        defn = is_S_gamma_map(f, sel, "beta")
        assert all(is_S_beta_map_thm(f, sel, mode) == defn for mode in BETA_MODES)


@settings(max_examples=80)
@given(localic_maps())
def test_lambda_definition_matches_every_theorem_mode(f):
    for sel in STANDARD:
        defn = is_S_gamma_map(f, sel, "lambda")
        assert all(is_S_lambda_map_thm(f, sel, mode) == defn for mode in LAMBDA_MODES)
        assert not is_S_gamma_map(f, sel, "beta") or defn


@settings(max_examples=80)
@given(localic_maps())
def test_open_beta_is_cb_preserving(f):
    assert is_S_beta_map_thm(f, OPEN) == map_class(f, "cb_preserving")
    assert len(set(cb_preserving_conditions(f).values())) == 1


@settings(max_examples=80)
@given(localic_maps())
def test_ST_reductions(f):
    for sel in STANDARD:
        assert is_ST_lambda_map(f, sel, COZERO) == is_S_lambda_map_thm(f, sel)
    assert is_ST_lambda_map(f, OPEN, OPEN) == map_class(f, "nearly_open")
    assert is_ST_lambda_map(f, COZERO, OPEN) == map_class(f, "co_nearly_open")
    assert is_ST_lambda_map(f, REG_OPEN, OPEN) == map_class(f, "ro_nearly_open")
    assert is_ST_lambda_map(f, ZERO, ZERO) == is_S_beta_map_thm(f, ZERO)


@settings(max_examples=80)
@given(localic_maps())
def test_beta_monotone_in_the_selection(f):
    beta = {sel.name: is_S_beta_map_thm(f, sel) for sel in STANDARD}
    for small, big in (("zero", "closed"), ("cozero", "open"), ("regular_closed", "closed"), ("regular_open", "open")):
        assert not beta[big] or beta[small]
