from __future__ import annotations

import pytest
from hypothesis import given, settings

from localelab.errors import NotALattice, NotAPoset, NotDistributive, Unbounded
from localelab.frame import (
    Relation,
    completely_below_by_scales,
    element_predicates,
    frame_from_pairs,
    heyting_arrow,
    pseudocomplement,
    validate_frame,
)

from conftest import frames


def test_chain_is_a_frame(C3):
    assert (C3.n, C3.bot, C3.top) == (3, 0, 2)
    assert list(C3.names) == ["0", "m", "1"]


def test_diamond_is_not_distributive():
    # 0 < a, b, c < 1
    pairs = [(0, x) for x in (1, 2, 3, 4)] + [(x, 4) for x in (1, 2, 3)]
    with pytest.raises(NotDistributive) as err:
        frame_from_pairs(5, pairs, ["0", "a", "b", "c", "1"])
    assert sorted(err.value.witness) == [1, 2, 3]


def test_pentagon_is_not_distributive():
    # 0 < a < b < 1, 0 < c < 1
    pairs = [(0, 1), (1, 2), (2, 4), (0, 3), (3, 4)]
    with pytest.raises(NotDistributive):
        frame_from_pairs(5, pairs)


def test_invalid_orders_are_rejected():
    with pytest.raises(NotAPoset):
        validate_frame([[1, 1], [1, 1]])
    with pytest.raises(Unbounded):
        validate_frame([[1, 0], [0, 1]])
    # bowtie: 1 and 2 have two minimal upper bounds
    pairs = [(0, 1), (0, 2), (1, 3), (2, 3), (1, 4), (2, 4), (3, 5), (4, 5)]
    with pytest.raises(NotALattice):
        frame_from_pairs(6, pairs)


def test_builtin_values(C3, B4):
    m, a, b = C3.index("m"), B4.index("a"), B4.index("b")
    assert heyting_arrow(C3, m, 0) == 0
    assert heyting_arrow(B4, a, b) == b
    assert pseudocomplement(C3, m) == 0
    assert pseudocomplement(B4, a) == b
    for F in (C3, B4):
        assert F.pc[F.bot] == F.top and F.pc[F.top] == F.bot


def test_rather_below_tables(C3, B4):
    m = C3.index("m")
    assert sorted(C3.rb.pairs()) == sorted([(0, 0), (0, m), (0, 2), (m, 2), (2, 2)])
    assert C3.cb == C3.rb
    leq = Relation.from_pairs(B4.n, B4.order_pairs())
    assert B4.rb == leq and B4.cb == leq


def test_cozero_elements(C3, B4, C4):
    assert C3.coz == frozenset({0, 2})
    assert B4.coz == frozenset(B4.elements)
    assert C4.coz == frozenset({C4.bot, C4.top})


def test_element_predicates(C3, B4):
    assert element_predicates(C3, C3.index("m")) == {
        "complemented": False,
        "regular": False,
        "cozero": False,
        "dense": True,
    }
    assert element_predicates(B4, B4.index("a")) == {
        "complemented": True,
        "regular": True,
        "cozero": True,
        "dense": False,
    }
    for F in (C3, B4):
        assert all(element_predicates(F, F.top).values())


@given(frames())
def test_heyting_adjunction(F):
    for a in F.elements:
        for b in F.elements:
            for x in F.elements:
                assert F.leq[F.meet[a][x]][b] == F.leq[x][F.arrow[a][b]]
        assert F.arrow[a][a] == F.top


@given(frames())
def test_distributive_law(F):
    for a in F.elements:
        for b in F.elements:
            for c in F.elements:
                assert F.meet[a][F.join[b][c]] == F.join[F.meet[a][b]][F.meet[a][c]]


@given(frames())
def test_pseudocomplement_laws(F):
    pc = F.pc
    for a in F.elements:
        assert F.meet[a][pc[a]] == F.bot
        assert F.leq[a][pc[pc[a]]]
        assert pc[pc[pc[a]]] == pc[a]
        assert pc[pc[a]] in F.regular


@settings(max_examples=60)
@given(frames())
def test_completely_below_matches_scale_oracle(F):
    assert F.cb == completely_below_by_scales(F)
    assert F.cb.is_interpolative()
    assert F.cb <= F.rb
    assert (F.bot, F.top) in F.cb


@given(frames())
def test_cozero_is_the_complemented_sublattice(F):
    # on finite frames Coz = {a : a = ⋁{x ≪ a}} coincides with the Boolean centre
    assert F.coz == F.complemented
    for a in F.coz:
        assert F.join_all(F.cb.predecessors(a)) == a
