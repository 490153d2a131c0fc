from __future__ import annotations

from itertools import combinations

import pytest
from hypothesis import given, settings

from localelab.errors import FrameMismatch
from localelab.sublocales import (
    Sublocale,
    closed_sublocale,
    closure,
    co_heyting_diff,
    completely_separated,
    enumerate_sublocales,
    interior,
    open_sublocale,
    sub_join,
    sub_meet,
    supplement,
    void,
    whole,
)

from conftest import frames


def _subset_scan(F):
    """Brute-force oracle: every subset closed under meets and under x → (−)."""
    out = set()
    for r in range(1, F.n + 1):
        for combo in combinations(F.elements, r):
            S = set(combo)
            if F.top not in S:
                continue
            if all(F.meet[a][b] in S for a in S for b in S) and all(F.arrow[x][s] in S for x in F.elements for s in S):
                out.add(frozenset(S))
    return out


def _members(F, *names):
    return frozenset(F.index(x) for x in names)


def test_open_and_closed_values(C3, B4):
    assert closed_sublocale(C3, C3.index("m")).members == _members(C3, "m", "1")
    assert open_sublocale(C3, C3.index("m")).members == _members(C3, "0", "1")
    assert open_sublocale(B4, B4.index("a")).members == _members(B4, "b", "1")
    for F in (C3, B4):
        assert open_sublocale(F, F.bot) == void(F)
        assert closed_sublocale(F, F.bot) == whole(F)


def test_complements_in_C3(C3):
    m = C3.index("m")
    Cm, Om = closed_sublocale(C3, m), open_sublocale(C3, m)
    assert sub_join([Cm, Om]) == whole(C3)
    assert sub_meet(Cm, Om).is_void
    assert supplement(Cm) == Om
    assert closure(Om) == whole(C3)
    assert interior(Cm) == void(C3)


def test_enumeration_counts(C2, C3, B4):
    assert len(enumerate_sublocales(C2)) == 2
    assert {S.members for S in enumerate_sublocales(C3)} == {
        _members(C3, "1"),
        _members(C3, "m", "1"),
        _members(C3, "0", "1"),
        frozenset(C3.elements),
    }
    subs = {S.members for S in enumerate_sublocales(B4)}
    for a in B4.elements:
        assert closed_sublocale(B4, a).members in subs and open_sublocale(B4, a).members in subs


def test_enumeration_matches_subset_scan(catalog):
    for e in catalog:
        assert {S.members for S in enumerate_sublocales(e.frame)} == _subset_scan(e.frame)


def test_complete_separation_values(C3, B4):
    m = C3.index("m")
    assert not completely_separated(open_sublocale(C3, m), closed_sublocale(C3, m))
    assert completely_separated(closed_sublocale(B4, B4.index("a")), closed_sublocale(B4, B4.index("b")))
    for S in enumerate_sublocales(C3):
        assert completely_separated(void(C3), S)


def test_mixed_frames_rejected(C3, B4):
    with pytest.raises(FrameMismatch):
        sub_meet(whole(C3), whole(B4))


@settings(max_examples=40)
@given(frames(max_points=3))
def test_open_closed_identities(F):
    for a in F.elements:
        Ca, Oa = closed_sublocale(F, a), open_sublocale(F, a)
        assert sub_join([Ca, Oa]) == whole(F) and sub_meet(Ca, Oa).is_void
        assert closure(Oa) == closed_sublocale(F, F.pc[a])
        assert interior(Ca) == open_sublocale(F, F.pc[a])
        for b in F.elements:
            assert sub_join([Ca, closed_sublocale(F, b)]) == closed_sublocale(F, F.meet[a][b])
            assert sub_meet(Ca, closed_sublocale(F, b)) == closed_sublocale(F, F.join[a][b])
            assert sub_meet(Oa, open_sublocale(F, b)) == open_sublocale(F, F.meet[a][b])
            assert sub_join([Oa, open_sublocale(F, b)]) == open_sublocale(F, F.join[a][b])


@settings(max_examples=25)
@given(frames(max_points=3))
def test_coframe_laws(F):
    subs = enumerate_sublocales(F)
    for S in subs:
        assert closure(supplement(S)) == supplement(interior(S))
        for T in subs:
            D = co_heyting_diff(S, T)
            for A in subs:
                assert (D <= A) == (S <= sub_join([T, A]))


@settings(max_examples=25)
@given(frames(max_points=3))
def test_complete_separation_properties(F):
    subs = enumerate_sublocales(F)
    for S in subs:
        for T in subs:
            cs = completely_separated(S, T)
            assert cs == completely_separated(T, S)
            assert cs == completely_separated(closure(S), closure(T))
            if cs:
                assert all(completely_separated(S2, T) for S2 in subs if S2 <= S)


@given(frames())
def test_cs_cb(F):
    for a in F.elements:
        for b in F.elements:
            assert ((a, b) in F.cb) == completely_separated(open_sublocale(F, a), closed_sublocale(F, b))


def test_sublocale_repr(C3):
    assert repr(closed_sublocale(C3, C3.index("m"))) == "{m,1}"
    assert Sublocale(C3, [2]).is_void
