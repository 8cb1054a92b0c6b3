import json
from collections import Counter
from fractions import Fraction

import pytest

from cdpoly.corpus import exhaustive, is_bipartite
from cdpoly.gpoly import GraphPolys
from cdpoly.graph import (INFINITE, Graph, closed_neighborhood, distance, induced,
                          is_claw_free, mask_of)
from cdpoly.identities import (IDENTITIES, Sign, anchor_choices, ms_sign, verify, verify_c1a,
                               verify_c1b, verify_graph, verify_m1, verify_m2, verify_t1,
                               verify_t2, verify_t3)
from cdpoly.poly import BiPoly, UniPoly, outer
from cdpoly.subgraphs import enum_odd_paths, enum_paths

K1, K2, K3 = Graph.complete(1), Graph.complete(2), Graph.complete(3)
E2 = Graph.empty(2)
P3 = Graph.path(3)
C4 = Graph.cycle(4)
X_MINUS_Y = BiPoly({(1, 0): 1, (0, 1): -1})
ONE_PLUS_X, ONE_PLUS_Y = BiPoly({(0, 0): 1, (1, 0): 1}), BiPoly({(0, 0): 1, (0, 1): 1})


def test_t1_examples():
    r = verify_t1(K2, 0, 1)
    assert r.holds and r.lhs == UniPoly([0, 0, 1]) and r.term_count == 1
    r = verify_t1(E2, 0, 1)
    assert r.holds and r.lhs.is_zero() and r.term_count == 0
    r = verify_t1(P3, 0, 2)
    assert r.holds and r.lhs == UniPoly([0, 0, 0, -1]) and r.term_count == 1
    with pytest.raises(ValueError):
        verify_t1(K2, 1, 1)


def test_t2_examples():
    r = verify_t2(K1, 0)
    assert r.holds and r.lhs == X_MINUS_Y
    for u in (0, 1):
        r = verify_t2(K2, u)
        assert r.holds and r.lhs == X_MINUS_Y and r.term_count == 2
    r = verify_t2(E2, 0)
    assert r.holds and r.lhs == X_MINUS_Y * ONE_PLUS_X * ONE_PLUS_Y and r.term_count == 1


def test_t3_examples_and_orientation():
    r = verify_t3(K1)
    assert r.holds and r.rhs == X_MINUS_Y and r.lhs == X_MINUS_Y
    assert "statement orientation" in r.notes and "does not" in r.notes
    r = verify_t3(K2)
    assert r.holds and r.rhs == X_MINUS_Y * 2
    r = verify_t3(E2)
    assert r.holds and r.rhs == X_MINUS_Y * ONE_PLUS_X * ONE_PLUS_Y * 2


def test_t3_statement_orientation_fails_on_base_cases():
    for g in (K1, K2):
        p = GraphPolys(g).independence()
        xdp = p.derivative().shift(1)
        statement = outer(p, xdp) - outer(xdp, p)
        assert statement != verify_t3(g).rhs


def test_c1a_examples():
    r = verify_c1a(K1, 0)
    assert r.holds and r.lhs == UniPoly([0, -1])
    r = verify_c1a(K2, 0)
    assert r.holds and r.lhs == UniPoly([0, -1])
    for u in range(4):
        r = verify_c1a(C4, u)
        assert r.holds and r.lhs == UniPoly([0, -1, -2, -2])


def test_c1b_examples():
    assert verify_c1b(K1).lhs == UniPoly([0, -1])
    assert verify_c1b(K2).lhs == UniPoly([0, -2])
    r = verify_c1b(K3)
    assert r.holds and r.lhs == UniPoly([0, -3]) and r.term_count == 6


def test_matching_identity_examples():
    r = verify_m1(K2, 0, 1)
    assert r.holds and r.lhs == UniPoly([1]) and r.term_count == 1
    r = verify_m2(K1, 0)
    assert r.holds and r.lhs == X_MINUS_Y and r.term_count == 1
    r = verify_m1(P3, 0, 2)
    assert r.holds and r.lhs == UniPoly([1])
    with pytest.raises(ValueError):
        verify_m1(K2, 0, 0)


def test_ms_examples():
    r = ms_sign(K2, 0, 1, 1)
    assert r.value == 1 and r.actual is r.predicted is Sign.POSITIVE
    for x in (Fraction(1, 3), 1, 7):
        r = ms_sign(E2, 0, 1, x)
        assert r.value == 0 and r.actual is r.predicted is Sign.ZERO
    r = ms_sign(P3, 0, 2, 1)
    assert r.value == -1 and r.actual is r.predicted is Sign.NEGATIVE
    with pytest.raises(ValueError, match="bipartite"):
        ms_sign(K3, 0, 1, 1)
    with pytest.raises(ValueError):
        ms_sign(K2, 0, 1, 0)


def test_ms_report_roundtrips_to_json():
    r = verify(P3, "ms", (0, 2), x=Fraction(1, 2))
    d = json.loads(json.dumps(r.to_dict()))
    assert d["holds"] and d["identity_id"] == "MS" and d["rhs"]["text"] == "NEGATIVE"


def test_report_schema():
    d = verify_t1(K2, 0, 1).to_dict()
    assert set(d) == {"schema", "identity_id", "anchors", "lhs", "rhs", "holds", "term_count",
                      "notes"}
    assert d["schema"] == 1 and d["lhs"] == {"text": "x^2", "coefficients": [0, 0, 1]}
    d = verify_t2(K1, 0).to_dict()
    assert d["lhs"]["coefficients"] == [[0, 1, -1], [1, 0, 1]]


def test_dispatch_checks_arity():
    with pytest.raises(ValueError):
        verify(K2, "t1", (0,))
    with pytest.raises(ValueError):
        verify(K2, "nope", ())


def test_all_identities_hold_on_graphs_up_to_six(small_graphs):
    for g in small_graphs:
        for r in verify_graph(g):
            assert r.holds, (g, r.identity_id, r.anchors)


def test_path_dp_and_enumeration_give_same_rhs():
    """The matching identities' RHS from listed paths equals the DP grouping."""
    for g in exhaustive(5):
        for u in range(g.n):
            listed = Counter(mask_of(p) for p in enum_paths(g, u))
            assert verify_m2(g, u, paths=listed).holds
            for v in range(g.n):
                if v != u:
                    listed = Counter(mask_of(p) for p in enum_paths(g, u, v))
                    r = verify_m1(g, u, v, paths=listed)
                    assert r.holds and r.rhs == verify_m1(g, u, v).rhs


def test_claw_free_sum_over_odd_paths(graphs_upto7):
    """For claw-free G the summed identity collapses to (x - y) times a sum over odd
    induced paths; chorded paths (e.g. around a triangle) must be left out."""
    for g in graphs_upto7:
        if not is_claw_free(g):
            continue
        e = GraphPolys(g)
        total = BiPoly()
        for p in enum_odd_paths(g):
            if induced(g, mask_of(p)).m != len(p) - 1:
                continue
            r = (len(p) - 1) // 2
            q = e.independence(g.full & ~closed_neighborhood(g, mask_of(p)))
            total = total + BiPoly.monomial(r, r) * outer(q, q)
        assert verify_t3(g, e).lhs == X_MINUS_Y * total


def test_t1_parity_agrees_with_ms_prediction_on_bipartite(graphs_upto7):
    for g in graphs_upto7:
        if not is_bipartite(g):
            continue
        for u, v in anchor_choices(g, "t1"):
            r = ms_sign(g, u, v, 1)
            d = distance(g, u, v)
            if d == INFINITE:
                assert r.parities == []
            else:
                assert r.parities == [d % 2]


def test_anchor_choices():
    assert anchor_choices(K3, "t3") == [()]
    assert anchor_choices(K3, "t2") == [(0,), (1,), (2,)]
    assert len(anchor_choices(K3, "m1")) == 6
    assert set(IDENTITIES) == {"t1", "t2", "t3", "c1a", "c1b", "m1", "m2", "ms"}
