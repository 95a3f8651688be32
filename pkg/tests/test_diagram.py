import itertools
import json
import random
from fractions import Fraction

import pytest

from heegaard_theta.diagram import (
    ALPHA,
    BETA,
    BasepointChoice,
    Crossing,
    all_basepoints,
    arc_closed_half,
    arc_half_half,
    check_basepoints,
    check_matching,
    cycle_check,
    default_basepoints,
    diagram_from_json,
    diagram_to_json,
    enumerate_matchings,
    intersection_matrix,
    j_matrix,
    l_cycle_coefficients,
    load_diagram,
    make_diagram,
    pair,
    validate_diagram,
)
from heegaard_theta.errors import CapExceeded, CrossingNotOnCurve, InvalidMatching, NotQSphere, ParseError
from heegaard_theta.invariants import EllPairing, ell_two_coefficients, lk_coefficients

F = Fraction
A1, B1 = (ALPHA, 1), (BETA, 1)


@pytest.fixture
def d1(diagrams):
    return diagrams["d1_w"]


def test_d1_structure(d1):
    assert d1.genus == 1
    assert {c.id: c.sign for c in d1.crossings.values()} == {"c": 1, "d": 1}
    assert intersection_matrix(d1).tolist() == [[2]]
    assert j_matrix(d1).at(1, 1) == F(1, 2)


def test_arc_weights(d1):
    assert arc_closed_half(d1, A1, "c", "c").weights == {"c": F(1, 2)}
    assert arc_closed_half(d1, A1, "c", "d").weights == {"c": 1, "d": F(1, 2)}
    assert arc_half_half(d1, B1, "c", "c").weights == {}
    assert arc_half_half(d1, B1, "c", "d").weights == {"c": F(1, 2), "d": F(1, 2)}
    with pytest.raises(CrossingNotOnCurve):
        arc_closed_half(d1, A1, "c", "zz")


def test_d1_pairing_table(d1):
    cc_a, cd_a = arc_closed_half(d1, A1, "c", "c"), arc_closed_half(d1, A1, "c", "d")
    cc_b, cd_b = arc_closed_half(d1, B1, "c", "c"), arc_closed_half(d1, B1, "c", "d")
    assert pair(d1, cc_a, cc_b) == F(1, 4)
    assert pair(d1, cc_a, cd_b) == F(1, 2)
    assert pair(d1, cd_a, cc_b) == F(1, 2)
    assert pair(d1, cd_a, cd_b) == F(5, 4)
    assert pair(d1, cc_a, B1) == F(1, 2)
    assert pair(d1, cd_a, B1) == F(3, 2)
    with pytest.raises(ValueError):
        pair(d1, cc_a, cd_a)


def _rotate(orders, k):
    return [o[k % len(o):] + o[:k % len(o)] if o else o for o in map(list, orders)]


@pytest.mark.parametrize("name", ["d1_w", "d2_w", "d3_w"])
def test_anchor_independence(diagrams, name):
    d = diagrams[name]
    m = check_matching(d, d.matching)
    bp = default_basepoints(d, m)
    base = EllPairing(d, bp).table()
    for k in range(1, 4):
        turned = make_diagram(d.genus, d.crossings.values(), _rotate(d.alpha_orders, k),
                              _rotate(d.beta_orders, k))
        assert EllPairing(turned, bp).table() == base


def _brute_matchings(d):
    out = []
    for combo in itertools.combinations(sorted(d.crossings), d.genus):
        cs = [d.crossings[c] for c in combo]
        if len({c.alpha for c in cs}) == d.genus and len({c.beta for c in cs}) == d.genus:
            out.append(sorted(combo))
    return sorted(out)


def random_diagram(rng, genus, n_crossings):
    crossings = [Crossing(f"x{k}", rng.randint(1, genus), rng.randint(1, genus), rng.choice([-1, 1]))
                 for k in range(n_crossings)]
    alpha = [[c.id for c in crossings if c.alpha == i] for i in range(1, genus + 1)]
    beta = [[c.id for c in crossings if c.beta == j] for j in range(1, genus + 1)]
    for o in alpha + beta:
        rng.shuffle(o)
    return make_diagram(genus, crossings, alpha, beta)


def test_matchings_against_brute_force(diagrams):
    for d in diagrams.values():
        assert [sorted(m.crossings) for m in enumerate_matchings(d)] == _brute_matchings(d)
    rng = random.Random(7)
    for _ in range(200):
        g = rng.randint(1, 4)
        d = random_diagram(rng, g, rng.randint(0, 9))
        assert [sorted(m.crossings) for m in enumerate_matchings(d)] == _brute_matchings(d)


def test_corpus_matchings(diagrams):
    got = {n: [str(m) for m in enumerate_matchings(d)] for n, d in diagrams.items()}
    assert got["d1_w"] == ["{c}", "{d}"]
    assert got["s3_trivial"] == ["{c}"]
    assert got["d2_w"] == ["{c,e}", "{d,e}"]
    assert got["d3_w"] == ["{c,e}", "{d,e}", "{f,g}", "{f,h}"]


def test_cap(d1):
    with pytest.raises(CapExceeded):
        enumerate_matchings(d1, cap=0)
    with pytest.raises(CapExceeded):
        enumerate_matchings(d1, cap=1)
    assert len(enumerate_matchings(d1, cap=2)) == 2


def test_check_matching(diagrams):
    d = diagrams["d3_w"]
    assert check_matching(d, ["e", "c"]).crossings == ("c", "e")
    for bad in (["c"], ["c", "d"], ["c", "zz"], ["c", "e", "f"]):
        with pytest.raises(InvalidMatching):
            check_matching(d, bad)
    # g and e share beta_2
    with pytest.raises(InvalidMatching):
        check_matching(d, ["g", "e"])


def test_basepoints(diagrams):
    d = diagrams["d2_w"]
    m = check_matching(d, ["c", "e"])
    bp = default_basepoints(d, m)
    assert bp == BasepointChoice(("c", "e"), ("c", "e"))
    total = 1
    for o in d.alpha_orders + d.beta_orders:
        total *= len(o)
    assert len(list(all_basepoints(d))) == total
    with pytest.raises(CrossingNotOnCurve):
        check_basepoints(d, BasepointChoice(("e", "e"), ("c", "e")))


def test_not_q_sphere():
    d = make_diagram(1, [("p", 1, 1, 1), ("q", 1, 1, -1)], [["p", "q"]], [["q", "p"]])
    assert intersection_matrix(d).tolist() == [[0]]
    with pytest.raises(NotQSphere, match="not a rational homology sphere"):
        j_matrix(d)


def test_cycle_check(diagrams):
    for d in diagrams.values():
        J = j_matrix(d)
        assert cycle_check(d, ell_two_coefficients(d, J))
        for m in enumerate_matchings(d):
            assert cycle_check(d, lk_coefficients(d, m, J))
    d = diagrams["d1_w"]
    assert not cycle_check(d, {("c", "c"): F(1)})
    assert cycle_check(d, {("c", "c"): F(1), ("c", "d"): F(-1), ("d", "c"): F(-1), ("d", "d"): F(1)})
    assert cycle_check(d, {})


def test_l_cycle_on_d2(diagrams):
    d = diagrams["d2_w"]
    t = l_cycle_coefficients(d, check_matching(d, ["c", "e"]))
    assert {k: v for k, v in t.items() if v} == {"c": F(1, 2), "d": F(-1, 2)}


def test_json_round_trip(diagrams):
    for d in diagrams.values():
        doc = json.loads(json.dumps(diagram_to_json(d)))
        assert diagram_from_json(doc) == d
    with pytest.raises(ParseError):
        load_diagram("{")
    with pytest.raises(ParseError):
        diagram_from_json({"genus": 1})


def _rules(d):
    return validate_diagram(d).rules()


def test_validate_diagram(diagrams):
    for d in diagrams.values():
        assert validate_diagram(d).ok
    ok = [("c", 1, 1, 1)]
    assert _rules(make_diagram(1, [("c", 1, 1, 2)], [["c"]], [["c"]])) == {"sign"}
    assert "crossing in multiple alpha curves" in _rules(
        make_diagram(2, [("c", 1, 1, 1), ("e", 2, 2, 1)], [["c"], ["c", "e"]], [["c"], ["e"]]))
    assert "empty curve" in _rules(make_diagram(2, ok, [["c"], []], [["c"], []]))
    assert "curve count" in _rules(make_diagram(1, ok, [["c"], []], [["c"]]))
    assert "unknown crossing" in _rules(make_diagram(1, ok, [["c", "z"]], [["c"]]))
    assert "missing from beta orders" in _rules(make_diagram(1, ok, [["c"]], [[]]))
    assert "alpha index mismatch" in _rules(
        make_diagram(2, [("c", 2, 1, 1), ("e", 1, 2, 1)], [["c"], ["e"]], [["c"], ["e"]]))
    assert "odd beta degree" in _rules(make_diagram(1, ok, [["c"]], [["c"]], arc_half_turns=[[1]]))
    assert "matching" in _rules(make_diagram(1, ok, [["c"]], [["c"]], matching=["q"]))
