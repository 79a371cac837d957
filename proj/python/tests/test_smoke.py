import json

import pytest

import bbflow


def p2():
    return bbflow.graph_from_weights([(0, 1), (1, 1), (2, 1)])


def test_projective_line_is_sharp():
    g = bbflow.graph_from_weights([(0, 1), (1, 1)])
    found = bbflow.enumerate_semisections(g)
    assert len(found) == 3
    assert bbflow.semisection_bound(2) == 3


def test_subset_and_recover():
    g = p2()
    t = bbflow.SemiSection([0], [1], [2])
    cells = bbflow.semisectional_subset(g, t)
    assert cells == [(0, 1), (0, 2), (1, 1), (1, 2)]
    assert bbflow.recover_semisection(g, cells) == t
    assert bbflow.recover_semisection(g, [(0, 1), (1, 2), (0, 2)]) is None


def test_checks_on_bad_subset():
    g = p2()
    u = [(0, 1), (1, 2), (0, 2)]
    assert bbflow.check_Theta(g, u)
    assert not bbflow.check_S(g, u)
    assert bbflow.check_E(g, u)
    assert not bbflow.has_proper_quotient(g, u)


def test_oracle_matches_semisections():
    g = bbflow.product_graph([[(0, 1), (1, 1)], [(0, 1), (1, 1)]])
    opens = {tuple(u) for u in bbflow.oracle_enumerate_proper_opens(g)}
    subsets = {tuple(bbflow.semisectional_subset(g, t))
               for t in bbflow.enumerate_semisections(g)}
    assert opens == subsets
    assert len(opens) == 11


def test_graph_helpers():
    g = bbflow.build_graph(3, [(0, 1), (1, 2)])
    assert bbflow.transitive_less(g, 0, 2)
    assert bbflow.find_source_sink(g) == (0, 2)
    assert bbflow.validate_geometric(g) == []
    assert bbflow.monotone_weighting_exists(g) == {0: 0, 1: 1, 2: 2}
    assert g.closure((0, 1)) == [(0, 0), (0, 1), (1, 1)]
    assert not bbflow.is_closed_family(g, {0}, "minus")
    same = bbflow.graph_from_json(json.dumps(g.to_json()))
    assert same.strata == g.strata


def test_errors_carry_codes():
    with pytest.raises(bbflow.BBFlowError) as info:
        bbflow.build_graph(2, [])
    assert info.value.code == "NoUniqueSource"


def test_blowup():
    tree = bbflow.chain_from_monomial_ideal([(2, 0), (0, 1)])
    assert tree["guard_exponent"] == 2
    assert [c["path"] for c in tree["charts"]] == ["", "A", "B", "BA", "BB"]


def test_run_cli():
    code, out, err = bbflow.run_cli(
        ["enumerate", "--weights", '{"factors":[[[0,1],[1,1]]]}'])
    assert code == 0
    assert json.loads(out)["sharp"] is True
    code, _, _ = bbflow.run_cli(["enumerate"])
    assert code == 2
