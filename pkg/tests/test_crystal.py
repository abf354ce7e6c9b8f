import copy

import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from lambdachain import (
    InvalidColor,
    LambdaChain,
    SizeCapExceeded,
    build_crystal_graph,
    color_stats,
    delta,
    e_op,
    enumerate_admissible,
    eps,
    f_op,
    graphs_isomorphic,
    is_admissible,
    lex_lambda_chain,
    m_stat,
    root_system,
    stembridge_audit,
    string_through,
    weight_mu,
    weyl_dimension,
)
from lambdachain.crystal import INFINITY


@pytest.fixture(scope="module")
def g2():
    return lex_lambda_chain(root_system("G2"), (0, 1))


def test_a2_admissibility():
    chain = lex_lambda_chain(root_system("A2"), (1, 0))
    assert is_admissible(chain, [])
    assert is_admissible(chain, [0, 1])
    assert not is_admissible(chain, [1])
    assert [a.positions for a in enumerate_admissible(chain)] == [(), (0,), (0, 1)]


def test_g2_root_operators(g2):
    # from the empty set only F_2 applies; it folds position 1
    assert f_op(g2, (), 0) is None
    assert f_op(g2, (), 1) == (0,)
    assert e_op(g2, (0,), 1) == ()
    assert m_stat(g2, (), 1) == 1
    assert eps(g2, (), 1) == 1 and delta(g2, (), 1) == 0
    assert string_through(g2, (), 1) == (1, 0)
    assert string_through(g2, (), 0) == (0, 0)


def test_color_stats_fields(g2):
    st_ = color_stats(g2, (), 1)
    assert st_.M == 1 and st_.endpoint == 1
    assert st_.m_F == INFINITY and st_.k_F == st_.positions[-1]
    assert st_.k_E is None
    with pytest.raises(InvalidColor):
        color_stats(g2, (), 2)


def test_operators_move_weight(g2):
    rs = g2.system
    for a in enumerate_admissible(g2):
        for p in range(rs.rank):
            down = f_op(g2, a.positions, p)
            if down is not None:
                alpha = rs.root_as_weight(rs.simple_root(p))
                assert weight_mu(g2, down) == tuple(x - y for x, y in zip(a.weight, alpha))
                assert is_admissible(g2, down)


def test_g2_graph(g2):
    g = build_crystal_graph(g2)
    assert len(g) == 14
    assert stembridge_audit(g).ok
    assert g.nodes[()].weight == (0, 1)


def test_corrupted_graph_fails_audit(g2):
    g = build_crystal_graph(g2)
    bad = copy.copy(g)
    s, d, p = g.edges[3]
    other = next(k for k in g.nodes if k not in (s, d))
    bad.edges = [e for e in g.edges if e != (s, d, p)] + [(s, other, p)]
    report = stembridge_audit(bad)
    assert not report.passed("A2") or not report.passed("A3")
    assert not report.ok
    assert "FAIL" in str(report)

    dropped = copy.copy(g)
    dropped.edges = g.edges[1:]
    assert not stembridge_audit(dropped).passed("A2")


def test_size_cap(g2):
    with pytest.raises(SizeCapExceeded):
        enumerate_admissible(g2, cap=5)
    with pytest.raises(SizeCapExceeded):
        build_crystal_graph(lex_lambda_chain(root_system("B3"), (1, 1, 1)), cap=100)


def test_isomorphism_negative():
    rs = root_system("A2")
    a = build_crystal_graph(lex_lambda_chain(rs, (1, 0)))
    b = build_crystal_graph(lex_lambda_chain(rs, (0, 1)))
    assert graphs_isomorphic(a, a)
    assert not graphs_isomorphic(a, b)


def test_reducible_type():
    rs = root_system("A1xA1")
    g = build_crystal_graph(lex_lambda_chain(rs, (1, 2)))
    assert len(g) == 6
    assert stembridge_audit(g).ok


def test_user_supplied_chain():
    rs = root_system("A2")
    lex = lex_lambda_chain(rs, (1, 1), order=(1, 0))
    user = LambdaChain.from_roots(rs, (1, 1), lex.roots)
    g = build_crystal_graph(user)
    assert len(g) == 8 and stembridge_audit(g).ok
    assert graphs_isomorphic(g, build_crystal_graph(lex_lambda_chain(rs, (1, 1))))


TYPES = ["A2", "B2", "G2", "A3", "B3", "C3"]


@settings(max_examples=25, deadline=None)
@given(st.sampled_from(TYPES), st.data())
def test_random_orders_pass_audit(label, data):
    rs = root_system(label)
    lam = tuple(data.draw(st.lists(st.integers(0, 2), min_size=rs.rank, max_size=rs.rank)))
    assume(weyl_dimension(rs, lam) <= 600)
    order = tuple(data.draw(st.permutations(range(rs.rank))))
    g = build_crystal_graph(lex_lambda_chain(rs, lam, order))
    assert stembridge_audit(g).ok
    assert graphs_isomorphic(g, build_crystal_graph(lex_lambda_chain(rs, lam)))
