from collections import Counter

import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from lambdachain import (
    InternalInconsistency,
    InvalidColor,
    NotDominant,
    branch,
    character,
    freudenthal_multiplicities,
    levi_recombine,
    lex_lambda_chain,
    lr_decompose,
    restricted_dominant,
    root_system,
    tensor_oracle,
    weyl_dimension,
)
from lambdachain.characters import _extract


def test_a2_fundamental():
    rs = root_system("A2")
    expected = Counter({(1, 0): 1, (-1, 1): 1, (0, -1): 1})
    assert character(lex_lambda_chain(rs, (1, 0))) == expected
    assert freudenthal_multiplicities(rs, (1, 0)) == expected
    assert weyl_dimension(rs, (1, 0)) == 3


def test_a2_adjoint_zero_weight():
    m = freudenthal_multiplicities(root_system("A2"), (1, 1))
    assert m[(0, 0)] == 2 and sum(m.values()) == 8


def test_g2_omega2():
    rs = root_system("G2")
    ch = character(lex_lambda_chain(rs, (0, 1)))
    assert len(ch) == 13 and ch[(0, 0)] == 2 and sum(ch.values()) == 14
    assert ch == freudenthal_multiplicities(rs, (0, 1))
    assert weyl_dimension(rs, (0, 1)) == 14


@pytest.mark.parametrize("label", ["A1", "B3", "G2", "A1xA1"])
def test_trivial_weight(label):
    rs = root_system(label)
    zero = rs.zero_weight()
    assert character(lex_lambda_chain(rs, zero)) == Counter({zero: 1})
    assert freudenthal_multiplicities(rs, zero) == Counter({zero: 1})
    assert weyl_dimension(rs, zero) == 1


def test_known_dimensions():
    g = root_system("G2")
    assert [weyl_dimension(g, w) for w in [(1, 0), (2, 0), (3, 0), (0, 2), (1, 1)]] == [7, 27, 77, 77, 64]
    assert weyl_dimension(root_system("B3"), (1, 0, 0)) == 7
    assert weyl_dimension(root_system("B3"), (0, 0, 1)) == 8
    assert weyl_dimension(root_system("C3"), (1, 0, 0)) == 6
    assert weyl_dimension(root_system("A3"), (1, 1, 1)) == 64


def test_tensor_products():
    rs = root_system("A2")
    assert tensor_oracle(rs, (1, 0), (1, 0)) == Counter({(2, 0): 1, (0, 1): 1})
    assert lr_decompose(lex_lambda_chain(rs, (1, 0)), (1, 0)) == Counter({(2, 0): 1, (0, 1): 1})
    assert tensor_oracle(rs, (1, 0), (0, 0)) == Counter({(1, 0): 1})
    assert lr_decompose(lex_lambda_chain(rs, (0, 0)), (2, 1)) == Counter({(2, 1): 1})
    g = root_system("G2")
    dec = tensor_oracle(g, (0, 1), (0, 1))
    # 14 x 14 = 1 + 14 + 27 + 77 + 77
    assert dec == Counter({(0, 0): 1, (0, 1): 1, (2, 0): 1, (3, 0): 1, (0, 2): 1})
    assert lr_decompose(lex_lambda_chain(g, (0, 1)), (0, 1)) == dec


def test_extraction_detects_non_characters():
    rs = root_system("A2")
    with pytest.raises(InternalInconsistency):
        _extract(rs, Counter({(1, 0): 1, (-1, 1): 1}), 10**6)


def test_branching_examples():
    rs = root_system("A2")
    chain = lex_lambda_chain(rs, (1, 0))
    assert branch(chain, []) == character(chain)
    dec = branch(chain, [0])
    assert dec == Counter({(1, 0): 1, (0, -1): 1})
    assert sum(m * weyl_dimension(rs, mu, [0]) for mu, m in dec.items()) == 3
    assert dec == restricted_dominant(rs, (1, 0), [0])
    assert branch(chain, [0, 1]) == Counter({(1, 0): 1})
    with pytest.raises(InvalidColor):
        branch(chain, [2])


def test_bad_weights():
    rs = root_system("A2")
    with pytest.raises(NotDominant):
        weyl_dimension(rs, (1, -1))
    with pytest.raises(NotDominant):
        lr_decompose(lex_lambda_chain(rs, (1, 0)), (-1, 0))


TYPES = ["A2", "B2", "G2", "A3", "B3", "C3"]


def _weight(rs, data, top=2):
    return tuple(data.draw(st.lists(st.integers(0, top), min_size=rs.rank, max_size=rs.rank)))


@settings(max_examples=30, deadline=None)
@given(st.sampled_from(TYPES), st.data())
def test_character_is_weyl_invariant(label, data):
    rs = root_system(label)
    lam = _weight(rs, data)
    assume(weyl_dimension(rs, lam) <= 800)
    ch = character(lex_lambda_chain(rs, lam))
    assert sum(ch.values()) == weyl_dimension(rs, lam)
    for p in range(rs.rank):
        moved = Counter({rs.reflect_weight(rs.simple_root(p), mu): m for mu, m in ch.items()})
        assert moved == ch


@settings(max_examples=20, deadline=None)
@given(st.sampled_from(TYPES), st.data())
def test_branching_matches_oracle(label, data):
    rs = root_system(label)
    lam = _weight(rs, data)
    assume(weyl_dimension(rs, lam) <= 800)
    P = sorted(data.draw(st.sets(st.integers(0, rs.rank - 1))))
    chain = lex_lambda_chain(rs, lam)
    dec = branch(chain, P)
    assert dec == restricted_dominant(rs, lam, P)
    assert levi_recombine(rs, dec, P) == character(chain)


@settings(max_examples=20, deadline=None)
@given(st.sampled_from(TYPES), st.data())
def test_tensor_mass_conservation(label, data):
    rs = root_system(label)
    lam, nu = _weight(rs, data, 1), _weight(rs, data, 1)
    assume(weyl_dimension(rs, lam) * weyl_dimension(rs, nu) <= 3000)
    dec = tensor_oracle(rs, lam, nu)
    assert sum(m * weyl_dimension(rs, mu) for mu, m in dec.items()) == weyl_dimension(rs, lam) * weyl_dimension(rs, nu)
    assert lr_decompose(lex_lambda_chain(rs, lam), nu) == dec
