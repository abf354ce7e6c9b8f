"""Shared test grid: irreducible types of rank <= 3, weights with coordinates in {0,1,2}."""

import itertools
from functools import lru_cache

from lambdachain import build_crystal_graph, lex_lambda_chain, root_system, weyl_dimension

TYPES = ("A1", "A2", "B2", "G2", "A3", "B3", "C3")
RANK2 = ("A2", "B2", "G2")
DIM_CAP = 5000

# criterion number -> (passed, detail); filled by test_acceptance, printed by conftest
RESULTS = {}


def weights(label, dim_cap=DIM_CAP):
    rs = root_system(label)
    return [lam for lam in itertools.product(range(3), repeat=rs.rank) if weyl_dimension(rs, lam) <= dim_cap]


def grid(types=TYPES):
    for label in types:
        for lam in weights(label):
            yield label, lam


@lru_cache(maxsize=None)
def chain_of(label, lam, reverse=False):
    rs = root_system(label)
    order = tuple(reversed(range(rs.rank))) if reverse else None
    return lex_lambda_chain(rs, lam, order)


@lru_cache(maxsize=None)
def graph_of(label, lam, reverse=False):
    return build_crystal_graph(chain_of(label, lam, reverse))
