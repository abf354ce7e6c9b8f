"""Crystals, characters and alcove-path geometry from admissible subsets of lambda-chains."""

from .chain import LambdaChain, counting_identity_check, lex_lambda_chain, validate_lambda_chain
from .characters import (
    branch,
    character,
    freudenthal_multiplicities,
    levi_recombine,
    lr_decompose,
    restricted_dominant,
    tensor_oracle,
    weyl_dimension,
)
from .crystal import (
    CrystalGraph,
    build_crystal_graph,
    color_stats,
    delta,
    e_op,
    enumerate_admissible,
    eps,
    f_op,
    graphs_isomorphic,
    is_admissible,
    m_stat,
    stembridge_audit,
    string_through,
)
from .errors import *  # noqa: F401,F403
from .folding import Folding, folding_of, g_alpha_samples, inner_from_levels, kappa, weight_mu
from .geometry import (
    alcove_coords,
    coxeter_number,
    ls_chain_of,
    path_difference_defects,
    path_points,
    validate_ls_chain,
)
from .roots import CartanSpec, RootSystem, WeylElement, cartan_matrix, root_system

__version__ = "0.1.0"
