"""
A first look: the A2 fundamental weight
=======================================

Three weights, three admissible subsets. Run cell by cell or as a script.
"""

# %%
from lambdachain import character, enumerate_admissible, lex_lambda_chain, root_system, weight_mu

rs = root_system("A2")
print(rs, "positive roots:", rs.positive_roots)

# %% [markdown]
# Weights are written in fundamental-weight coordinates, roots in simple-root
# coordinates. The chain for omega1 has two roots.

# %%
chain = lex_lambda_chain(rs, (1, 0))
print("chain:", chain.roots)

# %%
# Positions in the Python API are 0-based; (1,) would not be admissible
# because the reflection in alpha1+alpha2 does not cover the identity.
for a in enumerate_admissible(chain):
    print(a.positions, "->", weight_mu(chain, a.positions))

# %%
print("character:", dict(character(chain)))
