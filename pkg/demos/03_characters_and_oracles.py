"""
Characters, tensor products and branching
=========================================

Everything computed from admissible subsets is compared against an
independent classical computation (Weyl dimension, Freudenthal recursion).
"""

# %%
from lambdachain import (
    branch,
    character,
    freudenthal_multiplicities,
    levi_recombine,
    lex_lambda_chain,
    lr_decompose,
    root_system,
    tensor_oracle,
    weyl_dimension,
)

b3 = root_system("B3")
lam = (1, 0, 1)
chain = lex_lambda_chain(b3, lam)
ch = character(chain)
print("dimension", weyl_dimension(b3, lam), "=", sum(ch.values()))
print("agrees with Freudenthal:", ch == freudenthal_multiplicities(b3, lam))

# %%
g2 = root_system("G2")
dec = lr_decompose(lex_lambda_chain(g2, (0, 1)), (0, 1))
for mu, m in sorted(dec.items()):
    print(mu, m, "dim", weyl_dimension(g2, mu))
print("tensor oracle agrees:", dec == tensor_oracle(g2, (0, 1), (0, 1)))

# %%
# Restrict to the Levi subalgebra generated by the first two simple roots.
P = [0, 1]
parts = branch(chain, P)
print(dict(parts))
print("recombines:", levi_recombine(b3, parts, P) == ch)
