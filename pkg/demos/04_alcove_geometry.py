"""
Alcove paths, folded galleries and LS chains
============================================

Exact rational points of the folded path for one G2 subset, and the LS chain
attached to it.
"""

# %%
from lambdachain import alcove_coords, coxeter_number, lex_lambda_chain, ls_chain_of, path_points, root_system
from lambdachain import export
from lambdachain.geometry import validate_ls_chain

g2 = root_system("G2")
chain = lex_lambda_chain(g2, (0, 1))
print("Coxeter number", coxeter_number(g2))

# %%
ac = alcove_coords(chain)
for alpha in g2.positive_roots:
    print(alpha, ac.sequence(alpha))

# %%
J = (0, 1, 7)  # {1, 2, 8} in 1-based numbering
path = path_points(chain, J)
print(export.path_csv(path))

# %%
ls = ls_chain_of(chain, J)
print("weights", ls.weights, "times", ls.times)
print("valid:", validate_ls_chain(chain, ls).ok, "endpoint", ls.endpoint())

# %%
# The same points in matplotlib, if available:
# import matplotlib.pyplot as plt
# xs, ys = zip(*[(float(x), float(y)) for x, y in path.points]); plt.plot(xs, ys); plt.show()
