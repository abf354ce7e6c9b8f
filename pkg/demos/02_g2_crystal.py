"""
The 14-dimensional G2 crystal
=============================

Build the chain for omega2, list the admissible subsets, walk the root
operators and audit the crystal axioms.
"""

# %%
from lambdachain import build_crystal_graph, lex_lambda_chain, root_system, stembridge_audit
from lambdachain import export

g2 = root_system("G2")
chain = lex_lambda_chain(g2, (0, 1))
print(export.chain_text(chain))

# %%
graph = build_crystal_graph(chain)
print(len(graph), "nodes")
for J, node in graph.nodes.items():
    print(sorted(j + 1 for j in J), node.weight, "eps", node.eps, "delta", node.delta)

# %%
# Edges J --p--> F_p(J); colors printed 1-based.
for s, d, p in graph.edges:
    print(sorted(j + 1 for j in s), f"-F{p + 1}->", sorted(j + 1 for j in d))

# %%
print(stembridge_audit(graph))

# %%
# Graphviz source; render with `dot -Tsvg`.
print(export.crystal_dot(graph)[:400], "...")
