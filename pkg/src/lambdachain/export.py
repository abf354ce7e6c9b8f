"""Text, JSON, DOT and CSV renderings. Positions and colors are printed 1-based."""

from __future__ import annotations

import csv
import io
import json
from fractions import Fraction

__all__ = [
    "character_json",
    "character_table",
    "chain_json",
    "chain_text",
    "crystal_dot",
    "crystal_json",
    "crystal_text",
    "decomposition_table",
    "folding_json",
    "fmt_rational",
    "fmt_weight",
    "g_alpha_csv",
    "path_csv",
    "path_json",
]


def fmt_rational(x):
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def fmt_weight(mu):
    return ",".join(fmt_rational(x) for x in mu)


def _one_based(J):
    return [j + 1 for j in J]


def _subset_label(J):
    return "{" + ",".join(str(j) for j in _one_based(J)) + "}"


def _dumps(obj):
    return json.dumps(obj, indent=2, sort_keys=False) + "\n"


def chain_json(chain):
    entries = [
        {"position": i + 1, "root": list(chain.root(i)), "k": k, "initialLevel": k}
        for i, k in enumerate(chain.initial_levels)
    ]
    return _dumps({"lambda": [fmt_rational(x) for x in chain.lam], "chain": entries})


def chain_text(chain):
    lines = [f"lambda = ({fmt_weight(chain.lam)}), length {len(chain)}"]
    for i, k in enumerate(chain.initial_levels):
        lines.append(f"{i + 1:>4}  root ({','.join(map(str, chain.root(i)))})  k={k}")
    return "\n".join(lines) + "\n"


def folding_json(f):
    rs = f.system
    entries = [
        {"position": i + 1, "gamma": list(rs.roots[g]), "sign": s, "level": l}
        for i, (g, s, l) in enumerate(zip(f.gammas, f.signs, f.levels))
    ]
    return _dumps({"J": _one_based(f.J), "entries": entries, "gammaInf": [fmt_rational(x) for x in f.gamma_inf]})


def g_alpha_csv(samples):
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["x", "g"])
    for x, y in samples.points:
        w.writerow([fmt_rational(x), fmt_rational(y)])
    return buf.getvalue()


def _sorted_items(counter):
    return sorted(counter.items(), key=lambda kv: tuple(-Fraction(x) for x in kv[0]))


def character_table(counter):
    """Rows ``coords : mult`` (highest coordinates first) and a final dimension line."""
    lines = [f"{fmt_weight(mu)} : {m}" for mu, m in _sorted_items(counter)]
    lines.append(f"dimension {sum(counter.values())}")
    return "\n".join(lines) + "\n"


def character_json(counter):
    weights = [{"coords": [fmt_rational(x) for x in mu], "mult": m} for mu, m in _sorted_items(counter)]
    return _dumps({"weights": weights, "dimension": sum(counter.values())})


def decomposition_table(counter, dims=None):
    lines = []
    for mu, m in _sorted_items(counter):
        extra = f"  (dim {dims[mu]})" if dims else ""
        lines.append(f"{fmt_weight(mu)} : {m}{extra}")
    return "\n".join(lines) + "\n"


def crystal_json(graph):
    nodes = [
        {
            "J": _one_based(k),
            "weight": [fmt_rational(x) for x in n.weight],
            "eps": list(n.eps),
            "delta": list(n.delta),
        }
        for k, n in graph.nodes.items()
    ]
    edges = [{"from": _one_based(s), "to": _one_based(d), "color": p + 1} for s, d, p in graph.edges]
    return _dumps({"nodes": nodes, "edges": edges})


def crystal_text(graph):
    lines = [f"{len(graph.nodes)} nodes, {len(graph.edges)} edges"]
    for k, n in graph.nodes.items():
        lines.append(f"{_subset_label(k)}  mu=({fmt_weight(n.weight)})")
    for s, d, p in graph.edges:
        lines.append(f"{_subset_label(s)} -F{p + 1}-> {_subset_label(d)}")
    return "\n".join(lines) + "\n"


def crystal_dot(graph):
    ids = {k: f"n{i}" for i, k in enumerate(graph.nodes)}
    lines = ["digraph crystal {", "  edge [colorscheme=set19];"]
    for k, n in graph.nodes.items():
        label = f"{_subset_label(k)} | ({fmt_weight(n.weight)})"
        lines.append(f'  {ids[k]} [label="{label}"];')
    for s, d, p in graph.edges:
        lines.append(f'  {ids[s]} -> {ids[d]} [color={p + 1}, label="{p + 1}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def path_csv(path):
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    r = len(path.points[0])
    w.writerow(["index"] + [f"w{q + 1}" for q in range(r)])
    for n, pt in enumerate(path.points):
        w.writerow([n] + [fmt_rational(x) for x in pt])
    return buf.getvalue()


def path_json(path):
    return _dumps(
        {
            "J": _one_based(path.J),
            "h": path.h,
            "points": [[fmt_rational(x) for x in pt] for pt in path.points],
        }
    )
