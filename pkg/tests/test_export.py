import csv
import io
import json
from collections import Counter
from fractions import Fraction

from lambdachain import build_crystal_graph, folding_of, g_alpha_samples, lex_lambda_chain, path_points, root_system
from lambdachain import export


def g2_chain():
    return lex_lambda_chain(root_system("G2"), (0, 1))


def test_rationals():
    assert export.fmt_rational(Fraction(-3, 6)) == "-1/2"
    assert export.fmt_rational(4) == "4"
    assert export.fmt_weight((Fraction(1, 3), 0)) == "1/3,0"


def test_chain_json_is_one_based():
    data = json.loads(export.chain_json(g2_chain()))
    assert data["chain"][0] == {"position": 1, "root": [0, 1], "k": 0, "initialLevel": 0}
    assert data["chain"][-1]["position"] == 10 and data["chain"][-1]["k"] == 2


def test_crystal_dot():
    text = export.crystal_dot(build_crystal_graph(g2_chain()))
    assert text.startswith("digraph crystal {")
    assert text.count("->") == len(build_crystal_graph(g2_chain()).edges)
    assert 'n0 [label="{} | (0,1)"];' in text
    assert "color=2" in text and "color=1" in text
    assert text == export.crystal_dot(build_crystal_graph(g2_chain()))


def test_crystal_json_round_trip():
    data = json.loads(export.crystal_json(build_crystal_graph(g2_chain())))
    assert len(data["nodes"]) == 14
    assert data["nodes"][0]["J"] == [] and data["nodes"][1]["J"] == [1]
    assert {e["color"] for e in data["edges"]} == {1, 2}


def test_character_outputs():
    ch = Counter({(1, 0): 1, (-1, 1): 1, (0, -1): 1})
    assert export.character_table(ch) == "1,0 : 1\n0,-1 : 1\n-1,1 : 1\ndimension 3\n"
    data = json.loads(export.character_json(ch))
    assert data["dimension"] == 3 and data["weights"][0] == {"coords": ["1", "0"], "mult": 1}


def test_path_csv():
    chain = lex_lambda_chain(root_system("A2"), (1, 0))
    rows = list(csv.reader(io.StringIO(export.path_csv(path_points(chain, (0,))))))
    assert rows[0] == ["index", "w1", "w2"]
    assert rows[2] == ["1", "1/3", "1/3"]
    assert len(rows) == 1 + 7
    assert json.loads(export.path_json(path_points(chain, (0,))))["J"] == [1]


def test_folding_exports():
    chain = g2_chain()
    f = folding_of(chain, (0, 1))
    data = json.loads(export.folding_json(f))
    assert data["J"] == [1, 2] and data["entries"][0]["sign"] == -1
    rows = export.g_alpha_csv(g_alpha_samples(f, (0, 1))).splitlines()
    assert rows[0] == "x,g" and rows[1] == "0,-1/2"
