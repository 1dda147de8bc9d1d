"""
Tests of the DOT and JSON exports.
"""

from __future__ import annotations

import json

from updatron.bnio.modes import parse_mode
from updatron.dynamics import TransitionGraph, build_graph, limit_sets
from updatron.interfaces.dot import export_dot
from updatron.interfaces.jsonio import export_json, export_limit_structure


def test_dot(example1):
    g = build_graph(example1, parse_mode("parallel"))
    lines = export_dot(g).splitlines()

    assert lines[0] == "digraph {"
    assert lines[-1] == "}"
    assert sum(1 for line in lines if "->" in line) == 8
    assert sum(1 for line in lines if line.startswith('  "') and "->" not in line) == 8
    assert '  "000" -> "101";' in lines


def test_dot_without_loops(example1):
    g = build_graph(example1, parse_mode("parallel"))
    dot = export_dot(g, loops=False)

    assert dot.count("->") == 6
    assert '"100" -> "100"' not in dot


def test_dot_shading(example1):
    g = build_graph(example1, parse_mode("parallel"))
    dot = export_dot(g, structure=limit_sets(g))

    assert '  "100" [style="filled" fillcolor="grey85"];' in dot
    assert '  "000" [style="filled" fillcolor="grey60"];' in dot
    assert '  "110";' in dot


def test_dot_nodes_only():
    dot = export_dot(TransitionGraph(2, frozenset(), "synthetic"))

    assert "->" not in dot
    assert dot.count('  "') == 4


def test_json(example1):
    g = build_graph(example1, parse_mode("parallel"))
    document = json.loads(export_json(g))

    assert document["n"] == 3
    assert document["automata"] == ["x1", "x2", "x3"]
    assert document["mode"] == "parallel"
    assert document["edges"] == [["000", "101"], ["001", "011"], ["010", "101"], ["011", "011"],
                                 ["100", "100"], ["101", "000"], ["110", "100"], ["111", "000"]]


def test_json_is_stable(example1):
    first = export_json(build_graph(example1, parse_mode("interval")))
    second = export_json(build_graph(example1, parse_mode("interval")))

    assert first == second
    edges = json.loads(first)["edges"]
    assert edges == sorted(edges)


def test_json_without_loops(example1):
    document = json.loads(export_json(build_graph(example1, parse_mode("memory:{1}")), loops=False))
    assert ["100", "100"] not in document["edges"]
    assert ["101", "000"] in document["edges"]


def test_limit_structure_json(example1):
    g = build_graph(example1, parse_mode("parallel"))
    document = json.loads(export_limit_structure(g, limit_sets(g)))

    assert document["limit_sets"][0] == {"kind": "limit cycle", "configurations": ["000", "101"], "attractor": True, "basin": ["010", "111"]}
    assert [limit_set["configurations"] for limit_set in document["limit_sets"]] == [["000", "101"], ["011"], ["100"]]
