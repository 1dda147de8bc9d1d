"""
JSON Interface

Transition graphs and limit structures as canonical JSON documents:
configurations as text, edges sorted, keys in a fixed order.

This file is part of Updatron.

Updatron is free software: you can redistribute it and/or modify
it under the terms of the GNU General Public License as published by
the Free Software Foundation, either version 3 of the License, or
(at your option) any later version.

Updatron is distributed in the hope that it will be useful,
but WITHOUT ANY WARRANTY; without even the implied warranty of
MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
GNU General Public License for more details.

You should have received a copy of the GNU General Public License
along with Updatron. If not, see <https://www.gnu.org/licenses/>.
"""

from __future__ import annotations

__license__ = "GPLv3"
__version__ = "1.0"

import json

from updatron.bnio.configuration import ConfigSet, config_to_text
from updatron.dynamics import LimitStructure, TransitionGraph


def graph_document(g: TransitionGraph, loops: bool = True) -> dict:
    edges = sorted([config_to_text(x, g.n), config_to_text(y, g.n)] for x, y in g.edges if loops or x != y)
    return {
        "n": g.n,
        "automata": list(g.names),
        "mode": g.mode,
        "edges": edges
    }


def limit_structure_document(g: TransitionGraph, structure: LimitStructure) -> dict:
    limit_sets = []
    for limit_set in structure:
        limit_sets.append({
            "kind": limit_set.kind,
            "configurations": limit_set.configurations.texts(),
            "attractor": limit_set.attractor,
            "basin": limit_set.basin.texts() if limit_set.basin is not None else None
        })

    return {
        "n": g.n,
        "automata": list(g.names),
        "mode": g.mode,
        "limit_sets": limit_sets
    }


def export_configurations(configurations: ConfigSet) -> str:
    return json.dumps(configurations.texts())


def export_json(g: TransitionGraph, loops: bool = True) -> str:
    """ {"n", "automata", "mode", "edges"} with lexicographically sorted edges.
    """
    return json.dumps(graph_document(g, loops), indent=2)


def export_limit_structure(g: TransitionGraph, structure: LimitStructure) -> str:
    return json.dumps(limit_structure_document(g, structure), indent=2)
