"""
Graphviz Interface

Transition graphs and limit structures as DOT text, to be laid out by
Graphviz (`dot -Tpdf`).

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

from typing import Iterator, Optional

from updatron.bnio.configuration import config_to_text
from updatron.dynamics import LimitStructure, TransitionGraph

LIMIT_CYCLE_COLOR = "grey60"
FIXED_POINT_COLOR = "grey85"


def _gvquote(s: str) -> str:
    return '"{}"'.format(s.replace('"', r'\"'))


def graphviz(g: TransitionGraph, loops: bool = True, structure: Optional[LimitStructure] = None) -> Iterator[str]:
    """ DOT text of a transition graph, as an iterable of lines.

    Parameters
    ----------
    g : TransitionGraph
        Transition graph.
    loops : bool, optional
        Emit self-loops.
    structure : LimitStructure, optional
        Limit sets to shade (limit cycles darker than fixed points).
    """
    shading = {}
    if structure is not None:
        for limit_set in structure:
            color = FIXED_POINT_COLOR if limit_set.kind == "fixed point" else LIMIT_CYCLE_COLOR
            for x in limit_set.configurations:
                shading[x] = color

    yield "digraph {\n"
    yield "  label={};\n".format(_gvquote(g.mode))
    for x in range(1 << g.n):
        attributes = ""
        if x in shading:
            attributes = ' [style="filled" fillcolor="{}"]'.format(shading[x])
        yield "  {}{};\n".format(_gvquote(config_to_text(x, g.n)), attributes)

    for x, y in sorted(g.edges):
        if x == y and not loops:
            continue
        yield "  {} -> {};\n".format(_gvquote(config_to_text(x, g.n)), _gvquote(config_to_text(y, g.n)))
    yield "}\n"


def export_dot(g: TransitionGraph, loops: bool = True, structure: Optional[LimitStructure] = None) -> str:
    return ''.join(graphviz(g, loops, structure))
