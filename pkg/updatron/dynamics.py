"""
Dynamics Module

Whole-space transition graphs of a Boolean network under an updating
mode, and their limit structure: fixed points, limit cycles, attractors,
basins, reachability and cross-mode comparison.

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

import logging as log
from collections import deque
from dataclasses import dataclass, field
from typing import Optional, Sequence

import networkx as nx
import numpy as np

from updatron.bnio.configuration import ConfigSet, config_to_text
from updatron.bnio.modes import ModeSpec
from updatron.bnio.network import BooleanNetwork
from updatron.exceptions import DimensionError, ModeError
from updatron.updates.interval import interval_update
from updatron.updates.memory import memory_set_update, memory_update
from updatron.updates.most_permissive import mp_update
from updatron.updates.set_updates import SetUpdate, delta, elementary_update, fully_asynchronous_update, schedule_update

Edge = tuple[int, int]


class TransitionGraph:
    """ Transition graph of (f, mode).

    Attributes
    ----------
    n : int
        Dimension.
    edges : frozenset of (int, int)
        Transitions (x, y), as configuration codes.
    mode : str
        Canonical mode string of the provenance.
    names : tuple of str
        Automaton names.
    graph : networkx.DiGraph
        Same graph, with every configuration as a node.
    """

    def __init__(self, n: int, edges: frozenset[Edge], mode: str = "", names: Optional[Sequence[str]] = None) -> None:
        """ Initializer.

        Raises
        ------
        DimensionError
            Edge endpoint outside B^n.
        """
        size = 1 << n
        if any(not (0 <= x < size and 0 <= y < size) for x, y in edges):
            raise DimensionError("edge endpoint outside dimension {}".format(n))

        self.n: int = n
        self.edges: frozenset[Edge] = frozenset(edges)
        self.mode: str = mode
        self.names: tuple[str, ...] = tuple(names) if names is not None else tuple("x{}".format(i) for i in range(1, n + 1))

        self.graph: nx.DiGraph = nx.DiGraph()
        self.graph.add_nodes_from(range(size))
        self.graph.add_edges_from(self.edges)

        self._successors: dict[int, list[int]] = {x: [] for x in range(size)}
        for x, y in sorted(self.edges):
            self._successors[x].append(y)

    def __str__(self) -> str:
        return '\n'.join("{} -> {}".format(config_to_text(x, self.n), config_to_text(y, self.n)) for x, y in sorted(self.edges))

    def successors(self, x: int) -> list[int]:
        """ Successors of `x`, in ascending order.
        """
        return self._successors[x]

    def is_deterministic(self) -> bool:
        """ Out-degree at most one everywhere.
        """
        return all(len(successors) <= 1 for successors in self._successors.values())

    def non_loop_edges(self) -> frozenset[Edge]:
        return frozenset((x, y) for x, y in self.edges if x != y)


@dataclass
class LimitSet:
    """ Terminal strongly connected component.

    Attributes
    ----------
    configurations : ConfigSet
        Limit configurations.
    attractor : bool
        Reached from some transient configuration.
    basin : ConfigSet, optional
        Transient configurations reaching every member, for attractors.
    """
    configurations: ConfigSet
    attractor: bool = False
    basin: Optional[ConfigSet] = None

    @property
    def kind(self) -> str:
        return "fixed point" if len(self.configurations) == 1 else "limit cycle"

    def __str__(self) -> str:
        text = "{} {}".format(self.kind, self.configurations)
        if self.attractor:
            text += " attractor, basin {}".format(self.basin)
        return text


@dataclass
class LimitStructure:
    """ Limit sets of a transition graph, ordered by smallest member.
    """
    limit_sets: list[LimitSet] = field(default_factory=list)

    def __iter__(self):
        return iter(self.limit_sets)

    def __len__(self) -> int:
        return len(self.limit_sets)

    def __str__(self) -> str:
        return '\n'.join(map(str, self.limit_sets))

    def attractors(self) -> list[LimitSet]:
        return [limit_set for limit_set in self.limit_sets if limit_set.attractor]

    def limit_configurations(self) -> set[int]:
        return {x for limit_set in self.limit_sets for x in limit_set.configurations}


@dataclass
class Comparison:
    """ Edge-set comparison of two transition graphs.

    Attributes
    ----------
    relation : str
        One of equal, subset, superset, incomparable (first graph against second).
    only_first : frozenset of (int, int)
        Edges of the first graph only.
    only_second : frozenset of (int, int)
        Edges of the second graph only.
    """
    relation: str
    only_first: frozenset[Edge]
    only_second: frozenset[Edge]


def mode_update(net: BooleanNetwork, mode: ModeSpec, mp_cap: Optional[int] = None) -> SetUpdate:
    """ Set update realizing an updating mode on `net`.

    Raises
    ------
    ModeError
        Invalid mode parameters.
    CapExceededError
        Dimension above the MP cap.
    """
    mode.validate(net.n)

    if mode.deterministic:
        return schedule_update(net, mode.schedule_for(net.n), str(mode))

    if mode.kind == 'fully-async':
        return fully_asynchronous_update(net)

    if mode.kind == 'async':
        return elementary_update(net)

    if mode.kind == 'memory':
        return memory_set_update(net, mode.memory)

    if mode.kind == 'memory-vector':
        return memory_update(net, mode.memory)

    if mode.kind == 'interval':
        return interval_update(net)

    if mode.kind == 'mp':
        return mp_update(net, mp_cap)

    raise ModeError("unknown mode kind '{}'".format(mode.kind))


def build_graph(net: BooleanNetwork, mode: ModeSpec, cap: Optional[int] = None, mp_cap: Optional[int] = None) -> TransitionGraph:
    """ Transition graph of (net, mode).

    Parameters
    ----------
    net : BooleanNetwork
        Boolean network.
    mode : ModeSpec
        Updating mode.
    cap : int, optional
        Dimension cap, defaults to the network cap.
    mp_cap : int, optional
        Dimension cap of the most permissive mode.

    Returns
    -------
    TransitionGraph
        Graph whose edges are the transitions of the mode's set update.

    Raises
    ------
    CapExceededError
        Dimension above the cap.
    ModeError
        Invalid mode parameters.
    """
    net.check_cap(cap)
    update = mode_update(net, mode, mp_cap)

    edges = delta(update, net.cap if cap is None else cap)
    log.info("{} graph built: {} configurations, {} edges".format(mode, 1 << net.n, len(edges)))

    return TransitionGraph(net.n, edges, str(mode), net.names)


def successors(g: TransitionGraph, x: int) -> ConfigSet:
    return ConfigSet(g.n, g.successors(x))


def fixed_points(net: BooleanNetwork) -> ConfigSet:
    """ {x | f(x) = x}.

    Raises
    ------
    CapExceededError
        Dimension above the cap.
    """
    net.check_cap()
    codes = np.flatnonzero(net.images == np.arange(1 << net.n))
    return ConfigSet(net.n, (int(x) for x in codes))


def limit_sets(g: TransitionGraph) -> LimitStructure:
    """ Terminal strongly connected components, with attractors and basins.
    """
    components = sorted((sorted(component) for component in nx.attracting_components(g.graph)), key=lambda component: component[0])
    limit_configurations = {x for component in components for x in component}

    structure = LimitStructure()
    for component in components:
        members = set(component)
        attractor = any(x not in members for y in component for x in g.graph.predecessors(y))

        basin = None
        if attractor:
            basin = ConfigSet(g.n, nx.ancestors(g.graph, component[0]) - limit_configurations)

        structure.limit_sets.append(LimitSet(ConfigSet(g.n, component), attractor, basin))

    log.info("{} limit sets, {} attractors".format(len(structure), len(structure.attractors())))
    return structure


def attractors(g: TransitionGraph) -> list[LimitSet]:
    return limit_sets(g).attractors()


def basin(g: TransitionGraph, limit_set: ConfigSet) -> ConfigSet:
    """ Basin of attraction of an attractor.

    Raises
    ------
    ValueError
        `limit_set` is not an attractor of `g`.
    """
    for attractor in attractors(g):
        if attractor.configurations == limit_set:
            return attractor.basin

    raise ValueError("{} is not an attractor".format(limit_set))


def reachable(g: TransitionGraph, x: int, y: int) -> tuple[bool, list[int]]:
    """ x ->* y, with a shortest witness path.

    Note
    ----
    Breadth-first search visiting successors in ascending order, so the
    witness is the smallest shortest path in that order.

    Returns
    -------
    bool, list of int
        Reachability and the witness path from `x` to `y` (empty if
        unreachable, [x] if x = y).

    Raises
    ------
    DimensionError
        Configuration outside B^n.
    """
    size = 1 << g.n
    if not (0 <= x < size and 0 <= y < size):
        raise DimensionError("configuration outside dimension {}".format(g.n))

    parents = {x: None}
    queue = deque([x])
    while queue:
        current = queue.popleft()
        if current == y:
            path = []
            while current is not None:
                path.append(current)
                current = parents[current]
            return True, path[::-1]

        for successor in g.successors(current):
            if successor not in parents:
                parents[successor] = current
                queue.append(successor)

    return False, []


def forward_closure(g: TransitionGraph, x: int) -> ConfigSet:
    """ {y | x ->* y}.
    """
    return ConfigSet(g.n, nx.descendants(g.graph, x) | {x})


def compare(first: TransitionGraph, second: TransitionGraph, loops: bool = True) -> Comparison:
    """ Compare the edge sets of two transition graphs.

    Parameters
    ----------
    first, second : TransitionGraph
        Transition graphs.
    loops : bool, optional
        Compare self-loops too.

    Raises
    ------
    DimensionError
        Dimension mismatch.
    """
    if first.n != second.n:
        raise DimensionError("dimension mismatch: {} and {}".format(first.n, second.n))

    edges_first = first.edges if loops else first.non_loop_edges()
    edges_second = second.edges if loops else second.non_loop_edges()

    only_first, only_second = edges_first - edges_second, edges_second - edges_first

    if not only_first and not only_second:
        relation = 'equal'
    elif not only_first:
        relation = 'subset'
    elif not only_second:
        relation = 'superset'
    else:
        relation = 'incomparable'

    return Comparison(relation, only_first, only_second)


def preserves_fixed_points(net: BooleanNetwork, g: TransitionGraph) -> bool:
    """ Every fixed point of f has its self-loop as only transition in `g`.
    """
    return all(g.successors(x) == [x] for x in fixed_points(net))
