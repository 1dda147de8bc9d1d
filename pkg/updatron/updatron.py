#!/usr/bin/env python3

"""
Updatron: Updating Modes of Boolean Networks

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

import argparse
import logging as log
import sys
from time import time
from typing import Optional, Sequence

from updatron.bnio.configuration import ConfigSet, config_from_text, config_to_text, mask_of
from updatron.bnio.modes import parse_mode, split_modes
from updatron.bnio.network import DIMENSION_CAP, BooleanNetwork
from updatron.checks import run_checks
from updatron.dynamics import build_graph, compare, limit_sets, mode_update, reachable
from updatron.exceptions import ModeError
from updatron.interfaces.dot import export_dot
from updatron.interfaces.jsonio import export_configurations, export_json, export_limit_structure
from updatron.updates.deterministic import phi_mask
from updatron.updates.most_permissive import MP_DIMENSION_CAP
from updatron.updates.set_updates import iterate_k

EXIT_SUCCESS = 0
EXIT_NO = 1
EXIT_ERROR = 2


def parse_automata(text: str, n: int) -> int:
    """ Mask of an automata list written `1,2`, `{1,2}` or `{}`.
    """
    content = text.strip().strip('{}').strip()
    if not content:
        return 0

    try:
        indices = [int(element) for element in content.split(',')]
    except ValueError:
        raise ModeError("malformed automata list '{}'".format(text)) from None

    return mask_of(indices, n)


def hamming_order(x: int, configurations: ConfigSet) -> list[int]:
    """ Configurations by Hamming distance from `x`, ties by ascending code.
    """
    return sorted(configurations, key=lambda y: ((x ^ y).bit_count(), y))


def truth_table(net: BooleanNetwork, phis: Sequence[str]) -> str:
    """ Table of f_i(x) and phi_W(x) for every configuration x.
    """
    masks = [parse_automata(w, net.n) for w in phis]
    header = ["x"] + ["f_{}".format(name) for name in net.names] + ["phi_{{{}}}".format(w.strip().strip('{}')) for w in phis]

    lines = [' '.join(header)]
    for x in range(1 << net.n):
        row = [config_to_text(x, net.n)]
        row += [str(int(net.local(i, x))) for i in range(1, net.n + 1)]
        row += [config_to_text(phi_mask(net, mask, x), net.n) for mask in masks]
        lines.append(' '.join(row))

    return '\n'.join(lines)


def command_table(net: BooleanNetwork, results: argparse.Namespace) -> int:
    print(truth_table(net, results.phi or []))
    return EXIT_SUCCESS


def command_step(net: BooleanNetwork, results: argparse.Namespace) -> int:
    mode = parse_mode(results.mode)
    x = config_from_text(results.source, net.n)

    update = mode_update(net, mode, results.mp_cap)
    image = iterate_k(update, ConfigSet.singleton(x, net.n), results.steps)

    if results.format == 'json':
        print(export_configurations(image))
    else:
        print(' '.join(config_to_text(y, net.n) for y in hamming_order(x, image)))
    return EXIT_SUCCESS


def command_graph(net: BooleanNetwork, results: argparse.Namespace) -> int:
    g = build_graph(net, parse_mode(results.mode), results.cap, results.mp_cap)
    loops = not results.no_loops

    if results.format == 'dot':
        print(export_dot(g, loops, limit_sets(g)), end='')
    elif results.format == 'json':
        print(export_json(g, loops))
    else:
        for x, y in sorted(g.edges):
            if loops or x != y:
                print("{} -> {}".format(config_to_text(x, net.n), config_to_text(y, net.n)))
    return EXIT_SUCCESS


def command_attractors(net: BooleanNetwork, results: argparse.Namespace) -> int:
    g = build_graph(net, parse_mode(results.mode), results.cap, results.mp_cap)
    structure = limit_sets(g)

    if results.format == 'json':
        print(export_limit_structure(g, structure))
    else:
        for limit_set in structure:
            print(limit_set)
    return EXIT_SUCCESS


def command_reach(net: BooleanNetwork, results: argparse.Namespace) -> int:
    g = build_graph(net, parse_mode(results.mode), results.cap, results.mp_cap)
    x, y = config_from_text(results.source, net.n), config_from_text(results.target, net.n)

    answer, path = reachable(g, x, y)
    print("yes" if answer else "no")
    if answer and x != y:
        print(' '.join(config_to_text(z, net.n) for z in path))

    return EXIT_NO if results.fail_on_no and not answer else EXIT_SUCCESS


def command_compare(net: BooleanNetwork, results: argparse.Namespace) -> int:
    modes = [parse_mode(mode) for mode in split_modes(results.modes)]
    if len(modes) != 2:
        raise ModeError("expected two modes, got {}".format(len(modes)))

    first, second = (build_graph(net, mode, results.cap, results.mp_cap) for mode in modes)
    comparison = compare(first, second, loops=not results.no_loops)

    print("{} {} {}".format(modes[0], comparison.relation, modes[1]))
    for mode, edges in ((modes[0], comparison.only_first), (modes[1], comparison.only_second)):
        if edges:
            print("only in {}: {}".format(mode, ' '.join("{}->{}".format(config_to_text(x, net.n), config_to_text(y, net.n)) for x, y in sorted(edges))))

    return EXIT_NO if results.fail_on_no and comparison.relation != 'equal' else EXIT_SUCCESS


def command_check(net: BooleanNetwork, results: argparse.Namespace) -> int:
    checks = run_checks(net, results.cap, results.mp_cap)
    for result in checks:
        print(result)

    failed = any(not result.holds for result in checks if not result.observation)
    return EXIT_NO if results.fail_on_no and failed else EXIT_SUCCESS


COMMANDS = {
    'table': command_table,
    'step': command_step,
    'graph': command_graph,
    'attractors': command_attractors,
    'reach': command_reach,
    'compare': command_compare,
    'check': command_check
}


def arguments_parser() -> argparse.ArgumentParser:
    """ Arguments parser with one subparser per command.
    """
    common = argparse.ArgumentParser(add_help=False)

    common.add_argument('model',
                        metavar='model',
                        type=str,
                        help='path to the Boolean network (.bn format)')

    common.add_argument('-v', '--verbose',
                        action='store_true',
                        help="increase output verbosity")

    common.add_argument('--show-time',
                        action='store_true',
                        help="show the execution time")

    common.add_argument('--cap',
                        type=int,
                        default=DIMENSION_CAP,
                        help="dimension cap of whole-space operations (default: %(default)s)")

    common.add_argument('--mp-cap',
                        type=int,
                        default=MP_DIMENSION_CAP,
                        help="dimension cap of the most permissive mode (default: %(default)s)")

    common.add_argument('--format',
                        choices=['text', 'dot', 'json'],
                        default='text',
                        help="output format (default: %(default)s)")

    common.add_argument('--no-loops',
                        action='store_true',
                        help="omit self-loops")

    common.add_argument('--fail-on-no',
                        action='store_true',
                        help="exit with code 1 on a negative answer")

    parser = argparse.ArgumentParser(description='Updatron - Updating Modes of Boolean Networks')

    parser.add_argument('--version',
                        action='version',
                        version='%(prog)s 1.0',
                        help="show the version number and exit")

    subparsers = parser.add_subparsers(dest='command', required=True)

    table = subparsers.add_parser('table', parents=[common], help="truth table with elementary updates")
    table.add_argument('--phi', metavar='W', action='append', help="add a phi_W column (`1,2`, `{}` for the empty set)")

    step = subparsers.add_parser('step', parents=[common], help="successors of a configuration")
    step.add_argument('-m', '--mode', required=True, help="updating mode")
    step.add_argument('--from', dest='source', required=True, help="source configuration")
    step.add_argument('--steps', type=int, default=1, help="number of set update iterations (default: %(default)s)")

    graph = subparsers.add_parser('graph', parents=[common], help="transition graph")
    graph.add_argument('-m', '--mode', required=True, help="updating mode")

    attractors = subparsers.add_parser('attractors', parents=[common], help="limit sets, attractors and basins")
    attractors.add_argument('-m', '--mode', required=True, help="updating mode")

    reach = subparsers.add_parser('reach', parents=[common], help="reachability with a witness path")
    reach.add_argument('-m', '--mode', required=True, help="updating mode")
    reach.add_argument('--from', dest='source', required=True, help="source configuration")
    reach.add_argument('--to', dest='target', required=True, help="target configuration")

    compare_modes = subparsers.add_parser('compare', parents=[common], help="compare the transition graphs of two modes")
    compare_modes.add_argument('--modes', required=True, help="two comma-separated updating modes")

    subparsers.add_parser('check', parents=[common], help="run the property suite")

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    """ Main function.
    """
    # Start time
    start_time = time()

    results = arguments_parser().parse_args(argv)

    # Set the verbose level
    if results.verbose:
        log.basicConfig(format="%(message)s", level=log.DEBUG)
    else:
        log.basicConfig(format="%(message)s", level=log.WARNING)

    try:
        net = BooleanNetwork.from_file(results.model, cap=results.cap)
        log.info("Boolean network:")
        log.info("----------------")
        log.info(net)
        log.info("")

        code = COMMANDS[results.command](net, results)

    except (ValueError, FileNotFoundError) as e:
        print("error: {}".format(e), file=sys.stderr)
        return EXIT_ERROR

    if results.show_time:
        print()
        print("# Total time:", time() - start_time)

    return code


if __name__ == '__main__':
    sys.exit(main())
