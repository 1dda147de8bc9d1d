"""
Updating Mode Module

Mode strings:
    parallel | fully-async | async | interval | mp
    seq:i1,i2,...               sequential (permutation of 1..n)
    bs:{a,b};{c};...            block-sequential (ordered partition of 1..n)
    periodic:{a};{b,c};...      periodic schedule (any non-empty blocks)
    memory:{i,j}                memory set Mb
    memory-vector:m1,m2,...     memory vector M

Automaton indices are 1-based.

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

import re
from dataclasses import dataclass
from typing import Optional

from updatron.exceptions import ModeError
from updatron.updates.deterministic import Schedule

DETERMINISTIC_KINDS = {'parallel', 'sequential', 'block-sequential', 'periodic'}

KEYWORD_TO_KIND = {
    'parallel': 'parallel',
    'fully-async': 'fully-async',
    'async': 'async',
    'interval': 'interval',
    'mp': 'mp',
    'seq': 'sequential',
    'bs': 'block-sequential',
    'periodic': 'periodic',
    'memory': 'memory',
    'memory-vector': 'memory-vector'
}

PARAMETERIZED_KINDS = {'sequential', 'block-sequential', 'periodic', 'memory', 'memory-vector'}

BLOCK = re.compile(r'\{([^{}]*)\}')


@dataclass(frozen=True)
class ModeSpec:
    """ Updating mode.

    Attributes
    ----------
    kind : str
        One of parallel, sequential, block-sequential, periodic,
        fully-async, async, memory, memory-vector, interval, mp.
    schedule : Schedule, optional
        Blocks of the deterministic modes other than parallel.
    memory : tuple of int, optional
        Memory vector (memory-vector) or sorted memory set (memory).
    """
    kind: str
    schedule: Optional[Schedule] = None
    memory: Optional[tuple[int, ...]] = None

    @property
    def deterministic(self) -> bool:
        return self.kind in DETERMINISTIC_KINDS

    def schedule_for(self, n: int) -> Schedule:
        """ Schedule of a deterministic mode in dimension `n`.
        """
        if self.kind == 'parallel':
            return Schedule.parallel(n)
        if self.schedule is None:
            raise ModeError("mode '{}' has no schedule".format(self))
        return self.schedule

    def validate(self, n: int) -> None:
        """ Check the mode parameters against dimension `n`.

        Raises
        ------
        ModeError
            Invalid parameters.
        """
        if self.deterministic:
            self.schedule_for(n).validate(n)

        elif self.kind == 'memory':
            if any(not 1 <= i <= n for i in self.memory):
                raise ModeError("memory set {} not within 1..{}".format(self.memory, n))

        elif self.kind == 'memory-vector':
            if len(self.memory) != n:
                raise ModeError("memory vector of length {}, expected {}".format(len(self.memory), n))

    def __str__(self) -> str:
        """ Canonical mode string.
        """
        if self.kind == 'sequential':
            return "seq:{}".format(','.join(str(min(block)) for block in self.schedule.blocks))

        if self.kind in ('block-sequential', 'periodic'):
            keyword = 'bs' if self.kind == 'block-sequential' else 'periodic'
            return "{}:{}".format(keyword, ';'.join("{{{}}}".format(','.join(map(str, sorted(block)))) for block in self.schedule.blocks))

        if self.kind == 'memory':
            return "memory:{{{}}}".format(','.join(map(str, self.memory)))

        if self.kind == 'memory-vector':
            return "memory-vector:{}".format(','.join(map(str, self.memory)))

        return self.kind


def _parse_integers(content: str, mode: str) -> list[int]:
    content = content.strip()
    if not content:
        return []

    try:
        return [int(element) for element in content.split(',')]
    except ValueError:
        raise ModeError("malformed parameters in mode '{}'".format(mode)) from None


def _parse_blocks(content: str, mode: str) -> list[list[int]]:
    blocks = []
    for element in content.split(';'):
        match = BLOCK.fullmatch(element.strip())
        if not match:
            raise ModeError("malformed block '{}' in mode '{}'".format(element, mode))
        blocks.append(_parse_integers(match.group(1), mode))
    return blocks


def parse_mode(text: str) -> ModeSpec:
    """ Mode string parser.

    Parameters
    ----------
    text : str
        Mode string.

    Returns
    -------
    ModeSpec
        Parsed updating mode.

    Raises
    ------
    ModeError
        Unknown mode, malformed parameters, blocks that are not a partition
        (bs) or a sequence that is not a permutation (seq).
    """
    mode = ''.join(text.split())
    keyword, colon, parameters = mode.partition(':')

    kind = KEYWORD_TO_KIND.get(keyword)
    if kind is None:
        raise ModeError("unknown mode '{}'".format(text))

    if (kind in PARAMETERIZED_KINDS) != bool(colon):
        raise ModeError("malformed parameters in mode '{}'".format(text))

    if kind == 'sequential':
        permutation = _parse_integers(parameters, text)
        if not permutation:
            raise ModeError("empty sequence in mode '{}'".format(text))
        return ModeSpec(kind, Schedule.sequential(permutation))

    if kind == 'block-sequential':
        return ModeSpec(kind, Schedule.block_sequential(_parse_blocks(parameters, text)))

    if kind == 'periodic':
        return ModeSpec(kind, Schedule.periodic(_parse_blocks(parameters, text)))

    if kind == 'memory':
        match = BLOCK.fullmatch(parameters)
        if not match:
            raise ModeError("malformed memory set in mode '{}'".format(text))
        return ModeSpec(kind, memory=tuple(sorted(set(_parse_integers(match.group(1), text)))))

    if kind == 'memory-vector':
        memory = _parse_integers(parameters, text)
        if not memory or any(m < 1 for m in memory):
            raise ModeError("memory vector entries must be positive in mode '{}'".format(text))
        return ModeSpec(kind, memory=tuple(memory))

    return ModeSpec(kind)


def split_modes(text: str) -> list[str]:
    """ Split a comma-separated list of mode strings.

    Note
    ----
    Commas inside a mode (`seq:3,1,2`) are kept: the list is only split
    before a letter.
    """
    return [mode for mode in re.split(r',(?=\s*[A-Za-z])', text) if mode.strip()]
