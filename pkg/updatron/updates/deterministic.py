"""
Deterministic Updates

Elementary updates phi_W and their sequential compositions
(parallel, sequential, block-sequential and periodic schedules).

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

from dataclasses import dataclass
from typing import Iterable, Sequence

from updatron.bnio.configuration import mask_of
from updatron.bnio.network import BooleanNetwork
from updatron.exceptions import ModeError


@dataclass(frozen=True)
class Schedule:
    """ Ordered sequence of blocks (W_1, ..., W_p), applied left to right.

    Attributes
    ----------
    blocks : tuple of frozenset of int
        Non-empty blocks of automata.
    requires_partition : bool
        Blocks must be pairwise disjoint and cover 1..n.
    """
    blocks: tuple[frozenset[int], ...]
    requires_partition: bool = False

    def __post_init__(self) -> None:
        if not self.blocks:
            raise ModeError("a schedule needs at least one block")

        if any(not block for block in self.blocks):
            raise ModeError("empty block in schedule")

        if self.requires_partition:
            seen: set[int] = set()
            for block in self.blocks:
                if seen & block:
                    raise ModeError("blocks are not a partition: {} occurs twice".format(min(seen & block)))
                seen |= block

    @classmethod
    def parallel(cls, n: int) -> Schedule:
        return cls((frozenset(range(1, n + 1)),), True)

    @classmethod
    def sequential(cls, permutation: Sequence[int]) -> Schedule:
        if len(set(permutation)) != len(permutation):
            raise ModeError("sequence {} is not a permutation".format(','.join(map(str, permutation))))
        return cls(tuple(frozenset({i}) for i in permutation), True)

    @classmethod
    def block_sequential(cls, blocks: Iterable[Iterable[int]]) -> Schedule:
        return cls(tuple(frozenset(block) for block in blocks), True)

    @classmethod
    def periodic(cls, blocks: Iterable[Iterable[int]]) -> Schedule:
        return cls(tuple(frozenset(block) for block in blocks), False)

    def validate(self, n: int) -> None:
        """ Check the schedule against dimension `n`.

        Raises
        ------
        ModeError
            Index out of range, or blocks not covering 1..n for a partition.
        """
        for block in self.blocks:
            for i in block:
                if not 1 <= i <= n:
                    raise ModeError("automaton index {} out of range 1..{}".format(i, n))

        if self.requires_partition:
            missing = set(range(1, n + 1)).difference(*self.blocks)
            if missing:
                raise ModeError("blocks are not a partition: {} not covered".format(','.join(map(str, sorted(missing)))))

    def masks(self, n: int) -> list[int]:
        return [mask_of(block, n) for block in self.blocks]


def phi_mask(net: BooleanNetwork, mask: int, x: int) -> int:
    """ Elementary update with W given as a mask.
    """
    return (x & ~mask) | (net.apply(x) & mask)


def phi(net: BooleanNetwork, W: Iterable[int], x: int) -> int:
    """ Elementary deterministic update phi_W(x).

    Parameters
    ----------
    net : BooleanNetwork
        Boolean network.
    W : Iterable of int
        Automata to update (possibly empty).
    x : int
        Configuration.

    Returns
    -------
    int
        f_i(x) on the automata of W, x_i elsewhere.

    Raises
    ------
    DimensionError
        Index out of range.
    """
    return phi_mask(net, mask_of(W, net.n), x)


def schedule_step(net: BooleanNetwork, schedule: Schedule, x: int) -> int:
    """ phi_{W_p} o ... o phi_{W_1}(x).

    Raises
    ------
    DimensionError
        Block index out of range.
    """
    for mask in schedule.masks(net.n):
        x = phi_mask(net, mask, x)

    return x


def trajectory(net: BooleanNetwork, schedule: Schedule, x: int, steps: int) -> list[int]:
    """ Finite prefix of the orbit of `x`, of length `steps + 1`.
    """
    configurations = [x]
    for _ in range(steps):
        x = schedule_step(net, schedule, x)
        configurations.append(x)
    return configurations
