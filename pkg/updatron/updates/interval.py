"""
Interval Updating Mode

Decomposed state changes: an automaton that can change is held while the
other automata keep updating against its old state, then its change is
committed on every configuration reached meanwhile.

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
from typing import Iterable

from updatron.bnio.configuration import ConfigSet, bit, mask_of
from updatron.bnio.network import BooleanNetwork
from updatron.updates.set_updates import SetUpdate, iterate_omega


def flip(y: int, i: int, n: int) -> int:
    """ Negate the state of automaton `i`.
    """
    return y ^ bit(i, n)


class IntervalEngine:
    """ Mutually recursive held-set update and commit.

    Note
    ----
    Held sets are masks. Both results are memoized: they only depend on
    the network and their arguments.

    Attributes
    ----------
    net : BooleanNetwork
        Boolean network.
    """

    def __init__(self, net: BooleanNetwork) -> None:
        """ Initializer.

        Parameters
        ----------
        net : BooleanNetwork
            Boolean network.
        """
        self.net: BooleanNetwork = net

        self._singletons: dict[tuple[int, int], int] = {}
        self._commits: dict[tuple[int, int, int], int] = {}

    def psi_singleton(self, held: int, x: int) -> int:
        """ Psi_L({x}) as membership bits.
        """
        key = (held, x)
        if key not in self._singletons:
            n = self.net.n
            changes = x ^ self.net.apply(x)

            bits = 1 << x
            for i in range(1, n + 1):
                if changes & ~held & bit(i, n):
                    bits |= self.commit(held, i, x)

            self._singletons[key] = bits

        return self._singletons[key]

    def psi(self, held: int, configurations: ConfigSet) -> ConfigSet:
        """ Psi_L(X).
        """
        bits = 0
        for x in configurations:
            bits |= self.psi_singleton(held, x)
        return ConfigSet.from_bits(self.net.n, bits)

    def commit(self, held: int, i: int, x: int) -> int:
        """ D_{L,i}(x) as membership bits.
        """
        key = (held, i, x)
        if key not in self._commits:
            n = self.net.n
            assert not held & bit(i, n), "automaton {} already held".format(i)
            held_i = held | bit(i, n)

            reached = iterate_omega(lambda configurations: self.psi(held_i, configurations), ConfigSet.singleton(x, n))

            bits = 0
            for y in reached:
                bits |= 1 << flip(y, i, n)

            self._commits[key] = bits
            log.debug("interval commit of {} from {}: {} configurations".format(i, x, bits.bit_count()))

        return self._commits[key]


def psi(net: BooleanNetwork, held: Iterable[int], configurations: ConfigSet) -> ConfigSet:
    """ Psi_L(X) = X | {D_{L,i}(x) | x in X, i not in L, f_i(x) != x_i}.
    """
    return IntervalEngine(net).psi(mask_of(held, net.n), configurations)


def interval_commit(net: BooleanNetwork, held: Iterable[int], i: int, x: int) -> ConfigSet:
    """ D_{L,i}(x): hold `i`, saturate under Psi_{L | {i}}, then flip `i`.

    Raises
    ------
    ValueError
        `i` already held, or f_i(x) = x_i.
    """
    held = frozenset(held)
    mask = mask_of(held | {i}, net.n)

    if i in held:
        raise ValueError("automaton {} is already held".format(i))

    if net.local(i, x) == bool(x & bit(i, net.n)):
        raise ValueError("automaton {} cannot change from this configuration".format(i))

    return ConfigSet.from_bits(net.n, IntervalEngine(net).commit(mask & ~bit(i, net.n), i, x))


def interval_update(net: BooleanNetwork) -> SetUpdate:
    """ Phi_I = Psi_empty, as a set update.
    """
    engine = IntervalEngine(net)
    return SetUpdate(net.n, lambda x: engine.psi_singleton(0, x), "interval")


def interval_set(net: BooleanNetwork, configurations: ConfigSet) -> ConfigSet:
    """ Phi_I(X).

    Raises
    ------
    CapExceededError
        Dimension above the cap.
    """
    net.check_cap()
    return interval_update(net)(configurations)
