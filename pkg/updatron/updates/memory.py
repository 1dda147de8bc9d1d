"""
Memory Updating Mode

Memory Boolean networks: deterministic dynamics over delay configurations,
their binary projection Phi_M = B o Phi*_M o A, and the equivalent
selection of elementary transitions Phi_Mb.

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

from itertools import product
from math import prod
from typing import Iterable, Sequence

from updatron.bnio.configuration import ConfigSet, bit, mask_of, submasks
from updatron.bnio.network import BooleanNetwork
from updatron.exceptions import CapExceededError, ModeError
from updatron.updates.set_updates import SetUpdate

ALPHA_CAP = 1 << 20

MemoryVector = tuple[int, ...]
MemoryConfiguration = tuple[int, ...]
MemorySet = frozenset[int]


def check_memory_vector(memory: Sequence[int], n: int) -> MemoryVector:
    """ Validate a memory vector.

    Raises
    ------
    ModeError
        Wrong length or non-positive entry.
    """
    if len(memory) != n:
        raise ModeError("memory vector of length {}, expected {}".format(len(memory), n))

    if any(m < 1 for m in memory):
        raise ModeError("memory vector entries must be positive")

    return tuple(memory)


def check_memory_configuration(memory: MemoryVector, d: Sequence[int]) -> MemoryConfiguration:
    """ Validate a memory configuration against its memory vector.

    Raises
    ------
    ModeError
        Wrong length or delay outside 0..M_i.
    """
    if len(d) != len(memory):
        raise ModeError("memory configuration of length {}, expected {}".format(len(d), len(memory)))

    if any(not 0 <= d_i <= m_i for d_i, m_i in zip(d, memory)):
        raise ModeError("memory configuration {} not within {}".format(d, memory))

    return tuple(d)


def memory_set_of(memory: MemoryVector) -> MemorySet:
    """ Mb = {i | M_i >= 2}.
    """
    return frozenset(i for i, m in enumerate(memory, start=1) if m >= 2)


def memory_vector_of(memory_set: Iterable[int], n: int) -> MemoryVector:
    """ Canonical memory vector of Mb: M_i = 2 if i in Mb, 1 otherwise.
    """
    memory_set = frozenset(memory_set)
    # Bounds check
    mask_of(memory_set, n)
    return tuple(2 if i in memory_set else 1 for i in range(1, n + 1))


def beta(d: Sequence[int]) -> int:
    """ Binary configuration of a memory configuration, beta(d)_i = min(d_i, 1).
    """
    n = len(d)
    return sum(bit(i, n) for i, d_i in enumerate(d, start=1) if d_i >= 1)


def alpha(x: int, memory: MemoryVector) -> list[MemoryConfiguration]:
    """ Memory configurations projecting to `x`.

    Parameters
    ----------
    x : int
        Configuration.
    memory : MemoryVector
        Memory vector.

    Returns
    -------
    list of MemoryConfiguration
        All d with d_i = 0 if x_i = 0 and d_i in 1..M_i otherwise, in
        lexicographic order.

    Raises
    ------
    CapExceededError
        More than ALPHA_CAP memory configurations.
    """
    n = len(memory)
    ranges = [range(1, m + 1) if x & bit(i, n) else range(0, 1) for i, m in enumerate(memory, start=1)]

    size = prod(len(r) for r in ranges)
    if size > ALPHA_CAP:
        raise CapExceededError("{} memory configurations exceed the cap {}".format(size, ALPHA_CAP))

    return list(product(*ranges))


def _phi_star(memory: MemoryVector, d: MemoryConfiguration, image: int) -> MemoryConfiguration:
    n = len(memory)
    return tuple(m if image & bit(i, n) else max(d_i - 1, 0) for i, (m, d_i) in enumerate(zip(memory, d), start=1))


def phi_star(net: BooleanNetwork, memory: MemoryVector, d: Sequence[int]) -> MemoryConfiguration:
    """ Deterministic memory update.

    Note
    ----
    d'_i is M_i if f_i(beta(d)) = 1, and max(d_i - 1, 0) otherwise.

    Raises
    ------
    ModeError
        Invalid memory configuration.
    """
    memory = check_memory_vector(memory, net.n)
    d = check_memory_configuration(memory, d)
    return _phi_star(memory, d, net.apply(beta(d)))


def mbn_step(net: BooleanNetwork, memory: MemoryVector, d: Sequence[int]) -> tuple[int, MemoryConfiguration]:
    """ One step of the memory Boolean network on (beta(d), d).
    """
    d_prime = phi_star(net, memory, d)
    return beta(d_prime), d_prime


def mbn_trajectory(net: BooleanNetwork, memory: MemoryVector, d: Sequence[int], steps: int) -> list[tuple[int, MemoryConfiguration]]:
    """ Orbit of the memory Boolean network, `steps + 1` coupled configurations.
    """
    memory = check_memory_vector(memory, net.n)
    d = check_memory_configuration(memory, d)

    orbit = [(beta(d), d)]
    for _ in range(steps):
        orbit.append(mbn_step(net, memory, orbit[-1][1]))

    return orbit


def memory_update(net: BooleanNetwork, memory: Sequence[int]) -> SetUpdate:
    """ Phi_M = B o Phi*_M o A, computed on singletons.
    """
    memory = check_memory_vector(memory, net.n)

    def kernel(x: int) -> int:
        image = net.apply(x)
        bits = 0
        for d in alpha(x, memory):
            bits |= 1 << beta(_phi_star(memory, d, image))
        return bits

    return SetUpdate(net.n, kernel, "memory-vector:{}".format(','.join(map(str, memory))))


def memory_set_update(net: BooleanNetwork, memory_set: Iterable[int]) -> SetUpdate:
    """ Phi_Mb: phi_W(x) for every W containing {i | i not in Mb or f_i(x) = 1}.
    """
    memory_set = frozenset(memory_set)
    memory_mask = mask_of(memory_set, net.n)
    full = (1 << net.n) - 1

    def kernel(x: int) -> int:
        image = net.apply(x)
        changes = x ^ image
        mandatory = (~memory_mask | image) & full
        base = x ^ (changes & mandatory)
        free = changes & ~mandatory

        bits = 0
        for sub in submasks(free):
            bits |= 1 << (base ^ sub)
        return bits

    return SetUpdate(net.n, kernel, "memory:{{{}}}".format(','.join(map(str, sorted(memory_set)))))


def phi_memory_set(net: BooleanNetwork, memory: Sequence[int], configurations: ConfigSet) -> ConfigSet:
    return memory_update(net, memory)(configurations)


def phi_mb_set(net: BooleanNetwork, memory_set: Iterable[int], configurations: ConfigSet) -> ConfigSet:
    return memory_set_update(net, memory_set)(configurations)
