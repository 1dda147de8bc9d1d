"""
Set Updates

Non-deterministic updates Phi: 2^(B^n) -> 2^(B^n) defined from their
images on singletons and lifted by union, the elementary and
fully-asynchronous instances, iteration, superposition and the generated
transition relation.

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
from typing import Callable, Optional

from updatron.bnio.configuration import ConfigSet, bit, submasks
from updatron.bnio.network import DIMENSION_CAP, BooleanNetwork
from updatron.exceptions import CapExceededError, DimensionError, InflationError
from updatron.updates.deterministic import Schedule, schedule_step

Kernel = Callable[[int], int]
Operator = Callable[[ConfigSet], ConfigSet]


class SetUpdate:
    """ Set update lifted from a singleton kernel.

    Note
    ----
    Phi(X) is the union of Phi({x}) over x in X, by construction.
    Kernels are pure, their images are cached.

    Attributes
    ----------
    n : int
        Dimension.
    kernel : Callable[[int], int]
        Image of each singleton {x}, as a membership bit vector.
    name : str
        Human-readable name.
    """

    def __init__(self, n: int, kernel: Kernel, name: str = "") -> None:
        """ Initializer.

        Parameters
        ----------
        n : int
            Dimension.
        kernel : Callable[[int], int]
            Configuration code -> membership bits of its image.
        name : str, optional
            Human-readable name.
        """
        self.n: int = n
        self.kernel: Kernel = kernel
        self.name: str = name

        self._images: dict[int, int] = {}

    def __repr__(self) -> str:
        return "SetUpdate({}, n={})".format(self.name, self.n)

    def image_bits(self, x: int) -> int:
        bits = self._images.get(x)
        if bits is None:
            bits = self.kernel(x)
            self._images[x] = bits
        return bits

    def image(self, x: int) -> ConfigSet:
        """ Phi({x}).
        """
        return ConfigSet.from_bits(self.n, self.image_bits(x))

    def __call__(self, configurations: ConfigSet) -> ConfigSet:
        """ Phi(X).

        Raises
        ------
        DimensionError
            Dimension mismatch.
        """
        if configurations.n != self.n:
            raise DimensionError("dimension mismatch: {} and {}".format(configurations.n, self.n))

        bits = 0
        for x in configurations:
            bits |= self.image_bits(x)

        return ConfigSet.from_bits(self.n, bits)


def elementary_update(net: BooleanNetwork) -> SetUpdate:
    """ Phi_e: every phi_W(x) with W non-empty.
    """
    full = (1 << net.n) - 1

    def kernel(x: int) -> int:
        changes = x ^ net.apply(x)
        bits = 0
        for sub in submasks(changes):
            if sub:
                bits |= 1 << (x ^ sub)
        # Some non-empty W leaves x unchanged
        if changes != full:
            bits |= 1 << x
        return bits

    return SetUpdate(net.n, kernel, "async")


def fully_asynchronous_update(net: BooleanNetwork) -> SetUpdate:
    """ Phi_fa: every phi_i(x).
    """
    def kernel(x: int) -> int:
        changes = x ^ net.apply(x)
        bits = 0
        for i in range(1, net.n + 1):
            bits |= 1 << (x ^ (changes & bit(i, net.n)))
        return bits

    return SetUpdate(net.n, kernel, "fully-async")


def schedule_update(net: BooleanNetwork, schedule: Schedule, name: str = "") -> SetUpdate:
    """ Deterministic schedule seen as a set update {x} -> {schedule_step(x)}.
    """
    masks = schedule.masks(net.n)

    def kernel(x: int) -> int:
        for mask in masks:
            x = (x & ~mask) | (net.apply(x) & mask)
        return 1 << x

    return SetUpdate(net.n, kernel, name or "schedule")


def parallel_update(net: BooleanNetwork) -> SetUpdate:
    return SetUpdate(net.n, lambda x: 1 << net.apply(x), "parallel")


def top_update(n: int) -> SetUpdate:
    """ Phi_top({x}) = B^n.

    Note
    ----
    Destroys every fixed point: not an admissible updating mode.
    """
    full = (1 << (1 << n)) - 1
    return SetUpdate(n, lambda x: full, "top")


def phi_e_set(net: BooleanNetwork, configurations: ConfigSet) -> ConfigSet:
    return elementary_update(net)(configurations)


def phi_fa_set(net: BooleanNetwork, configurations: ConfigSet) -> ConfigSet:
    return fully_asynchronous_update(net)(configurations)


def iterate_k(update: Operator, configurations: ConfigSet, k: int) -> ConfigSet:
    """ update^k(X), with update^0(X) = X.
    """
    for _ in range(k):
        configurations = update(configurations)
    return configurations


def iterate_omega(update: Operator, configurations: ConfigSet) -> ConfigSet:
    """ Iterate an inflationary operator until a fixed point.

    Parameters
    ----------
    update : Callable[[ConfigSet], ConfigSet]
        Inflationary operator (X is included in update(X)).
    configurations : ConfigSet
        Starting set.

    Returns
    -------
    ConfigSet
        Least fixed point of `update` above the starting set.

    Raises
    ------
    InflationError
        An iteration step lost configurations.
    """
    steps = 0
    while True:
        image = update(configurations)

        if not configurations <= image:
            raise InflationError("operator is not inflationary on {}".format(configurations))

        if image == configurations:
            log.debug("omega-iteration stable after {} steps".format(steps))
            return configurations

        configurations = image
        steps += 1


def superpose(first: SetUpdate, second: SetUpdate) -> SetUpdate:
    """ Phi*(X) = Phi(X) | Phi'(X).

    Raises
    ------
    DimensionError
        Dimension mismatch.
    """
    if first.n != second.n:
        raise DimensionError("dimension mismatch: {} and {}".format(first.n, second.n))

    return SetUpdate(first.n, lambda x: first.image_bits(x) | second.image_bits(x), "{}+{}".format(first.name, second.name))


def delta(update: SetUpdate, cap: Optional[int] = None) -> frozenset[tuple[int, int]]:
    """ Generated transition relation {(x, y) | y in Phi({x})}.

    Raises
    ------
    CapExceededError
        Dimension above the cap.
    """
    cap = DIMENSION_CAP if cap is None else cap
    if update.n > cap:
        raise CapExceededError("dimension {} exceeds the cap {}".format(update.n, cap))

    return frozenset((x, y) for x in range(1 << update.n) for y in update.image(x))
