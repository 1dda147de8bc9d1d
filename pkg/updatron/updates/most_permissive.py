"""
Most Permissive Updating Mode

Hypercube widening of the fully-asynchronous updates on a set of
automata W, iterated to a fixed point, followed by a narrowing to the
configurations whose W-components are computable by f; the Most
Permissive set update is the union over every W.

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
from typing import Iterable, Optional

from updatron.bnio.configuration import ConfigSet, bit, mask_of, submasks
from updatron.bnio.network import CAP_MARGIN, BooleanNetwork
from updatron.exceptions import CapExceededError
from updatron.updates.set_updates import SetUpdate, iterate_omega

MP_DIMENSION_CAP = 12


def _cube(n: int, fixed: int, free: int) -> ConfigSet:
    """ Vertices of the hypercube with `fixed` ones outside the `free` automata.
    """
    bits = 0
    for sub in submasks(free):
        bits |= 1 << (fixed | sub)
    return ConfigSet.from_bits(n, bits)


def _bounds(codes: Iterable[int], full: int) -> tuple[int, int]:
    """ Bitwise AND and OR of configuration codes.
    """
    conjunction, disjunction = full, 0
    for x in codes:
        conjunction &= x
        disjunction |= x
    return conjunction, disjunction


def hypercube_closure(configurations: ConfigSet) -> ConfigSet:
    """ Smallest hypercube containing X.

    Raises
    ------
    ValueError
        Empty input.
    """
    if not configurations:
        raise ValueError("hypercube closure of an empty set")

    conjunction, disjunction = _bounds(configurations, (1 << configurations.n) - 1)
    return _cube(configurations.n, conjunction, disjunction & ~conjunction)


def widen_mask(net: BooleanNetwork, mask: int, configurations: ConfigSet) -> ConfigSet:
    """ Phi_{W,nabla}(X) with W given as a mask.
    """
    if not configurations:
        raise ValueError("widening of an empty set")

    n = net.n
    updated = [x ^ ((x ^ net.apply(x)) & bit(i, n)) for x in configurations for i in range(1, n + 1) if mask & bit(i, n)]

    conjunction, disjunction = _bounds(list(configurations) + updated, (1 << n) - 1)
    return _cube(n, conjunction, disjunction & ~conjunction)


def widen(net: BooleanNetwork, W: Iterable[int], configurations: ConfigSet) -> ConfigSet:
    """ Phi_{W,nabla}(X) = nabla(X | {phi_i(x) | x in X, i in W}).

    Raises
    ------
    ValueError
        Empty input.
    """
    return widen_mask(net, mask_of(W, net.n), configurations)


def narrow_mask(net: BooleanNetwork, mask: int, configurations: ConfigSet) -> ConfigSet:
    """ Lambda_W(X) with W given as a mask.
    """
    full = (1 << net.n) - 1

    # Bit i of `ones` (resp. `zeros`): f_i(y) = 1 (resp. 0) for some y in X
    ones, zeros = 0, 0
    for y in configurations:
        image = net.apply(y)
        ones |= image
        zeros |= ~image & full

    bits = 0
    for x in configurations:
        if mask & ((x & ~ones) | (~x & full & ~zeros)) == 0:
            bits |= 1 << x

    return ConfigSet.from_bits(net.n, bits)


def narrow(net: BooleanNetwork, W: Iterable[int], configurations: ConfigSet) -> ConfigSet:
    """ Lambda_W(X) = {x in X | for all i in W, x_i = f_i(y) for some y in X}.
    """
    return narrow_mask(net, mask_of(W, net.n), configurations)


def mp_formula(net: BooleanNetwork, configurations: ConfigSet) -> ConfigSet:
    """ Union over W of Lambda_W(Phi^omega_{W,nabla}(X)), applied to X as a whole.

    Note
    ----
    Only used for diagnostics: on sets with several configurations the
    widening can mix them, so `mp_set` decomposes on singletons instead.
    """
    bits = 0
    for mask in range(1 << net.n):
        reached = iterate_omega(lambda current: widen_mask(net, mask, current), configurations)
        bits |= narrow_mask(net, mask, reached).bits
    return ConfigSet.from_bits(net.n, bits)


def mp_update(net: BooleanNetwork, cap: Optional[int] = None) -> SetUpdate:
    """ Phi_MP as a set update.

    Raises
    ------
    CapExceededError
        Dimension above the MP cap.
    """
    cap = MP_DIMENSION_CAP if cap is None else cap
    if net.n > cap:
        raise CapExceededError("dimension {} exceeds the MP cap {}".format(net.n, cap))
    if net.n > cap - CAP_MARGIN:
        log.warning("dimension {} close to the MP cap {}".format(net.n, cap))

    return SetUpdate(net.n, lambda x: mp_formula(net, ConfigSet.singleton(x, net.n)).bits, "mp")


def mp_set(net: BooleanNetwork, configurations: ConfigSet, cap: Optional[int] = None) -> ConfigSet:
    """ Phi_MP(X), the union of Phi_MP({x}) over x in X.
    """
    return mp_update(net, cap)(configurations)
