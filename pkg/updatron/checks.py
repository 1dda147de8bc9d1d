"""
Property Checks

Built-in property suite of a Boolean network: fixed-point preservation,
inclusions between updating modes, memory equivalence, hypercube
closure laws and admissibility of every mode. Observations are reported
without being failures.

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
import random
from dataclasses import dataclass
from itertools import combinations, permutations, product
from typing import Iterator, Optional

from updatron.bnio.configuration import ConfigSet, indices_of, submasks
from updatron.bnio.network import BooleanNetwork
from updatron.dynamics import TransitionGraph, fixed_points, forward_closure, preserves_fixed_points
from updatron.updates.deterministic import Schedule, schedule_step
from updatron.updates.interval import interval_update
from updatron.updates.memory import memory_set_of, memory_set_update, memory_update
from updatron.updates.most_permissive import MP_DIMENSION_CAP, hypercube_closure, mp_formula, mp_update, widen_mask
from updatron.updates.set_updates import SetUpdate, delta, elementary_update, fully_asynchronous_update, parallel_update, top_update

PARTITION_DIMENSION_CAP = 4
PERMUTATION_DIMENSION_CAP = 6
SAMPLES = 32


@dataclass
class CheckResult:
    """ Outcome of a property check.

    Attributes
    ----------
    name : str
        Property name.
    holds : bool
        Verdict on the network.
    observation : bool
        Reported only, never a failure.
    witness : str
        Instance on which the property fails, if any.
    """
    name: str
    holds: bool
    observation: bool = False
    witness: str = ""

    def __str__(self) -> str:
        prefix = "(Observed) " if self.observation else ""
        suffix = " [{}]".format(self.witness) if self.witness else ""
        return "{}({}): {}{}".format(prefix, self.name, self.holds, suffix)


def ordered_partitions(n: int) -> Iterator[Schedule]:
    """ Every block-sequential schedule over automata 1..n.
    """
    for k in range(1, n + 1):
        for labels in product(range(k), repeat=n):
            if len(set(labels)) == k:
                yield Schedule.block_sequential([[i for i, label in enumerate(labels, start=1) if label == block] for block in range(k)])


def _fixed_point_biconditional(net: BooleanNetwork, update: SetUpdate) -> bool:
    fixed = fixed_points(net)
    return all((x in fixed) == (update.image(x) == ConfigSet.singleton(x, net.n)) for x in range(1 << net.n))


def _pointwise_inclusion(first: SetUpdate, second: SetUpdate) -> bool:
    return all(first.image(x) <= second.image(x) for x in range(1 << first.n))


def _singleton_idempotence(update: SetUpdate) -> bool:
    return all(update(update.image(x)) == update.image(x) for x in range(1 << update.n))


def _memory_sets_elementary(net: BooleanNetwork, elementary: SetUpdate) -> bool:
    for memory_mask in submasks((1 << net.n) - 1):
        update = memory_set_update(net, indices_of(memory_mask, net.n))
        for x in range(1 << net.n):
            if not update.image(x) - ConfigSet.singleton(x, net.n) <= elementary.image(x):
                return False
    return True


def _memory_equivalence(net: BooleanNetwork) -> bool:
    for memory in product((1, 2), repeat=net.n):
        exact = memory_update(net, memory)
        selection = memory_set_update(net, memory_set_of(memory))
        if any(exact.image(x) != selection.image(x) for x in range(1 << net.n)):
            return False
    return True


def _block_sequential_reachability(net: BooleanNetwork, asynchronous: TransitionGraph) -> Optional[bool]:
    if net.n <= PARTITION_DIMENSION_CAP:
        schedules = ordered_partitions(net.n)
    elif net.n <= PERMUTATION_DIMENSION_CAP:
        schedules = (Schedule.sequential(permutation) for permutation in permutations(range(1, net.n + 1)))
    else:
        log.warning("dimension {} above {}: block-sequential reachability skipped".format(net.n, PERMUTATION_DIMENSION_CAP))
        return None

    closures = [forward_closure(asynchronous, x) for x in range(1 << net.n)]
    return all(schedule_step(net, schedule, x) in closures[x] for schedule in schedules for x in range(1 << net.n))


def _random_sets(n: int, rng: random.Random) -> Iterator[ConfigSet]:
    for _ in range(SAMPLES):
        yield ConfigSet.from_bits(n, rng.getrandbits(1 << n))


def _union_decomposition(updates: list[SetUpdate], rng: random.Random) -> bool:
    n = updates[0].n
    pairs = list(zip(_random_sets(n, rng), _random_sets(n, rng)))
    return all(update(first | second) == update(first) | update(second) for update in updates for first, second in pairs)


def _hypercube_laws(net: BooleanNetwork, rng: random.Random) -> bool:
    full = (1 << net.n) - 1
    for first, second in zip(_random_sets(net.n, rng), _random_sets(net.n, rng)):
        if not first:
            continue
        closure = hypercube_closure(first)
        if not first <= closure or hypercube_closure(closure) != closure:
            return False
        if not closure <= hypercube_closure(first | second):
            return False
        widened = widen_mask(net, rng.getrandbits(net.n) & full, first)
        if hypercube_closure(widened) != widened:
            return False
    return True


def mp_divergence(net: BooleanNetwork, mp: SetUpdate, rng: random.Random) -> Optional[tuple[ConfigSet, ConfigSet, ConfigSet]]:
    """ First pair of configurations on which the raw MP formula differs from the union of its singleton images.

    Note
    ----
    Every pair is tried when there are at most SAMPLES of them, otherwise
    SAMPLES random pairs.

    Returns
    -------
    tuple of ConfigSet, optional
        The pair, its image by the formula and its image by `mp`, or None.
    """
    size = 1 << net.n
    if size * (size - 1) // 2 <= SAMPLES:
        pairs = combinations(range(size), 2)
    else:
        pairs = (rng.sample(range(size), 2) for _ in range(SAMPLES))

    for pair in pairs:
        configurations = ConfigSet(net.n, pair)
        formula, union = mp_formula(net, configurations), mp(configurations)
        if formula != union:
            return configurations, formula, union

    return None


def run_checks(net: BooleanNetwork, cap: Optional[int] = None, mp_cap: Optional[int] = None, seed: int = 0) -> list[CheckResult]:
    """ Property suite of a Boolean network.

    Parameters
    ----------
    net : BooleanNetwork
        Boolean network.
    cap : int, optional
        Dimension cap, defaults to the network cap.
    mp_cap : int, optional
        Dimension cap of the most permissive checks, which are skipped above.
    seed : int, optional
        Seed of the random set samples.

    Returns
    -------
    list of CheckResult
        Checks in a fixed order.

    Raises
    ------
    CapExceededError
        Dimension above the cap.
    """
    net.check_cap(cap)
    rng = random.Random(seed)
    mp_cap = MP_DIMENSION_CAP if mp_cap is None else mp_cap

    elementary = elementary_update(net)
    asynchronous = TransitionGraph(net.n, delta(elementary, cap=net.n), "async", net.names)
    interval = interval_update(net)
    updates = [parallel_update(net), fully_asynchronous_update(net), elementary, memory_set_update(net, range(1, net.n + 1)), interval]

    results = [
        CheckResult("Interval fixed points", _fixed_point_biconditional(net, interval)),
        CheckResult("Elementary in interval", _pointwise_inclusion(elementary, interval)),
        CheckResult("Fully-asynchronous in elementary", delta(fully_asynchronous_update(net), cap=net.n) <= delta(elementary, cap=net.n)),
        CheckResult("Memory sets in elementary", _memory_sets_elementary(net, elementary)),
        CheckResult("Memory equivalence", _memory_equivalence(net))
    ]

    reachability = _block_sequential_reachability(net, asynchronous)
    if reachability is not None:
        results.append(CheckResult("Block-sequential reachability", reachability))

    if net.n <= mp_cap:
        mp = mp_update(net, mp_cap)
        updates.append(mp)
        results += [
            CheckResult("MP fixed points", _fixed_point_biconditional(net, mp)),
            CheckResult("Elementary in MP", _pointwise_inclusion(elementary, mp)),
            CheckResult("MP idempotence", _singleton_idempotence(mp)),
            CheckResult("Hypercube closure", _hypercube_laws(net, rng))
        ]
    else:
        log.warning("dimension {} above the MP cap {}: MP checks skipped".format(net.n, mp_cap))

    results.append(CheckResult("Union decomposition", _union_decomposition(updates, rng)))
    results.append(CheckResult("Admissibility", all(preserves_fixed_points(net, TransitionGraph(net.n, delta(update, cap=net.n))) for update in updates)))
    results.append(CheckResult("Top not admissible", not preserves_fixed_points(net, TransitionGraph(net.n, delta(top_update(net.n), cap=net.n))) or not fixed_points(net)))

    results.append(CheckResult("Interval idempotence", _singleton_idempotence(interval), observation=True))
    if net.n <= mp_cap:
        results.append(CheckResult("Interval in MP", _pointwise_inclusion(interval, mp), observation=True))
        divergence = mp_divergence(net, mp, rng)
        witness = "on {}: formula {} against union {}".format(*divergence) if divergence else ""
        results.append(CheckResult("MP formula decomposition", divergence is None, observation=True, witness=witness))

    for result in results:
        if result.observation and not result.holds:
            log.warning(str(result))
        else:
            log.info(str(result))

    return results
