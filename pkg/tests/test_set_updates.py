"""
Tests of set updates, their iteration and transition relations.
"""

from __future__ import annotations

from itertools import combinations

import pytest
from hypothesis import given, settings

from conftest import all_networks, config_sets, configs, edges, networks, random_networks
from updatron.bnio.configuration import ConfigSet, bit
from updatron.updates.deterministic import Schedule
from updatron.updates.set_updates import (SetUpdate, delta, elementary_update, fully_asynchronous_update, iterate_k,
                                          iterate_omega, parallel_update, phi_e_set, phi_fa_set, schedule_update,
                                          superpose, top_update)
from updatron.exceptions import CapExceededError, DimensionError, InflationError

FULLY_ASYNCHRONOUS = edges(
    "000>100 000>000 000>001 100>100 001>001 001>011 110>110 110>100 "
    "010>110 010>000 010>011 011>011 111>011 111>101 111>110 101>001 101>101 101>100"
)

ASYNCHRONOUS = edges(
    "000>000 100>100 001>001 101>101 110>110 011>011 "
    "000>100 000>001 000>101 001>011 101>001 101>100 101>000 110>100 "
    "010>110 010>000 010>011 010>100 010>111 010>001 010>101 "
    "111>100 111>101 111>000 111>001 111>110 111>010 111>011"
)


def test_fully_asynchronous_graph(example1):
    assert delta(fully_asynchronous_update(example1)) == FULLY_ASYNCHRONOUS


def test_asynchronous_graph(example1):
    assert delta(elementary_update(example1)) == ASYNCHRONOUS


def test_asynchronous_loops(example1):
    loops = {x for x, y in delta(elementary_update(example1)) if x == y}
    assert loops == {0b000, 0b001, 0b011, 0b100, 0b101, 0b110}


def test_set_images(example1):
    assert phi_fa_set(example1, configs(3, "000")) == configs(3, "000", "001", "100")
    assert phi_e_set(example1, configs(3, "000", "011")) == configs(3, "000", "001", "100", "101", "011")
    assert phi_e_set(example1, ConfigSet.empty(3)) == ConfigSet.empty(3)


def test_iterate(example1):
    update = elementary_update(example1)
    start = configs(3, "000")

    assert iterate_k(update, start, 0) == start
    assert iterate_k(update, start, 1) == update(start)
    assert iterate_omega(update, start) == configs(3, "000", "001", "011", "100", "101")


def test_iterate_omega_rejects_shrinking(example1):
    with pytest.raises(InflationError):
        iterate_omega(parallel_update(example1), configs(3, "000", "110"))


def test_schedule_update_is_deterministic(example1):
    update = schedule_update(example1, Schedule.block_sequential([[2, 3], [1]]))
    assert all(len(update.image(x)) == 1 for x in range(8))


def test_superpose(example1):
    both = superpose(parallel_update(example1), fully_asynchronous_update(example1))

    assert delta(both) == delta(parallel_update(example1)) | FULLY_ASYNCHRONOUS


def test_superpose_dimension_mismatch(example1):
    with pytest.raises(DimensionError):
        superpose(parallel_update(example1), top_update(2))


def test_dimension_mismatch(example1):
    with pytest.raises(DimensionError):
        elementary_update(example1)(ConfigSet.full(2))


def test_top_update():
    assert top_update(2).image(0) == ConfigSet.full(2)
    assert len(delta(top_update(2))) == 16


def test_delta_cap(example1):
    with pytest.raises(CapExceededError):
        delta(elementary_update(example1), cap=2)


def test_image_cache():
    calls = []

    def kernel(x: int) -> int:
        calls.append(x)
        return 1 << x

    update = SetUpdate(2, kernel, "identity")
    update(ConfigSet.full(2))
    update(ConfigSet.full(2))

    assert sorted(calls) == [0, 1, 2, 3]


def test_exhaustive_inclusions():
    for net in all_networks(2):
        fully_asynchronous, elementary = delta(fully_asynchronous_update(net)), delta(elementary_update(net))

        assert fully_asynchronous <= elementary
        assert delta(parallel_update(net)) <= elementary


def _elementary_transitions(net) -> frozenset[tuple[int, int]]:
    """ Every x -> phi_W(x), enumerating the non-empty W explicitly.
    """
    n, result = net.n, set()
    for x in range(1 << n):
        for size in range(1, n + 1):
            for W in combinations(range(1, n + 1), size):
                y = x
                for i in W:
                    y = (y | bit(i, n)) if net.local(i, x) else (y & ~bit(i, n))
                result.add((x, y))
    return frozenset(result)


def test_elementary_against_every_subset():
    for net in list(all_networks(2)) + list(random_networks(3, 200, seed=61)):
        assert delta(elementary_update(net)) == _elementary_transitions(net)


@settings(max_examples=100)
@given(networks(3), config_sets(3), config_sets(3))
def test_union_decomposition(net, first, second):
    for update in (elementary_update(net), fully_asynchronous_update(net), parallel_update(net)):
        assert update(first | second) == update(first) | update(second)


@settings(max_examples=100)
@given(networks(3))
def test_fixed_points_are_isolated(net):
    for x in range(8):
        if net.apply(x) == x:
            assert elementary_update(net).image(x) == ConfigSet.singleton(x, 3)
            assert fully_asynchronous_update(net).image(x) == ConfigSet.singleton(x, 3)
