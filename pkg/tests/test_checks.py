"""
Tests of the built-in property suite.
"""

from __future__ import annotations

import logging
import random
from itertools import combinations

from conftest import all_networks, random_networks
from updatron.bnio.configuration import ConfigSet
from updatron.bnio.network import BooleanNetwork
from updatron.checks import CheckResult, mp_divergence, ordered_partitions, run_checks
from updatron.updates.most_permissive import mp_formula, mp_update


def test_ordered_partitions():
    assert len(list(ordered_partitions(1))) == 1
    assert len(list(ordered_partitions(2))) == 3
    assert len(list(ordered_partitions(3))) == 13
    assert len(list(ordered_partitions(4))) == 75


def test_result_format():
    assert str(CheckResult("Memory equivalence", True)) == "(Memory equivalence): True"
    assert str(CheckResult("Interval in MP", False, observation=True)) == "(Observed) (Interval in MP): False"
    assert str(CheckResult("MP formula decomposition", False, True, "on {000,011}")) == "(Observed) (MP formula decomposition): False [on {000,011}]"


def test_named_models(example1, ffl):
    for net in (example1, ffl):
        results = run_checks(net)
        assert all(result.holds for result in results if not result.observation)


def test_exhaustive_small_networks():
    for net in list(all_networks(2))[::7]:
        assert all(result.holds for result in run_checks(net) if not result.observation)


def test_random_networks():
    for net in random_networks(3, 20, seed=41):
        assert all(result.holds for result in run_checks(net) if not result.observation)


def test_mp_checks_skipped(example1, caplog):
    with caplog.at_level(logging.WARNING):
        names = [result.name for result in run_checks(example1, mp_cap=2)]

    assert "MP fixed points" not in names
    assert "Memory equivalence" in names
    assert "MP checks skipped" in caplog.text


def test_sequential_only_above_partition_cap():
    net = BooleanNetwork.from_text("a: !e\nb: a\nc: b\nd: c\ne: d\n")
    results = {result.name: result.holds for result in run_checks(net, mp_cap=0)}

    assert results["Block-sequential reachability"]


def test_mp_divergence_witness(ffl):
    mp = mp_update(ffl)
    pair, formula, union = mp_divergence(ffl, mp, random.Random(0))

    diverging = [ConfigSet(3, codes) for codes in combinations(range(8), 2) if mp_formula(ffl, ConfigSet(3, codes)) != mp(ConfigSet(3, codes))]
    assert pair == diverging[0]
    assert formula == mp_formula(ffl, pair)
    assert union == mp(pair)
    assert union < formula


def test_mp_divergence_reported(ffl, caplog):
    with caplog.at_level(logging.WARNING):
        results = {result.name: result for result in run_checks(ffl)}

    decomposition = results["MP formula decomposition"]
    pair, formula, union = mp_divergence(ffl, mp_update(ffl), random.Random(0))
    assert not decomposition.holds
    assert decomposition.witness == "on {}: formula {} against union {}".format(pair, formula, union)
    assert str(decomposition).endswith("[{}]".format(decomposition.witness))
    assert "MP formula decomposition" in caplog.text


def test_mp_divergence_absent_on_identity():
    net = BooleanNetwork.from_text("a: a\n")
    assert mp_divergence(net, mp_update(net), random.Random(0)) is None
