"""
Shared fixtures and network generators.

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

import random
from pathlib import Path
from typing import Iterator

import pytest
from hypothesis import strategies as st

from updatron.bnio.configuration import ConfigSet
from updatron.bnio.network import BooleanNetwork

MODELS = Path(__file__).resolve().parent.parent / "models"

EXAMPLE1 = "x1: !x3\nx2: !x1 & x3\nx3: !x1\n"
FFL = "a: 1\nb: a\nc: !a & b\n"


def names_of(n: int) -> list[str]:
    return ["x{}".format(i) for i in range(1, n + 1)]


def network_from_bits(n: int, bits: int) -> BooleanNetwork:
    """ Network whose truth tables are read from consecutive bits of `bits`.
    """
    size = 1 << n
    tables = [[bool((bits >> (i * size + x)) & 1) for x in range(size)] for i in range(n)]
    return BooleanNetwork.from_truth_tables(names_of(n), tables)


def all_networks(n: int) -> Iterator[BooleanNetwork]:
    """ Every Boolean network of dimension `n`.
    """
    for bits in range(1 << (n << n)):
        yield network_from_bits(n, bits)


def random_networks(n: int, count: int, seed: int) -> Iterator[BooleanNetwork]:
    rng = random.Random(seed)
    for _ in range(count):
        yield network_from_bits(n, rng.getrandbits(n << n))


def edges(text: str) -> frozenset[tuple[int, int]]:
    """ Edge set from `src>dst` pairs, as in `000>101 101>000`.
    """
    result = set()
    for pair in text.split():
        source, target = pair.split('>')
        result.add((int(source, 2), int(target, 2)))
    return frozenset(result)


def configs(n: int, *texts: str) -> ConfigSet:
    return ConfigSet.from_texts(texts, n)


@st.composite
def networks(draw, n: int) -> BooleanNetwork:
    return network_from_bits(n, draw(st.integers(min_value=0, max_value=(1 << (n << n)) - 1)))


@st.composite
def config_sets(draw, n: int) -> ConfigSet:
    return ConfigSet.from_bits(n, draw(st.integers(min_value=0, max_value=(1 << (1 << n)) - 1)))


@pytest.fixture
def example1() -> BooleanNetwork:
    return BooleanNetwork.from_text(EXAMPLE1)


@pytest.fixture
def ffl() -> BooleanNetwork:
    return BooleanNetwork.from_text(FFL)


@pytest.fixture
def example1_path() -> str:
    return str(MODELS / "example1.bn")


@pytest.fixture
def ffl_path() -> str:
    return str(MODELS / "ffl.bn")
