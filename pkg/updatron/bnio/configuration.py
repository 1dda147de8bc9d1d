"""
Configuration Module

Configurations of dimension n are encoded by their integer code
sum_i x_i * 2^(n - i): the text form reads as a binary numeral with
automaton 1 leftmost.
Sets of configurations are dense bit vectors over the 2^n codes.

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

from typing import Iterable, Iterator

from updatron.exceptions import DimensionError


def config_from_text(text: str, n: int) -> int:
    """ Parse a configuration.

    Parameters
    ----------
    text : str
        Configuration over {0, 1}, automaton 1 leftmost.
    n : int
        Dimension.

    Returns
    -------
    int
        Configuration code.

    Raises
    ------
    DimensionError
        Wrong length or illegal character.
    """
    if len(text) != n:
        raise DimensionError("configuration '{}' has length {}, expected {}".format(text, len(text), n))

    if any(c not in '01' for c in text):
        raise DimensionError("configuration '{}' contains a character other than 0 and 1".format(text))

    return int(text, 2) if n else 0


def config_to_text(x: int, n: int) -> str:
    """ Configuration code to text form.
    """
    return format(x, '0{}b'.format(n)) if n else ''


def bit(i: int, n: int) -> int:
    """ Mask of automaton `i` (1-based) in dimension `n`.
    """
    return 1 << (n - i)


def mask_of(indices: Iterable[int], n: int) -> int:
    """ Mask of a set of automata.

    Raises
    ------
    DimensionError
        Index out of range.
    """
    mask = 0
    for i in indices:
        if not 1 <= i <= n:
            raise DimensionError("automaton index {} out of range 1..{}".format(i, n))
        mask |= bit(i, n)
    return mask


def indices_of(mask: int, n: int) -> frozenset[int]:
    """ Set of automata of a mask.
    """
    return frozenset(i for i in range(1, n + 1) if mask & bit(i, n))


def submasks(mask: int) -> Iterator[int]:
    """ All submasks of `mask`, the empty one included.
    """
    sub = mask
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & mask


class ConfigSet:
    """ Set of configurations of dimension n.

    Note
    ----
    Dense representation: bit `x` of `bits` is set iff configuration `x`
    belongs to the set. Values are immutable.

    Attributes
    ----------
    n : int
        Dimension.
    bits : int
        Membership bit vector over the 2^n codes.
    """

    __slots__ = "n", "bits"

    def __init__(self, n: int, codes: Iterable[int] = ()) -> None:
        """ Initializer.

        Parameters
        ----------
        n : int
            Dimension.
        codes : Iterable of int, optional
            Member configurations.
        """
        bits = 0
        size = 1 << n
        for x in codes:
            if not 0 <= x < size:
                raise DimensionError("configuration code {} out of range for dimension {}".format(x, n))
            bits |= 1 << x

        self.n: int = n
        self.bits: int = bits

    @classmethod
    def from_bits(cls, n: int, bits: int) -> ConfigSet:
        configurations = cls.__new__(cls)
        configurations.n = n
        configurations.bits = bits
        return configurations

    @classmethod
    def empty(cls, n: int) -> ConfigSet:
        return cls.from_bits(n, 0)

    @classmethod
    def full(cls, n: int) -> ConfigSet:
        return cls.from_bits(n, (1 << (1 << n)) - 1)

    @classmethod
    def singleton(cls, x: int, n: int) -> ConfigSet:
        return cls(n, (x,))

    @classmethod
    def from_texts(cls, texts: Iterable[str], n: int) -> ConfigSet:
        return cls(n, (config_from_text(text, n) for text in texts))

    def __contains__(self, x: int) -> bool:
        return x >= 0 and (self.bits >> x) & 1 == 1

    def __iter__(self) -> Iterator[int]:
        """ Members in ascending code order.
        """
        bits = self.bits
        while bits:
            low = bits & -bits
            yield low.bit_length() - 1
            bits ^= low

    def __len__(self) -> int:
        return self.bits.bit_count()

    def __bool__(self) -> bool:
        return self.bits != 0

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ConfigSet):
            return NotImplemented
        return self.n == other.n and self.bits == other.bits

    def __hash__(self) -> int:
        return hash((self.n, self.bits))

    def _check(self, other: ConfigSet) -> None:
        if self.n != other.n:
            raise DimensionError("dimension mismatch: {} and {}".format(self.n, other.n))

    def __or__(self, other: ConfigSet) -> ConfigSet:
        self._check(other)
        return ConfigSet.from_bits(self.n, self.bits | other.bits)

    def __and__(self, other: ConfigSet) -> ConfigSet:
        self._check(other)
        return ConfigSet.from_bits(self.n, self.bits & other.bits)

    def __sub__(self, other: ConfigSet) -> ConfigSet:
        self._check(other)
        return ConfigSet.from_bits(self.n, self.bits & ~other.bits)

    def __le__(self, other: ConfigSet) -> bool:
        self._check(other)
        return self.bits & ~other.bits == 0

    def __lt__(self, other: ConfigSet) -> bool:
        return self <= other and self.bits != other.bits

    def __ge__(self, other: ConfigSet) -> bool:
        return other <= self

    def __gt__(self, other: ConfigSet) -> bool:
        return other < self

    def isdisjoint(self, other: ConfigSet) -> bool:
        self._check(other)
        return self.bits & other.bits == 0

    def texts(self) -> list[str]:
        """ Members in text form, ascending.
        """
        return [config_to_text(x, self.n) for x in self]

    def __str__(self) -> str:
        return "{{{}}}".format(','.join(self.texts()))

    def __repr__(self) -> str:
        return "ConfigSet({}, {})".format(self.n, self)
