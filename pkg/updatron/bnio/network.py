"""
Boolean Network Module

Input file format: .bn (see `updatron.bnio.expression`)

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
from functools import reduce
from typing import Optional, Sequence

import numpy as np

from updatron.bnio.configuration import bit
from updatron.bnio.expression import And, Const, Expression, Not, Or, Var, parse_model
from updatron.exceptions import CapExceededError, DimensionError, ModelError

DIMENSION_CAP = 20
CAP_MARGIN = 2


class BooleanNetwork:
    """ Boolean network f: B^n -> B^n.

    Attributes
    ----------
    names : tuple of str
        Automaton names (automaton i is names[i - 1]).
    expressions : tuple of Expression
        Local function of each automaton.
    n : int
        Dimension.
    cap : int
        Dimension cap for whole-space operations.
    """

    def __init__(self, names: Sequence[str], expressions: Sequence[Expression], cap: int = DIMENSION_CAP) -> None:
        """ Initializer.

        Parameters
        ----------
        names : Sequence of str
            Automaton names, unique.
        expressions : Sequence of Expression
            Local functions, one per automaton.
        cap : int, optional
            Dimension cap for whole-space operations.

        Raises
        ------
        ModelError
            Duplicate names, arity mismatch or variable out of range.
        """
        if len(names) != len(expressions):
            raise ModelError("{} names for {} local functions".format(len(names), len(expressions)))

        if len(set(names)) != len(names):
            raise ModelError("duplicate automaton name")

        self.names: tuple[str, ...] = tuple(names)
        self.expressions: tuple[Expression, ...] = tuple(expressions)
        self.n: int = len(self.names)
        self.cap: int = cap

        for expr in self.expressions:
            if any(not 1 <= i <= self.n for i in expr.variables()):
                raise ModelError("variable out of range 1..{} in '{}'".format(self.n, expr))

        self._tables: Optional[np.ndarray] = None
        self._images: Optional[np.ndarray] = None

    @classmethod
    def from_text(cls, text: str, cap: int = DIMENSION_CAP) -> BooleanNetwork:
        model = parse_model(text)
        return cls(model.names, model.expressions, cap)

    @classmethod
    def from_file(cls, filename: str, cap: int = DIMENSION_CAP) -> BooleanNetwork:
        """ Boolean network from a .bn file.

        Raises
        ------
        FileNotFoundError
            Model file not found.
        """
        with open(filename, 'r') as fp:
            return cls.from_text(fp.read(), cap)

    @classmethod
    def from_truth_tables(cls, names: Sequence[str], tables: Sequence[Sequence[bool]], cap: int = DIMENSION_CAP) -> BooleanNetwork:
        """ Boolean network from explicit truth tables.

        Note
        ----
        Each local function is written as the disjunction of its minterms.

        Parameters
        ----------
        names : Sequence of str
            Automaton names.
        tables : Sequence of Sequence of bool
            tables[i - 1][x] is f_i(x).
        """
        n = len(names)
        expressions = []

        for table in tables:
            if len(table) != 1 << n:
                raise DimensionError("truth table of size {}, expected {}".format(len(table), 1 << n))

            minterms = [x for x in range(1 << n) if table[x]]

            if not minterms:
                expressions.append(Const(False))
            elif len(minterms) == 1 << n:
                expressions.append(Const(True))
            else:
                expressions.append(reduce(Or, [reduce(And, [Var(i) if x & bit(i, n) else Not(Var(i)) for i in range(1, n + 1)]) for x in minterms]))

        return cls(names, expressions, cap)

    def __str__(self) -> str:
        """ Boolean network to .bn format.
        """
        return ''.join("{}: {}\n".format(name, expr.to_text(self.names)) for name, expr in zip(self.names, self.expressions))

    def check_cap(self, cap: Optional[int] = None) -> None:
        """ Ensure the dimension allows a whole-space operation.

        Raises
        ------
        CapExceededError
            Dimension above the cap.
        """
        cap = self.cap if cap is None else cap
        if self.n > cap:
            raise CapExceededError("dimension {} exceeds the cap {}".format(self.n, cap))

    def index_of(self, name: str) -> int:
        """ 1-based index of an automaton name.
        """
        try:
            return self.names.index(name) + 1
        except ValueError:
            raise DimensionError("unknown automaton '{}'".format(name)) from None

    @property
    def truth_tables(self) -> np.ndarray:
        """ Compiled truth tables, shape (n, 2^n).

        Note
        ----
        Materialized on first use.
        """
        if self._tables is None:
            self.check_cap()
            if self.n > self.cap - CAP_MARGIN:
                log.warning("dimension {} close to the cap {}".format(self.n, self.cap))
            codes = np.arange(1 << self.n, dtype=np.int64)
            columns = np.array([(codes >> (self.n - i)) & 1 for i in range(1, self.n + 1)], dtype=bool).reshape(self.n, 1 << self.n)
            self._tables = np.array([expr.vectorize(columns) for expr in self.expressions], dtype=bool).reshape(self.n, 1 << self.n)
            log.info("truth tables compiled for {} automata".format(self.n))
        return self._tables

    @property
    def images(self) -> np.ndarray:
        """ f(x) for every configuration code x.
        """
        if self._images is None:
            weights = np.array([1 << (self.n - i) for i in range(1, self.n + 1)], dtype=np.int64)
            self._images = weights @ self.truth_tables.astype(np.int64) if self.n else np.zeros(1, dtype=np.int64)
        return self._images

    def _compiled(self) -> bool:
        return self.n <= self.cap

    def _check_configuration(self, x: int) -> None:
        if not 0 <= x < 1 << self.n:
            raise DimensionError("configuration code {} out of range for dimension {}".format(x, self.n))

    def local(self, i: int, x: int) -> bool:
        """ Local function f_i(x).

        Raises
        ------
        DimensionError
            Index or configuration out of range.
        """
        if not 1 <= i <= self.n:
            raise DimensionError("automaton index {} out of range 1..{}".format(i, self.n))
        self._check_configuration(x)

        if self._compiled():
            return bool(self.truth_tables[i - 1, x])
        return self.expressions[i - 1].evaluate(x, self.n)

    def apply(self, x: int) -> int:
        """ Global function f(x).

        Raises
        ------
        DimensionError
            Configuration out of range.
        """
        self._check_configuration(x)

        if self._compiled():
            return int(self.images[x])
        return sum(bit(i, self.n) for i, expr in enumerate(self.expressions, start=1) if expr.evaluate(x, self.n))


def local(net: BooleanNetwork, i: int, x: int) -> bool:
    return net.local(i, x)


def apply(net: BooleanNetwork, x: int) -> int:
    return net.apply(x)
