"""
Expression Module

Input file format: .bn
One declaration per line, `name: formula`, where formulas use
`!` (not), `&` (and), `|` (or), parentheses, and the constants `0` and `1`.
Comments start with `#` and run to the end of the line.

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

import re
from abc import ABC, abstractmethod
from dataclasses import dataclass
from typing import Callable, Optional, Sequence

import numpy as np

from updatron.exceptions import ModelError, ParseError

IDENTIFIER = re.compile(r'[A-Za-z_][A-Za-z0-9_]*')

TOKENS = re.compile(r'\s*(?:(?P<name>[A-Za-z_][A-Za-z0-9_]*)|(?P<const>[01])|(?P<op>[!&|()])|(?P<bad>\S))')

PRECEDENCE_OR = 1
PRECEDENCE_AND = 2
PRECEDENCE_NOT = 3
PRECEDENCE_ATOM = 4


class Expression(ABC):
    """ Boolean expression over the automata of a network.

    Note
    ----
    Variables are identified by their 1-based automaton index.
    """

    precedence: int = PRECEDENCE_ATOM

    @abstractmethod
    def evaluate(self, x: int, n: int) -> bool:
        """ Evaluate the expression on a configuration.

        Parameters
        ----------
        x : int
            Configuration code (automaton 1 is the most significant bit).
        n : int
            Dimension.

        Returns
        -------
        bool
            Value of the expression.
        """
        pass

    @abstractmethod
    def vectorize(self, columns: np.ndarray) -> np.ndarray:
        """ Evaluate the expression on a batch of configurations.

        Parameters
        ----------
        columns : np.ndarray
            Boolean array of shape (n, m), row i-1 holding the states of automaton i.

        Returns
        -------
        np.ndarray
            Boolean array of shape (m,).
        """
        pass

    @abstractmethod
    def to_text(self, names: Optional[Sequence[str]] = None) -> str:
        """ Expression to .bn format.

        Parameters
        ----------
        names : Sequence of str, optional
            Automaton names (defaults to `x1`, ..., `xn`).

        Returns
        -------
        str
            .bn format, with the minimal parentheses.
        """
        pass

    @abstractmethod
    def variables(self) -> frozenset[int]:
        """ Automaton indices occurring in the expression.
        """
        pass

    def __str__(self) -> str:
        return self.to_text()

    def _child_text(self, child: Expression, names: Optional[Sequence[str]], strict: bool = False) -> str:
        if child.precedence < self.precedence or (strict and child.precedence == self.precedence):
            return "({})".format(child.to_text(names))
        return child.to_text(names)


@dataclass(frozen=True)
class Const(Expression):
    """ Boolean constant.

    Attributes
    ----------
    value : bool
        A boolean constant.
    """
    value: bool

    def evaluate(self, x: int, n: int) -> bool:
        return self.value

    def vectorize(self, columns: np.ndarray) -> np.ndarray:
        return np.full(columns.shape[1], self.value, dtype=bool)

    def to_text(self, names: Optional[Sequence[str]] = None) -> str:
        return '1' if self.value else '0'

    def variables(self) -> frozenset[int]:
        return frozenset()


@dataclass(frozen=True)
class Var(Expression):
    """ Automaton state.

    Attributes
    ----------
    index : int
        Automaton index (1-based).
    """
    index: int

    def evaluate(self, x: int, n: int) -> bool:
        return bool((x >> (n - self.index)) & 1)

    def vectorize(self, columns: np.ndarray) -> np.ndarray:
        return columns[self.index - 1]

    def to_text(self, names: Optional[Sequence[str]] = None) -> str:
        return names[self.index - 1] if names is not None else "x{}".format(self.index)

    def variables(self) -> frozenset[int]:
        return frozenset({self.index})


@dataclass(frozen=True)
class Not(Expression):
    """ Negation.

    Attributes
    ----------
    operand : Expression
        Negated expression.
    """
    operand: Expression
    precedence = PRECEDENCE_NOT

    def evaluate(self, x: int, n: int) -> bool:
        return not self.operand.evaluate(x, n)

    def vectorize(self, columns: np.ndarray) -> np.ndarray:
        return np.logical_not(self.operand.vectorize(columns))

    def to_text(self, names: Optional[Sequence[str]] = None) -> str:
        return "!{}".format(self._child_text(self.operand, names))

    def variables(self) -> frozenset[int]:
        return self.operand.variables()


@dataclass(frozen=True)
class And(Expression):
    """ Conjunction (left-associative).

    Attributes
    ----------
    left : Expression
        Left operand.
    right : Expression
        Right operand.
    """
    left: Expression
    right: Expression
    precedence = PRECEDENCE_AND

    def evaluate(self, x: int, n: int) -> bool:
        return self.left.evaluate(x, n) and self.right.evaluate(x, n)

    def vectorize(self, columns: np.ndarray) -> np.ndarray:
        return np.logical_and(self.left.vectorize(columns), self.right.vectorize(columns))

    def to_text(self, names: Optional[Sequence[str]] = None) -> str:
        return "{} & {}".format(self._child_text(self.left, names), self._child_text(self.right, names, strict=True))

    def variables(self) -> frozenset[int]:
        return self.left.variables() | self.right.variables()


@dataclass(frozen=True)
class Or(Expression):
    """ Disjunction (left-associative).

    Attributes
    ----------
    left : Expression
        Left operand.
    right : Expression
        Right operand.
    """
    left: Expression
    right: Expression
    precedence = PRECEDENCE_OR

    def evaluate(self, x: int, n: int) -> bool:
        return self.left.evaluate(x, n) or self.right.evaluate(x, n)

    def vectorize(self, columns: np.ndarray) -> np.ndarray:
        return np.logical_or(self.left.vectorize(columns), self.right.vectorize(columns))

    def to_text(self, names: Optional[Sequence[str]] = None) -> str:
        return "{} | {}".format(self._child_text(self.left, names), self._child_text(self.right, names, strict=True))

    def variables(self) -> frozenset[int]:
        return self.left.variables() | self.right.variables()


def evaluate(expr: Expression, x: int, n: int) -> bool:
    """ Evaluate `expr` on configuration `x` of dimension `n`.
    """
    return expr.evaluate(x, n)


@dataclass(frozen=True)
class ParsedModel:
    """ Parsed .bn model.

    Attributes
    ----------
    names : tuple of str
        Automaton names, in declaration order.
    expressions : tuple of Expression
        Local function of each automaton.
    """
    names: tuple[str, ...]
    expressions: tuple[Expression, ...]

    @property
    def n(self) -> int:
        return len(self.names)

    def __str__(self) -> str:
        return ''.join("{}: {}\n".format(name, expr.to_text(self.names)) for name, expr in zip(self.names, self.expressions))


class _FormulaParser:
    """ Recursive descent parser for one formula.

    Grammar
    -------
    disj  := conj ('|' conj)*
    conj  := unary ('&' unary)*
    unary := '!' unary | atom
    atom  := '0' | '1' | name | '(' disj ')'
    """

    def __init__(self, text: str, resolve: Callable[[str], Optional[int]], line: int, offset: int) -> None:
        self.resolve = resolve
        self.line = line
        self.offset = offset
        self.tokens: list[tuple[str, str, int]] = []
        self.position = 0

        for match in TOKENS.finditer(text):
            kind = match.lastgroup
            if kind is None:
                continue
            if kind == 'bad':
                raise ParseError("unexpected character '{}'".format(match.group(kind)), line, offset + match.start(kind) + 1)
            self.tokens.append((kind, match.group(kind), offset + match.start(kind) + 1))

        self.end_column = offset + len(text.rstrip()) + 1

    def parse(self) -> Expression:
        if not self.tokens:
            raise ParseError("empty formula", self.line, self.end_column)

        expr = self.disjunction()

        if self.position < len(self.tokens):
            _, value, column = self.tokens[self.position]
            raise ParseError("unexpected token '{}'".format(value), self.line, column)

        return expr

    def peek(self) -> Optional[str]:
        return self.tokens[self.position][1] if self.position < len(self.tokens) else None

    def advance(self) -> tuple[str, str, int]:
        if self.position >= len(self.tokens):
            raise ParseError("unexpected end of formula", self.line, self.end_column)
        token = self.tokens[self.position]
        self.position += 1
        return token

    def disjunction(self) -> Expression:
        expr = self.conjunction()
        while self.peek() == '|':
            self.advance()
            expr = Or(expr, self.conjunction())
        return expr

    def conjunction(self) -> Expression:
        expr = self.unary()
        while self.peek() == '&':
            self.advance()
            expr = And(expr, self.unary())
        return expr

    def unary(self) -> Expression:
        if self.peek() == '!':
            self.advance()
            return Not(self.unary())
        return self.atom()

    def atom(self) -> Expression:
        kind, value, column = self.advance()

        if kind == 'const':
            return Const(value == '1')

        if kind == 'name':
            index = self.resolve(value)
            if index is None:
                raise ParseError("undeclared name '{}'".format(value), self.line, column)
            return Var(index)

        if value == '(':
            expr = self.disjunction()
            _, closing, closing_column = self.advance()
            if closing != ')':
                raise ParseError("expected ')' but found '{}'".format(closing), self.line, closing_column)
            return expr

        raise ParseError("unexpected token '{}'".format(value), self.line, column)


def parse_model(text: str) -> ParsedModel:
    """ Model parser.

    Parameters
    ----------
    text : str
        Content of a .bn file.

    Returns
    -------
    ParsedModel
        Automaton names and local functions; forward references are allowed.

    Raises
    ------
    ParseError
        Syntax error or reference to an undeclared name.
    ModelError
        Duplicate automaton name or empty model.
    """
    declarations: list[tuple[int, str, int]] = []
    indices: dict[str, int] = {}

    for line_number, line in enumerate(text.splitlines(), start=1):
        content = line.split('#', 1)[0]
        if not content.strip():
            continue

        name, colon, _ = content.partition(':')
        if not colon:
            raise ParseError("missing ':' in declaration", line_number, len(content.rstrip()) + 1)

        name = name.strip()
        if not IDENTIFIER.fullmatch(name):
            raise ParseError("invalid automaton name '{}'".format(name), line_number, len(content) - len(content.lstrip()) + 1)

        if name in indices:
            raise ModelError("duplicate automaton name '{}' (line {})".format(name, line_number))

        indices[name] = len(indices) + 1
        declarations.append((line_number, content, content.index(':') + 1))

    if not declarations:
        raise ModelError("empty model")

    expressions = tuple(_FormulaParser(content[offset:], indices.get, line_number, offset).parse() for line_number, content, offset in declarations)

    return ParsedModel(tuple(indices), expressions)


def parse_formula(text: str, names: Sequence[str]) -> Expression:
    """ Parse a single formula against known automaton names.
    """
    indices = {name: index for index, name in enumerate(names, start=1)}
    return _FormulaParser(text, indices.get, 1, 0).parse()
