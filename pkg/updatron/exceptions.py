"""
Exceptions

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

from typing import Optional


class ModelError(ValueError):
    """ Malformed model (duplicate or undeclared name, empty model).
    """
    pass


class ParseError(ModelError):
    """ Syntax error in a model file.

    Attributes
    ----------
    line : int, optional
        Line of the offending token (1-based).
    column : int, optional
        Column of the offending token (1-based).
    """

    def __init__(self, message: str, line: Optional[int] = None, column: Optional[int] = None) -> None:
        """ Initializer.

        Parameters
        ----------
        message : str
            Error message.
        line : int, optional
            Line of the offending token.
        column : int, optional
            Column of the offending token.
        """
        self.line: Optional[int] = line
        self.column: Optional[int] = column

        if line is not None:
            message = "line {}, column {}: {}".format(line, column, message)

        super().__init__(message)


class DimensionError(ValueError):
    """ Dimension mismatch or automaton index out of range.
    """
    pass


class CapExceededError(ValueError):
    """ Dimension (or enumeration size) above the configured cap.
    """
    pass


class ModeError(ValueError):
    """ Unknown updating mode or invalid mode parameters.
    """
    pass


class InflationError(RuntimeError):
    """ Non-inflationary operator passed to an omega-iteration.
    """
    pass
