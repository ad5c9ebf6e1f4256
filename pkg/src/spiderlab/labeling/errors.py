# SPDX-FileCopyrightText: 2025 spiderlab Contributors
# SPDX-License-Identifier: MIT
"""
Exceptions raised by the labeling package.

Input problems derive from ValueError so callers can treat them like any other
invalid argument. ConstructionError marks a construction that went wrong
internally and carries the partial or failing labeling for inspection.
"""

from typing import Any, Optional


class ForestFormatError(ValueError):
    """A forest document could not be parsed."""

    def __init__(self, message: str, line: Optional[int] = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class SchemeNotApplicableError(ValueError):
    """A scheme was asked to label a forest or shift outside its hypothesis."""

    def __init__(self, message: str, report: Any = None):
        self.report = report
        super().__init__(message)


class LabelingMismatchError(ValueError):
    """A labeling does not address exactly the edges of its forest."""


class OracleBudgetError(ValueError):
    """The exhaustive search was asked to handle too many edges."""


class ConstructionError(RuntimeError):
    """A labeling scheme produced an invalid result."""

    def __init__(self, message: str, labeling: Any = None, repairs: Any = None):
        self.labeling = labeling
        self.repairs = repairs
        super().__init__(message)
