# -*- coding: utf-8 -*-
from enum import Enum
from typing import Optional, Tuple

import attr

from .concept import SourceLocation

_COLORS = {'error': '\x1b[31m', 'warning': '\x1b[33m'}
_RESET = '\x1b[0m'


class Severity(str, Enum):

    ERROR = 'error'
    WARNING = 'warning'


@attr.s(frozen=True, slots=True, repr=False)
class Diagnostic(object):
    """
    A finding about a scene script. Scene-level findings may have no source position.
    """
    severity = attr.ib(type=Severity)
    message = attr.ib(type=str)
    line = attr.ib(type=Optional[int], default=None)
    column = attr.ib(type=Optional[int], default=None)
    span_length = attr.ib(type=int, default=0)
    rules = attr.ib(type=Tuple[str, ...], converter=tuple, default=())

    def __str__(self) -> str:
        return self.format()

    __repr__ = __str__

    @staticmethod
    def at(
            severity: Severity,
            message: str,
            location: Optional[SourceLocation],
            rules: Tuple[str, ...] = (),
    ) -> 'Diagnostic':
        """
        Creates a diagnostic pointing at a source location, if there is one.
        :param severity: Severity of the finding.
        :param message: Human-readable message.
        :param location: Where the finding points to.
        :param rules: Labels of the rules the finding cites.
        :return: The diagnostic.
        """
        if location is None:
            return Diagnostic(severity, message, rules=rules)
        return Diagnostic(severity, message, location.line, location.column, location.span_length, rules)

    @property
    def is_error(self) -> bool:
        return self.severity == Severity.ERROR

    @property
    def sort_key(self) -> Tuple[int, int, str]:
        return self.line or 0, self.column or 0, self.message

    def format(self, path: Optional[str] = None, color: bool = False) -> str:
        """
        Renders the diagnostic the way compilers do: `path:line:col: severity: message [rules]`.
        :param path: Script path to prefix, if any.
        :param color: Whether to color the severity with ANSI escapes.
        :return: One line of text.
        """
        severity = self.severity.value
        if color:
            severity = "{0}{1}{2}".format(_COLORS[severity], severity, _RESET)

        prefix = [] if path is None else [path]
        if self.line is not None:
            prefix += [str(self.line), str(self.column)]

        text = "{0}: {1}".format(severity, self.message)
        if prefix:
            text = "{0}: {1}".format(":".join(prefix), text)
        if self.rules:
            text = "{0} [{1}]".format(text, ", ".join(self.rules))
        return text
