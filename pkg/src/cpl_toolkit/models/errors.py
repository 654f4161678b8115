# -*- coding: utf-8 -*-
from typing import List, TYPE_CHECKING

if TYPE_CHECKING:
    from .diagnostic import Diagnostic


class CplError(Exception):
    """
    Base class for every error raised by the toolkit.
    """
    pass


class RuleError(CplError):
    """
    Raised when a relation or a rule is constructed with an invalid shape.
    """
    pass


class SceneParseError(CplError):
    """
    Raised when a scene script fails to parse. Carries every diagnostic found.
    """

    def __init__(self, diagnostics: List['Diagnostic']) -> None:
        """
        Initialize the class with parameters.
        :param diagnostics: Diagnostics explaining the failure, sorted by position.
        """
        self.diagnostics = diagnostics
        super(SceneParseError, self).__init__(
            "; ".join(diagnostic.message for diagnostic in diagnostics) or "scene failed to parse"
        )


class EmptyEnsembleError(CplError):
    pass


class MemoryEntryError(CplError):
    """
    Raised when a memory entry is invalid.
    """
    pass


class DuplicateEntryError(MemoryEntryError):
    pass


class MemoryFormatError(CplError):
    """
    Raised when a memory directory holds a file that is not a valid entry.
    """
    pass


class InvalidQueryError(CplError):
    pass
