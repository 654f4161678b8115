# -*- coding: utf-8 -*-
from enum import Enum
from typing import Optional

import attr


@attr.s(frozen=True, slots=True)
class SourceLocation(object):
    """
    A position inside a scene script. Line and column are 1-based.
    """
    line = attr.ib(type=int)
    column = attr.ib(type=int)
    span_length = attr.ib(type=int, default=1)


@attr.s(frozen=True, slots=True, repr=False)
class ConceptId(object):
    """
    A declared concept. The optional abbreviation is what scripts usually write (`Pot as P`), reports use the name.
    """
    name = attr.ib(type=str)
    abbrev = attr.ib(type=Optional[str], default=None)
    location = attr.ib(type=Optional[SourceLocation], default=None, eq=False)

    @property
    def symbol(self) -> str:
        return self.abbrev if self.abbrev is not None else self.name

    def __str__(self) -> str:
        return self.name

    __repr__ = __str__


class RelationKind(str, Enum):
    """
    Enum representing the normalized relation kinds. The value is the surface operator.
    """

    SUB_CONCEPT = '<'
    ASSOCIATION = '-'
    CONTAINED_IN = 'in'


@attr.s(frozen=True, slots=True, repr=False)
class Relation(object):
    """
    A normalized relation between two distinct concepts. `SUB_CONCEPT(X, Y)` reads X < Y.
    """
    kind = attr.ib(type=RelationKind)
    left = attr.ib(type=ConceptId)
    right = attr.ib(type=ConceptId)
    location = attr.ib(type=Optional[SourceLocation], default=None, eq=False)

    def __str__(self) -> str:
        return "{0} {1} {2}".format(self.left.name, self.kind.value, self.right.name)

    __repr__ = __str__

    def format(self) -> str:
        return "{0} {1} {2}".format(self.left.symbol, self.kind.value, self.right.symbol)
