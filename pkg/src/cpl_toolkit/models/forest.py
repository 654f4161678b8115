# -*- coding: utf-8 -*-
from enum import Enum
from typing import Iterator, List, Optional, Tuple

import attr

from .concept import ConceptId


class PlacementKind(str, Enum):
    """
    Enum representing why a concept was placed under another one.
    """

    SUB_CONCEPT = 'sub_concept'
    CONTAINED_IN = 'contained_in'
    OUTPUT = 'output'
    ROOT = 'root'


@attr.s(frozen=True, slots=True, repr=False)
class Placement(object):
    """
    A request to put `child` under `parent`, created by a relation, a rule output or the scene root.
    """
    child = attr.ib(type=ConceptId)
    parent = attr.ib(type=ConceptId)
    kind = attr.ib(type=PlacementKind)
    rule = attr.ib(type=Optional[str], default=None)
    order = attr.ib(type=int, default=0, eq=False)

    def __str__(self) -> str:
        return "Placement({0} under {1}, kind={2}, rule={3})".format(
            self.child.name,
            self.parent.name,
            self.kind.value,
            self.rule,
        )

    __repr__ = __str__


class Occurrence(object):
    """
    One placement of a concept in the forest. A concept may occur several times, at most once per parent concept.
    """

    def __init__(
            self,
            index: int,
            concept: ConceptId,
            parent: Optional['Occurrence'],
            origin: Optional[Placement],
            is_home: bool,
    ) -> None:
        """
        Initialize the class with parameters.
        :param index: Creation index, unique within the forest.
        :param concept: The concept this occurrence stands for.
        :param parent: The parent occurrence, None for a root.
        :param origin: The placement that created the occurrence, None for a root.
        :param is_home: Whether this is the occurrence that carries the concept's own children.
        """
        self.index = index
        self.concept = concept
        self.parent = parent
        self.origin = origin
        self.is_home = is_home
        self._children = []  # type: List[Occurrence]

    def __str__(self) -> str:
        return "Occurrence({0} under {1})".format(
            self.concept.name,
            None if self.parent is None else self.parent.concept.name,
        )

    __repr__ = __str__

    @property
    def children(self) -> Tuple['Occurrence', ...]:
        return tuple(self._children)

    @property
    def parent_concept(self) -> Optional[ConceptId]:
        return None if self.parent is None else self.parent.concept

    def add_child(self, child: 'Occurrence') -> None:
        self._children.append(child)

    def path(self) -> List['Occurrence']:
        """
        Gets the occurrences from the forest root down to this one.
        :return: Root-first path.
        """
        path = [self]
        while path[-1].parent is not None:
            path.append(path[-1].parent)
        return list(reversed(path))

    def walk(self) -> Iterator['Occurrence']:
        yield self
        for child in self._children:
            yield from child.walk()


class OccurrenceForest(object):
    """
    The nested object set: concept trees whose leaves may repeat concepts placed elsewhere.
    """

    def __init__(self, roots: List[Occurrence], container: Optional[ConceptId] = None) -> None:
        """
        Initialize the class with parameters.
        :param roots: Root occurrences in placement order.
        :param container: The scene's outer-most concept, if the scene declares one.
        """
        self.roots = tuple(roots)
        self.container = container

    def __str__(self) -> str:
        return "OccurrenceForest(roots={0})".format([root.concept.name for root in self.roots])

    __repr__ = __str__

    def occurrences(self) -> List[Occurrence]:
        """
        All occurrences in pre-order.
        :return: Occurrences.
        """
        return [occurrence for root in self.roots for occurrence in root.walk()]

    def trees(self) -> List[Occurrence]:
        """
        Gets the tree roots: the children of the container when the scene has one, else the forest roots.
        :return: Tree root occurrences.
        """
        trees = []
        for root in self.roots:
            if self.container is not None and root.concept == self.container:
                trees.extend(root.children)
            else:
                trees.append(root)
        return trees

    def tree_of(self, occurrence: Occurrence) -> Occurrence:
        """
        Finds the tree an occurrence belongs to.
        :param occurrence: Occurrence in this forest.
        :return: Root occurrence of its tree. The container itself is its own tree.
        """
        path = occurrence.path()
        if self.container is not None and path[0].concept == self.container and len(path) > 1:
            return path[1]
        return path[0]


@attr.s(frozen=True, slots=True, repr=False, eq=False)
class CrossLink(object):
    """
    Two occurrences of the same concept under different parent concepts. `first` precedes `second` in pre-order.
    """
    first = attr.ib(type=Occurrence)
    second = attr.ib(type=Occurrence)

    def __str__(self) -> str:
        return "{0} ~ {1}".format(self.first, self.second)

    __repr__ = __str__

    @property
    def concept(self) -> ConceptId:
        return self.first.concept


class UniLinkKind(str, Enum):

    CROSS = 'cross'
    ENTRY = 'entry'


@attr.s(frozen=True, slots=True, repr=False)
class UniLink(object):
    """
    A one-way link: a root-down chain of concepts ending at an occurrence, continued at another occurrence of the
    same concept. Entry links continue into the process cycle that contains the concept.
    """
    source = attr.ib(type=Tuple[ConceptId, ...], converter=tuple)
    target = attr.ib(type=Tuple[ConceptId, ...], converter=tuple)
    kind = attr.ib(type=UniLinkKind, eq=False)

    def __str__(self) -> str:
        return "{0} -> {1}".format(
            ", ".join(concept.name for concept in self.source),
            ", ".join(concept.name for concept in self.target),
        )

    __repr__ = __str__

    @property
    def names(self) -> Tuple[Tuple[str, ...], Tuple[str, ...]]:
        return tuple(c.name for c in self.source), tuple(c.name for c in self.target)


@attr.s(frozen=True, slots=True, repr=False)
class ProcessCycle(object):
    """
    A closed concept walk, first and last concept equal, with the rules that enable it.
    """
    concepts = attr.ib(type=Tuple[ConceptId, ...], converter=tuple)
    rules = attr.ib(type=Tuple[str, ...], converter=tuple)

    def __str__(self) -> str:
        return "{0} [{1}]".format(" - ".join(concept.name for concept in self.concepts), ", ".join(self.rules))

    __repr__ = __str__

    @property
    def names(self) -> Tuple[str, ...]:
        return tuple(concept.name for concept in self.concepts)


@attr.s(frozen=True, slots=True, repr=False)
class CycleReport(object):
    uni_links = attr.ib(type=Tuple[UniLink, ...], converter=tuple)
    cycles = attr.ib(type=Tuple[ProcessCycle, ...], converter=tuple)

    def __str__(self) -> str:
        return "CycleReport(uni_links={0}, cycles={1})".format(list(self.uni_links), list(self.cycles))

    __repr__ = __str__
