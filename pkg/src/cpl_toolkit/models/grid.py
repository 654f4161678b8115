# -*- coding: utf-8 -*-
from typing import Dict, List, Optional, Tuple, Union

import attr
import numpy as np

from .concept import ConceptId

ConceptRef = Union[ConceptId, str]


class FrequencyGrid(object):
    """
    Symmetric co-occurrence counts between concepts, with an empty diagonal.
    """

    def __init__(self, concepts: List[ConceptId], counts: Optional[np.ndarray] = None) -> None:
        """
        Initialize the class with parameters.
        :param concepts: Concepts in first-appearance order.
        :param counts: Square count matrix. Defaults to all zeros.
        """
        self.concepts = tuple(concepts)
        size = len(self.concepts)
        self.counts = np.zeros((size, size), dtype=np.int64) if counts is None else np.array(counts, dtype=np.int64)
        self._index = {}  # type: Dict[str, int]
        for i, concept in enumerate(self.concepts):
            self._index[concept.name] = i

    def __str__(self) -> str:
        return "FrequencyGrid(concepts={0}, total={1})".format(list(self.concepts), self.total)

    __repr__ = __str__

    def __eq__(self, other: 'FrequencyGrid') -> bool:
        return self.concepts == other.concepts and np.array_equal(self.counts, other.counts)

    @property
    def size(self) -> int:
        return len(self.concepts)

    @property
    def total(self) -> int:
        return int(self.counts.sum())

    def index(self, concept: ConceptRef) -> int:
        return self._index[concept.name if isinstance(concept, ConceptId) else concept]

    def increment(self, a: ConceptRef, b: ConceptRef) -> None:
        i, j = self.index(a), self.index(b)
        if i == j:
            return
        self.counts[i, j] += 1
        self.counts[j, i] += 1

    def count(self, a: ConceptRef, b: ConceptRef) -> int:
        return int(self.counts[self.index(a), self.index(b)])

    def strength(self, concept: ConceptRef) -> int:
        return int(self.counts[self.index(concept)].sum())

    def pairs(self) -> List[Tuple[ConceptId, ConceptId, int]]:
        """
        Nonzero unordered pairs in grid order.
        :return: Triples (first, second, count).
        """
        rows, columns = np.nonzero(np.triu(self.counts, k=1))
        return [
            (self.concepts[i], self.concepts[j], int(self.counts[i, j]))
            for i, j in zip(rows.tolist(), columns.tolist())
        ]


@attr.s(frozen=True, slots=True, repr=False)
class SecondaryLink(object):
    """
    A count relation between concepts of two different clusters. `left` precedes `right` by name.
    """
    left = attr.ib(type=ConceptId)
    right = attr.ib(type=ConceptId)
    count = attr.ib(type=int)

    def __str__(self) -> str:
        return "{0} - {1}: {2}".format(self.left.name, self.right.name, self.count)

    __repr__ = __str__

    @property
    def names(self) -> frozenset:
        return frozenset((self.left.name, self.right.name))


@attr.s(frozen=True, slots=True, repr=False)
class Clustering(object):
    """
    A partition of the grid's concepts, plus the inter-cluster links once they are computed.
    """
    clusters = attr.ib(type=Tuple[Tuple[ConceptId, ...], ...], converter=tuple)
    secondary_links = attr.ib(type=Tuple[SecondaryLink, ...], converter=tuple, default=())

    def __str__(self) -> str:
        return "Clustering(clusters={0}, secondary_links={1})".format(
            [[concept.name for concept in cluster] for cluster in self.clusters],
            list(self.secondary_links),
        )

    __repr__ = __str__

    def cluster_of(self, concept: ConceptRef) -> int:
        """
        Finds the cluster a concept belongs to.
        :param concept: Concept or its name.
        :return: Position of the cluster in `clusters`.
        """
        name = concept.name if isinstance(concept, ConceptId) else concept
        for i, cluster in enumerate(self.clusters):
            if any(member.name == name for member in cluster):
                return i
        raise KeyError(name)

    def as_name_sets(self) -> List[frozenset]:
        return [frozenset(member.name for member in cluster) for cluster in self.clusters]
