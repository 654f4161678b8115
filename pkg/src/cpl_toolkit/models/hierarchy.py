# -*- coding: utf-8 -*-
from enum import Enum
from typing import List, Optional, Set, Tuple

import attr
import networkx as nx

from .concept import ConceptId
from .diagnostic import Diagnostic
from .errors import CplError


class Ensemble(object):
    """
    Fully-connected weighted graph with exactly one node per concept. Weights equal the frequency grid counts.
    """

    def __init__(self, graph: nx.Graph) -> None:
        """
        Initialize the class with parameters.
        :param graph: Undirected graph whose nodes are concepts and whose edges carry a `weight`.
        """
        self.graph = graph

    def __str__(self) -> str:
        return "Ensemble(concepts={0}, links={1})".format(list(self.graph.nodes), self.graph.number_of_edges())

    __repr__ = __str__

    @property
    def concepts(self) -> List[ConceptId]:
        return list(self.graph.nodes)

    @property
    def size(self) -> int:
        return self.graph.number_of_nodes()

    def weight(self, a: ConceptId, b: ConceptId) -> int:
        if not self.graph.has_edge(a, b):
            return 0
        return self.graph[a][b]['weight']

    def strength(self, concept: ConceptId) -> int:
        return int(self.graph.degree(concept, weight='weight'))


class TraceEventKind(str, Enum):
    """
    Enum representing the kind of a construction step.
    """

    ENSEMBLE = 'ensemble'
    NODE = 'node'
    EDGE = 'edge'


@attr.s(frozen=True, slots=True, repr=False)
class TraceEvent(object):
    """
    One construction step. Ensemble events list the rule's left-hand side concepts, node events one concept and
    edge events the (parent, child) pair.
    """
    kind = attr.ib(type=TraceEventKind)
    rule = attr.ib(type=Optional[str])
    concepts = attr.ib(type=Tuple[ConceptId, ...], converter=tuple)

    def __str__(self) -> str:
        joiner = " -> " if self.kind == TraceEventKind.EDGE else ", "
        return "{0} {1}: {2}".format(
            self.kind.value,
            self.rule if self.rule is not None else "-",
            joiner.join(concept.name for concept in self.concepts),
        )

    __repr__ = __str__


@attr.s(frozen=True, slots=True, repr=False)
class ConstructionTrace(object):
    events = attr.ib(type=Tuple[TraceEvent, ...], converter=tuple)

    def __str__(self) -> str:
        return "\n".join(str(event) for event in self.events)

    __repr__ = __str__

    def ensemble_pairs_before(self, position: int) -> Set[frozenset]:
        """
        Collects the concept pairs updated in the ensemble before a given event.
        :param position: Index of the event in the trace.
        :return: Unordered concept pairs.
        """
        pairs = set()
        for event in self.events[:position]:
            if event.kind != TraceEventKind.ENSEMBLE:
                continue
            for i, a in enumerate(event.concepts):
                for b in event.concepts[i + 1:]:
                    pairs.add(frozenset((a, b)))
        return pairs


@attr.s(frozen=True, slots=True, repr=False)
class Hierarchy(object):
    """
    Single-node-per-concept DAG rooted at the most used concept. Nodes and edges keep their insertion order.
    """
    root = attr.ib(type=ConceptId)
    nodes = attr.ib(type=Tuple[ConceptId, ...], converter=tuple)
    edges = attr.ib(type=Tuple[Tuple[ConceptId, ConceptId], ...], converter=tuple)

    def __attrs_post_init__(self) -> None:
        graph = self.to_graph()
        if not nx.is_directed_acyclic_graph(graph):
            raise CplError("hierarchy rooted at {0} has a cycle".format(self.root))
        unreachable = set(graph.nodes) - nx.descendants(graph, self.root) - {self.root}
        if unreachable:
            raise CplError("hierarchy nodes {0} are not reachable from {1}".format(
                sorted(concept.name for concept in unreachable),
                self.root,
            ))

    def __str__(self) -> str:
        return "Hierarchy(root={0}, edges={1})".format(
            self.root,
            ["{0}->{1}".format(parent.name, child.name) for parent, child in self.edges],
        )

    __repr__ = __str__

    def to_graph(self) -> nx.DiGraph:
        graph = nx.DiGraph()
        graph.add_nodes_from(self.nodes)
        graph.add_edges_from(self.edges)
        return graph

    def parents(self, concept: ConceptId) -> List[ConceptId]:
        return [parent for parent, child in self.edges if child == concept]

    def children(self, concept: ConceptId) -> List[ConceptId]:
        return [child for parent, child in self.edges if parent == concept]

    def leaves(self) -> List[ConceptId]:
        return [node for node in self.nodes if not self.children(node)]


@attr.s(frozen=True, slots=True)
class HierarchyResult(object):
    hierarchy = attr.ib(type=Hierarchy)
    trace = attr.ib(type=ConstructionTrace)
    diagnostics = attr.ib(type=Tuple[Diagnostic, ...], converter=tuple, default=())
