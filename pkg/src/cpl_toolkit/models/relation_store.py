# -*- coding: utf-8 -*-
from typing import Dict, FrozenSet, List, Set, Tuple

import networkx as nx

from .concept import ConceptId, Relation, RelationKind
from .scene import Scene

Edge = Tuple[ConceptId, ConceptId]


class RelationStore(object):
    """
    Every relation of a scene merged into one place, each edge remembering the rules that declared it.
    """

    def __init__(self) -> None:
        """
        Initialize the class with parameters.
        """
        self.sub_edges = {}  # type: Dict[Edge, List[str]]
        self.assoc_edges = {}  # type: Dict[FrozenSet[ConceptId], List[str]]
        self.contained_edges = {}  # type: Dict[Edge, List[str]]

    def __str__(self) -> str:
        return "RelationStore(sub_edges={0}, assoc_edges={1}, contained_edges={2})".format(
            len(self.sub_edges),
            len(self.assoc_edges),
            len(self.contained_edges),
        )

    __repr__ = __str__

    @staticmethod
    def from_scene(scene: Scene) -> 'RelationStore':
        store = RelationStore()
        for label, rule in zip(scene.rule_labels, scene.rules):
            for relation in rule.relations:
                store.add(relation, label)
        return store

    def add(self, relation: Relation, label: str) -> None:
        """
        Merges a relation into the store. Identical relations from several rules collapse into one edge.
        :param relation: Normalized relation.
        :param label: Label of the declaring rule.
        :return: None
        """
        if relation.kind == RelationKind.SUB_CONCEPT:
            origins = self.sub_edges.setdefault((relation.left, relation.right), [])
        elif relation.kind == RelationKind.ASSOCIATION:
            origins = self.assoc_edges.setdefault(frozenset((relation.left, relation.right)), [])
        else:
            origins = self.contained_edges.setdefault((relation.left, relation.right), [])
        if label not in origins:
            origins.append(label)

    @staticmethod
    def _graph(edges: Dict[Edge, List[str]]) -> nx.DiGraph:
        graph = nx.DiGraph()
        for (child, parent), origins in edges.items():
            graph.add_edge(child, parent, rules=origins)
        return graph

    def sub_graph(self) -> nx.DiGraph:
        """
        Sub-concept edges as a directed graph, child -> parent.
        :return: Graph with the declaring rules under the `rules` edge attribute.
        """
        return self._graph(self.sub_edges)

    def contained_graph(self) -> nx.DiGraph:
        return self._graph(self.contained_edges)

    def associated(self, a: ConceptId, b: ConceptId) -> bool:
        return frozenset((a, b)) in self.assoc_edges

    def is_sub_concept(self, child: ConceptId, parent: ConceptId) -> bool:
        """
        Checks the transitive sub-concept relation.
        :param child: Candidate sub-concept.
        :param parent: Candidate super-concept.
        :return: True iff a chain of sub-concept edges leads from child to parent.
        """
        graph = self.sub_graph()
        if child == parent or child not in graph or parent not in graph:
            return False
        return nx.has_path(graph, child, parent)

    def sub_concepts_of(self, concept: ConceptId) -> Set[ConceptId]:
        graph = self.sub_graph()
        if concept not in graph:
            return set()
        return nx.ancestors(graph, concept)
