# -*- coding: utf-8 -*-
import logging
from typing import Dict, List, Optional, Sequence, Tuple

import networkx as nx

from ..language import derive_result, reverse_pairs
from ..models import (
    ConceptId,
    ConstructionTrace,
    Diagnostic,
    EmptyEnsembleError,
    Ensemble,
    Hierarchy,
    HierarchyResult,
    Scene,
    Severity,
    TraceEvent,
    TraceEventKind,
)
from .abstract_analyzer import AbstractAnalyzer
from .frequency_grid import build_grid

logger = logging.getLogger(__name__)


def build_ensemble(scene: Scene) -> Ensemble:
    """
    Builds the ensemble: one node per concept used by a rule, one weighted link per co-occurring pair.
    :param scene: Consistent scene.
    :return: The ensemble, weights equal to the frequency grid counts.
    """
    grid = build_grid(scene)
    graph = nx.Graph()
    graph.add_nodes_from(grid.concepts)
    for a, b, count in grid.pairs():
        graph.add_edge(a, b, weight=count)
    return Ensemble(graph)


def select_root(ensemble: Ensemble) -> ConceptId:
    """
    Picks the most used concept, the one with the largest sum of link weights. Ties go to the smaller name.
    :param ensemble: Non-empty ensemble.
    :return: Root concept of the hierarchy.
    """
    if ensemble.size == 0:
        raise EmptyEnsembleError("cannot select a root from an empty ensemble")
    return min(ensemble.concepts, key=lambda concept: (-ensemble.strength(concept), concept.name))


class HierarchyBuilder(AbstractAnalyzer):
    """
    Grows the single-representation hierarchy from the root, one derived path per rule.

    Nodes and links are only added after the rule updated the ensemble. Each path is oriented so that the end
    closest to the root comes first. Paths sharing nothing with the hierarchy yet are retried after the others.
    Later rules of a reverse pair and self-loops add nothing.
    """

    def __init__(self) -> None:
        """
        Initialize the class with parameters.
        """
        self.graph = nx.DiGraph()
        self.root = None  # type: Optional[ConceptId]
        self.nodes = []  # type: List[ConceptId]
        self.edges = []  # type: List[Tuple[ConceptId, ConceptId]]
        self.events = []  # type: List[TraceEvent]

    def _add_node(self, concept: ConceptId, rule: Optional[str]) -> None:
        if concept in self.graph:
            return
        self.graph.add_node(concept)
        self.nodes.append(concept)
        self.events.append(TraceEvent(TraceEventKind.NODE, rule, [concept]))

    def _add_edge(self, parent: ConceptId, child: ConceptId, rule: str) -> None:
        self._add_node(child, rule)
        if self.graph.has_edge(parent, child) or nx.has_path(self.graph, child, parent):
            return
        self.graph.add_edge(parent, child)
        self.edges.append((parent, child))
        self.events.append(TraceEvent(TraceEventKind.EDGE, rule, [parent, child]))

    def _insert(self, path: Sequence[ConceptId], rule: str) -> bool:
        """
        Inserts a derived path output -> effector(s) -> source.
        :param path: Concepts of the derived term.
        :param rule: Label of the rule that derived it.
        :return: False when the path shares no concept with the hierarchy yet.
        """
        present = [i for i, concept in enumerate(path) if concept in self.graph]
        if not present:
            return False

        path = list(path)
        first, last = path[0] in self.graph, path[-1] in self.graph
        if first and last:
            depth = nx.single_source_shortest_path_length(self.graph, self.root)
            if depth.get(path[-1], 0) < depth.get(path[0], 0):
                path.reverse()
        elif last:
            path.reverse()
        elif not first:
            anchor = present[0]
            for i in range(anchor, 0, -1):
                self._add_edge(path[i], path[i - 1], rule)
            for i in range(anchor, len(path) - 1):
                self._add_edge(path[i], path[i + 1], rule)
            return True

        for parent, child in zip(path, path[1:]):
            if parent not in self.graph:
                continue
            self._add_edge(parent, child, rule)
        return True

    def process(self, scene: Scene, ensemble: Ensemble) -> HierarchyResult:
        """
        Builds the hierarchy and its construction trace.
        :param scene: Consistent scene.
        :param ensemble: Ensemble of the same scene.
        :return: Hierarchy, trace and a diagnostic naming rules that never connected to the root.
        """
        self.root = select_root(ensemble)
        self.graph = nx.DiGraph()
        self.nodes, self.edges, self.events = [], [], []
        self._add_node(self.root, None)

        labels = scene.rule_labels
        repeats = {j for _, j in reverse_pairs(scene.rules)}

        pending = []  # type: List[Tuple[str, Tuple[ConceptId, ...]]]
        for i, rule in enumerate(scene.rules):
            if rule.self_loop:
                continue
            self.events.append(TraceEvent(TraceEventKind.ENSEMBLE, labels[i], rule.concepts))
            if i in repeats:
                logger.debug("%s repeats an earlier rule, nothing to insert", labels[i])
                continue
            for path in derive_result(rule.outputs, rule.inputs):
                if not self._insert(path, labels[i]):
                    logger.debug("deferred %s from %s", ".".join(c.name for c in path), labels[i])
                    pending.append((labels[i], path))

        progress = True
        while pending and progress:
            progress = False
            for item in list(pending):
                if self._insert(item[1], item[0]):
                    pending.remove(item)
                    progress = True

        diagnostics = []
        if pending:
            stranded = []  # type: List[str]
            for label, _ in pending:
                if label not in stranded:
                    stranded.append(label)
            logger.warning("rules %s share no concept with the hierarchy", ", ".join(stranded))
            diagnostics.append(Diagnostic(
                Severity.ERROR,
                "rules {0} share no concept with the hierarchy rooted at {1}".format(", ".join(stranded), self.root),
                rules=stranded,
            ))

        hierarchy = Hierarchy(self.root, self.nodes, self.edges)
        return HierarchyResult(hierarchy, ConstructionTrace(self.events), diagnostics)


def build_hierarchy(scene: Scene, ensemble: Ensemble) -> HierarchyResult:
    return HierarchyBuilder().process(scene, ensemble)
