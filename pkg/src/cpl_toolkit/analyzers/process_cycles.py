# -*- coding: utf-8 -*-
import logging
from typing import Dict, List, Sequence, Tuple

import networkx as nx

from ..language import reverse_pairs
from ..models import (
    ConceptId,
    CycleReport,
    OccurrenceForest,
    ProcessCycle,
    RelationStore,
    Scene,
    UniLink,
    UniLinkKind,
)
from .abstract_analyzer import AbstractAnalyzer
from .concept_forest import cross_links

logger = logging.getLogger(__name__)


def build_process_graph(scene: Scene) -> nx.MultiDiGraph:
    """
    Builds the process graph: for every output and input chain, edges run source -> effector(s) -> output. Self-loop
    rules add a loop edge. Each edge carries the citing label under `rule`.
    :param scene: Parsed scene.
    :return: Directed multigraph over concepts.
    """
    graph = nx.MultiDiGraph()
    for label, rule in zip(scene.rule_labels, scene.rules):
        if rule.self_loop:
            graph.add_edge(rule.outputs[0], rule.outputs[0], rule=label)
            continue
        for output in rule.outputs:
            for chain in rule.inputs:
                walk = chain.elements + (output,)
                for a, b in zip(walk, walk[1:]):
                    graph.add_edge(a, b, rule=label)
    return graph


class CycleExtractor(AbstractAnalyzer):
    """
    Extracts process cycles and the uni-directional links that lead into them.

    Only walks enabled by a repeat are cycles: a reverse rule pair closes O -> effector -> O for both of its rules,
    and a self-loop on X closes X -> O -> effector -> X for every rule sourced from X or one of its sub-concepts.
    Cycle concepts are listed in reading order, output before effector, which runs against the process graph edges.
    """

    def __init__(self) -> None:
        """
        Initialize the class with parameters.
        """
        self._found = {}  # type: Dict[Tuple[ConceptId, ...], List[str]]

    def _record(self, concepts: Sequence[ConceptId], rules: Sequence[str]) -> None:
        enabling = self._found.setdefault(tuple(concepts), [])
        for label in rules:
            if label not in enabling:
                enabling.append(label)

    def _cycles(self, scene: Scene) -> List[ProcessCycle]:
        labels = scene.rule_labels
        rules = scene.rules

        for i, j in reverse_pairs(rules):
            for rule in (rules[i], rules[j]):
                output = rule.outputs[0]
                self._record([output] + list(reversed(rule.inputs[0].intermediates)) + [output], [labels[i], labels[j]])

        store = RelationStore.from_scene(scene)
        for k, loop in enumerate(rules):
            if not loop.self_loop:
                continue
            concept = loop.outputs[0]
            members = {concept} | store.sub_concepts_of(concept)
            for i, rule in enumerate(rules):
                if rule.self_loop:
                    continue
                for chain in rule.inputs:
                    if chain.source not in members:
                        continue
                    for output in rule.outputs:
                        if output == concept:
                            continue
                        walk = [concept, output] + list(reversed(chain.intermediates)) + [concept]
                        self._record(walk, [labels[i], labels[k]])

        order = scene.label_to_index
        return [
            ProcessCycle(concepts, sorted(enabling, key=lambda label: order[label]))
            for concepts, enabling in self._found.items()
        ]

    @staticmethod
    def _uni_links(forest: OccurrenceForest, cycles: List[ProcessCycle]) -> List[UniLink]:
        trees = forest.trees()

        def rank(occurrence) -> Tuple[int, int]:
            tree = forest.tree_of(occurrence)
            position = next((i for i, root in enumerate(trees) if root is tree), -1)
            return position, occurrence.index

        links = []
        for link in cross_links(forest):
            first, second = sorted((link.first, link.second), key=rank)
            first_path, second_path = first.path(), second.path()
            source = first_path[first_path.index(forest.tree_of(first)):]
            target = reversed(second_path[second_path.index(forest.tree_of(second)):])
            links.append(UniLink(
                [occurrence.concept for occurrence in source],
                [occurrence.concept for occurrence in target],
                UniLinkKind.CROSS,
            ))

        in_cycles = {concept for cycle in cycles for concept in cycle.concepts}
        entered = set()
        for occurrence in forest.occurrences():
            if occurrence.concept not in in_cycles or occurrence.concept in entered:
                continue
            path = occurrence.path()
            if any(above.concept in in_cycles for above in path[:-1]):
                continue
            entered.add(occurrence.concept)
            links.append(UniLink([above.concept for above in path], [occurrence.concept], UniLinkKind.ENTRY))

        unique = []
        for link in links:
            if link not in unique:
                unique.append(link)
        return unique

    def process(self, scene: Scene, forest: OccurrenceForest) -> CycleReport:
        """
        Builds the cycle report.
        :param scene: Consistent scene.
        :param forest: Forest built from the same scene.
        :return: Uni-directional links and process cycles.
        """
        self._found = {}
        cycles = self._cycles(scene)
        report = CycleReport(self._uni_links(forest, cycles), cycles)
        logger.debug("found %d cycles and %d uni-directional links", len(report.cycles), len(report.uni_links))
        return report


def extract_cycles(scene: Scene, forest: OccurrenceForest) -> CycleReport:
    return CycleExtractor().process(scene, forest)
