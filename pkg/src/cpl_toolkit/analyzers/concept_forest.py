# -*- coding: utf-8 -*-
import logging
from typing import Dict, List, Optional

import networkx as nx

from ..models import (
    ConceptId,
    CrossLink,
    Occurrence,
    OccurrenceForest,
    Placement,
    PlacementKind,
    RelationKind,
    RelationStore,
    Scene,
)
from .abstract_analyzer import AbstractAnalyzer

logger = logging.getLogger(__name__)


class ForestBuilder(AbstractAnalyzer):
    """
    Builds the nested object set of a scene.

    Placements are collected rule by rule: sub-concept relations first, then containment, then the rule output,
    which goes under the chain source when the effector is a sub-concept of the source and the output is not
    associated with it. Concepts left without a placement go under the scene root.

    Every concept has one home occurrence that carries its children; its other occurrences are leaves. Homes are
    chosen by concept and parent name, so rule order only decides the order of children.
    """

    def __init__(self) -> None:
        """
        Initialize the class with parameters.
        """
        self.placements = []  # type: List[Placement]
        self._seen = set()
        self._direct = set()

    def _place(self, child: ConceptId, parent: ConceptId, kind: PlacementKind, rule: Optional[str]) -> None:
        if child == parent:
            return
        if kind != PlacementKind.CONTAINED_IN:
            self._direct.add((child, parent))
        if (child, parent) in self._seen:
            return
        self._seen.add((child, parent))
        self.placements.append(Placement(child, parent, kind, rule, len(self.placements)))

    def _collect(self, scene: Scene, store: RelationStore) -> None:
        for label, rule in zip(scene.rule_labels, scene.rules):
            if rule.self_loop:
                continue

            sub_children = set()
            for relation in rule.relations:
                if relation.kind == RelationKind.SUB_CONCEPT:
                    self._place(relation.left, relation.right, PlacementKind.SUB_CONCEPT, label)
                    sub_children.add(relation.left)
            for relation in rule.relations:
                if relation.kind == RelationKind.CONTAINED_IN:
                    self._place(relation.left, relation.right, PlacementKind.CONTAINED_IN, label)

            for output in rule.outputs:
                if output in sub_children:
                    continue
                for chain in rule.inputs:
                    if store.is_sub_concept(chain.effector, chain.source) and not store.associated(output, chain.source):
                        self._place(output, chain.source, PlacementKind.OUTPUT, label)

    def _homes(self, scene: Scene) -> Dict[ConceptId, Placement]:
        candidates = {}  # type: Dict[ConceptId, List[Placement]]
        for placement in self.placements:
            if placement.child != scene.root:
                candidates.setdefault(placement.child, []).append(placement)

        homes = {}
        graph = nx.DiGraph()
        for child in sorted(candidates, key=lambda concept: concept.name):
            ordered = sorted(
                candidates[child],
                key=lambda p: ((p.child, p.parent) not in self._direct, p.parent.name),
            )
            for placement in ordered:
                if child in graph and placement.parent in graph and nx.has_path(graph, child, placement.parent):
                    logger.debug("skipped %s, it would close a cycle", placement)
                    continue
                graph.add_edge(placement.parent, child)
                homes[child] = placement
                break

        if scene.root is not None:
            for concept in scene.referenced_concepts():
                if concept not in homes and concept != scene.root:
                    self._place(concept, scene.root, PlacementKind.ROOT, None)
                    homes[concept] = self.placements[-1]
        return homes

    def process(self, scene: Scene) -> OccurrenceForest:
        """
        Builds the forest.
        :param scene: Consistent scene.
        :return: The forest. A scene without rules gives one root per declared entity.
        """
        self.placements = []
        self._seen = set()
        self._direct = set()

        if not scene.rules:
            return OccurrenceForest([
                Occurrence(i, entity, None, None, True) for i, entity in enumerate(scene.entities)
            ])

        self._collect(scene, RelationStore.from_scene(scene))
        homes = self._homes(scene)

        by_parent = {}  # type: Dict[ConceptId, List[Placement]]
        for placement in self.placements:
            by_parent.setdefault(placement.parent, []).append(placement)

        index = [0]

        def build(concept: ConceptId, parent: Optional[Occurrence], origin: Optional[Placement]) -> Occurrence:
            occurrence = Occurrence(index[0], concept, parent, origin, True)
            index[0] += 1
            for placement in by_parent.get(concept, []):
                if homes.get(placement.child) is placement:
                    occurrence.add_child(build(placement.child, occurrence, placement))
                else:
                    occurrence.add_child(Occurrence(index[0], placement.child, occurrence, placement, False))
                    index[0] += 1
            return occurrence

        tops = [] if scene.root is None else [scene.root]
        tops += [concept for concept in scene.referenced_concepts() if concept not in homes and concept not in tops]
        forest = OccurrenceForest([build(concept, None, None) for concept in tops], scene.root)
        logger.debug("built %s from %d placements", forest, len(self.placements))
        return forest


class NestedNotation(AbstractAnalyzer):
    """
    Renders a forest as `Kitchen(Cupboard(Pot), ...)`.
    """

    def __init__(self, sort_children: bool = False) -> None:
        """
        Initialize the class with parameters.
        :param sort_children: Order children by name instead of by placement.
        """
        self.sort_children = sort_children

    def _render(self, occurrence: Occurrence) -> str:
        children = list(occurrence.children)
        if not children:
            return occurrence.concept.name
        if self.sort_children:
            children.sort(key=lambda child: child.concept.name)
        return "{0}({1})".format(occurrence.concept.name, ", ".join(self._render(child) for child in children))

    def process(self, forest: OccurrenceForest) -> str:
        roots = list(forest.roots)
        if self.sort_children:
            roots.sort(key=lambda root: root.concept.name)
        return ", ".join(self._render(root) for root in roots)


def build_forest(scene: Scene) -> OccurrenceForest:
    return ForestBuilder().process(scene)


def nested_notation(forest: OccurrenceForest, sort_children: bool = False) -> str:
    return NestedNotation(sort_children).process(forest)


def cross_links(forest: OccurrenceForest) -> List[CrossLink]:
    """
    Pairs occurrences of the same concept that hang under different parent concepts.
    :param forest: Concept forest.
    :return: Links in pre-order of their first occurrence.
    """
    by_concept = {}  # type: Dict[ConceptId, List[Occurrence]]
    for occurrence in forest.occurrences():
        by_concept.setdefault(occurrence.concept, []).append(occurrence)

    links = []
    for occurrences in by_concept.values():
        for i, first in enumerate(occurrences):
            for second in occurrences[i + 1:]:
                if first.parent_concept != second.parent_concept:
                    links.append(CrossLink(first, second))
    return sorted(links, key=lambda link: (link.first.index, link.second.index))
