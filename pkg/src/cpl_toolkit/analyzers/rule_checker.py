# -*- coding: utf-8 -*-
import logging
from collections import Counter
from math import isclose
from typing import Dict, Iterable, List, Optional, Tuple

import networkx as nx

from ..language import derive_result
from ..models import Amount, ConceptId, Diagnostic, Quantity, RelationStore, Rule, Scene, Severity
from .abstract_analyzer import AbstractAnalyzer

logger = logging.getLogger(__name__)

Edge = Tuple[ConceptId, ConceptId]


def _term_text(concepts: Iterable[ConceptId]) -> str:
    return ".".join(concept.symbol for concept in concepts)


def _quantity_problems(quantity: Quantity) -> List[str]:
    total, taken, remainder = quantity.total, quantity.taken, quantity.remainder
    if total is None:
        return ["result quantity has no total on the input chain"]

    problems = []
    for role, amount in (('total', total), ('taken', taken), ('remainder', remainder)):
        if amount is not None and amount.is_numeric and amount.value < 0:
            problems.append("{0} {1} is negative".format(role, amount))
    if problems:
        return problems

    if taken is not None and total.is_numeric and taken.is_numeric and taken.value > total.value:
        problems.append("taken {0} exceeds total {1}".format(taken, total))

    if remainder is None:
        return problems

    if taken is None:
        if total.is_numeric and remainder.is_numeric and remainder.value > total.value:
            problems.append("remainder {0} exceeds total {1}".format(remainder, total))
    elif total.is_numeric and taken.is_numeric and remainder.is_numeric:
        if not isclose(taken.value + remainder.value, total.value):
            problems.append("taken {0} plus remainder {1} does not equal total {2}".format(taken, remainder, total))
    elif total.is_simple and taken.is_simple:
        expected = Amount(total.minuend, taken.minuend)
        if remainder != expected:
            problems.append("remainder {0} should read {1}".format(remainder, expected))
    return problems


class RuleValidator(AbstractAnalyzer):
    """
    Checks one rule against the derivation algebra and the conservation of its quantities.
    """

    def process(self, rule: Rule, label: Optional[str] = None) -> List[Diagnostic]:
        """
        Validates a rule.
        :param rule: Parsed rule.
        :param label: Label to cite, defaults to the rule's own label.
        :return: Diagnostics, empty iff the rule is valid.
        """
        if rule.self_loop:
            return []

        label = label if label is not None else rule.label
        cited = (label,) if label is not None else ()
        diagnostics = []

        expected = Counter(derive_result(rule.outputs, rule.inputs))
        declared = Counter(term.concepts for term in rule.declared_results)

        for term in (expected - declared).elements():
            diagnostics.append(Diagnostic.at(
                Severity.ERROR,
                "result mismatch: expected term {0}".format(_term_text(term)),
                rule.location,
                cited,
            ))
        for term in (declared - expected).elements():
            diagnostics.append(Diagnostic.at(
                Severity.ERROR,
                "result mismatch: unexpected term {0}".format(_term_text(term)),
                rule.location,
                cited,
            ))

        for chain, term, quantity in rule.quantities():
            for problem in _quantity_problems(quantity):
                diagnostics.append(Diagnostic.at(
                    Severity.ERROR,
                    "conservation violated in {0}: {1}".format(_term_text(term.concepts), problem),
                    term.location if term.location is not None else rule.location,
                    cited,
                ))

        return diagnostics


class SceneChecker(AbstractAnalyzer):
    """
    Cross-rule consistency: no relation of one rule may break a relation of another rule in the same scene.
    """

    def __init__(self) -> None:
        """
        Initialize the class with parameters.
        """
        self.scene = None  # type: Optional[Scene]
        self.order = {}  # type: Dict[str, int]

    def _diagnostic(self, message: str, labels: Iterable[str]) -> Diagnostic:
        cited = sorted(set(labels), key=lambda label: self.order[label])
        location = self.scene.rules[self.order[cited[-1]]].location if cited else None
        return Diagnostic.at(Severity.ERROR, message, location, tuple(cited))

    def _reversals(self, edges: Dict[Edge, List[str]], operator: str, kind: str) -> List[Diagnostic]:
        diagnostics = []
        for (a, b), origins in edges.items():
            if a.name > b.name or (b, a) not in edges:
                continue
            diagnostics.append(self._diagnostic(
                "{0} contradiction: {1} {2} {3} and {3} {2} {1}".format(kind, a.name, operator, b.name),
                origins + edges[(b, a)],
            ))
        return diagnostics

    def _sub_associations(self, store: RelationStore) -> List[Diagnostic]:
        diagnostics = []
        for (child, parent), origins in store.sub_edges.items():
            if not store.associated(child, parent):
                continue
            diagnostics.append(self._diagnostic(
                "{0} < {1} contradicts the association {0} - {1}".format(child.name, parent.name),
                origins + store.assoc_edges[frozenset((child, parent))],
            ))
        return diagnostics

    def _cycles(self, graph: nx.DiGraph, operator: str, kind: str) -> List[Diagnostic]:
        diagnostics = []
        for cycle in nx.simple_cycles(graph):
            if len(cycle) < 3:
                continue
            start = min(range(len(cycle)), key=lambda i: cycle[i].name)
            cycle = cycle[start:] + cycle[:start]
            walk = cycle + [cycle[0]]
            origins = [label for a, b in zip(walk, walk[1:]) for label in graph[a][b]['rules']]
            diagnostics.append(self._diagnostic(
                "{0} cycle: {1}".format(kind, " {0} ".format(operator).join(concept.name for concept in walk)),
                origins,
            ))
        return diagnostics

    def process(self, scene: Scene) -> List[Diagnostic]:
        """
        Checks a scene for contradicting relations.
        :param scene: Scene whose rules are individually valid.
        :return: One diagnostic per contradiction, empty iff the scene is consistent.
        """
        self.scene = scene
        self.order = scene.label_to_index
        store = RelationStore.from_scene(scene)
        logger.debug("checking %s", store)

        diagnostics = self._reversals(store.sub_edges, '<', 'sub-concept')
        diagnostics += self._sub_associations(store)
        diagnostics += self._cycles(store.sub_graph(), '<', 'sub-concept')
        diagnostics += self._reversals(store.contained_edges, 'in', 'containment')
        diagnostics += self._cycles(store.contained_graph(), 'in', 'containment')
        return sorted(diagnostics, key=lambda diagnostic: diagnostic.sort_key)


def validate_rule(rule: Rule, label: Optional[str] = None) -> List[Diagnostic]:
    return RuleValidator().process(rule, label)


def check_scene(scene: Scene) -> List[Diagnostic]:
    return SceneChecker().process(scene)


def unused_entities(scene: Scene) -> List[Diagnostic]:
    """
    Warns about declared entities that no rule mentions. The scene root is exempt.
    :param scene: Parsed scene.
    :return: One warning per unused entity.
    """
    used = set(scene.referenced_concepts())
    return [
        Diagnostic.at(Severity.WARNING, "entity {0} is declared but never used".format(entity.name), entity.location)
        for entity in scene.entities
        if entity not in used and entity != scene.root
    ]


def diagnose_scene(scene: Scene) -> List[Diagnostic]:
    """
    Runs every check: each rule on its own, the cross-rule consistency check and the unused-entity lint.
    :param scene: Parsed scene.
    :return: Diagnostics sorted by position.
    """
    diagnostics = []
    for label, rule in zip(scene.rule_labels, scene.rules):
        diagnostics.extend(validate_rule(rule, label))
    diagnostics.extend(check_scene(scene))
    diagnostics.extend(unused_entities(scene))

    errors = sum(1 for diagnostic in diagnostics if diagnostic.is_error)
    logger.info("%s: %d errors, %d warnings", scene.name, errors, len(diagnostics) - errors)
    return sorted(diagnostics, key=lambda diagnostic: diagnostic.sort_key)
