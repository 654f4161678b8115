# -*- coding: utf-8 -*-
from typing import Dict, List, Optional, Tuple

import attr

from .concept import ConceptId
from .rule import Rule


@attr.s(frozen=True, slots=True, repr=False)
class Scene(object):
    """
    A named set of entities and the ordered rules describing one cognitive task.
    """
    name = attr.ib(type=str)
    entities = attr.ib(type=Tuple[ConceptId, ...], converter=tuple)
    root = attr.ib(type=Optional[ConceptId], default=None)
    rules = attr.ib(type=Tuple[Rule, ...], converter=tuple, default=())

    def __str__(self) -> str:
        return "Scene(name={0}, entities={1}, root={2}, rules={3})".format(
            self.name,
            len(self.entities),
            self.root,
            len(self.rules),
        )

    __repr__ = __str__

    @property
    def rule_labels(self) -> List[str]:
        """
        Labels used to cite rules. Unlabeled rules are cited by position, e.g. `#3`.
        :return: One label per rule.
        """
        return [
            rule.label if rule.label is not None else "#{0}".format(i + 1)
            for i, rule in enumerate(self.rules)
        ]

    @property
    def label_to_index(self) -> Dict[str, int]:
        return {label: i for i, label in enumerate(self.rule_labels)}

    def referenced_concepts(self) -> List[ConceptId]:
        """
        Concepts mentioned by any rule, relations included, in first-appearance order.
        :return: Distinct concepts.
        """
        seen = []
        for rule in self.rules:
            for concept in rule.referenced:
                if concept not in seen:
                    seen.append(concept)
        return seen

    def lookup(self, name: str) -> Optional[ConceptId]:
        """
        Finds a declared concept by name or abbreviation.
        :param name: Full name or abbreviation.
        :return: The concept, or None when nothing matches.
        """
        for entity in self.entities:
            if name in (entity.name, entity.abbrev):
                return entity
        return None
