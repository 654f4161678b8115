# -*- coding: utf-8 -*-
from typing import List, Optional, Tuple

import attr

from .concept import ConceptId, Relation, SourceLocation
from .errors import RuleError
from .quantity import Amount, Quantity


@attr.s(frozen=True, slots=True, repr=False)
class Chain(object):
    """
    An input chain S.M1...F: the source comes first and the measured effector last.
    """
    elements = attr.ib(type=Tuple[ConceptId, ...], converter=tuple)
    quantity = attr.ib(type=Optional[Amount], default=None)
    location = attr.ib(type=Optional[SourceLocation], default=None, eq=False)

    def __attrs_post_init__(self) -> None:
        if len(self.elements) < 2:
            raise RuleError("chain {0} needs at least two elements".format(self))
        if len(set(self.elements)) != len(self.elements):
            raise RuleError("chain {0} repeats an element".format(self))

    def __str__(self) -> str:
        text = ".".join(element.name for element in self.elements)
        return text if self.quantity is None else "{0}({1})".format(text, self.quantity)

    __repr__ = __str__

    @property
    def source(self) -> ConceptId:
        return self.elements[0]

    @property
    def effector(self) -> ConceptId:
        return self.elements[-1]

    @property
    def intermediates(self) -> Tuple[ConceptId, ...]:
        return self.elements[1:]


@attr.s(frozen=True, slots=True, repr=False)
class TermElement(object):
    concept = attr.ib(type=ConceptId)
    amount = attr.ib(type=Optional[Amount], default=None)

    def __str__(self) -> str:
        return self.concept.name if self.amount is None else "{0}({1})".format(self.concept.name, self.amount)

    __repr__ = __str__


@attr.s(frozen=True, slots=True, repr=False)
class ResultTerm(object):
    """
    A declared result term O.F...M1.S, optionally annotated with the taken and remainder amounts.
    """
    elements = attr.ib(type=Tuple[TermElement, ...], converter=tuple)
    location = attr.ib(type=Optional[SourceLocation], default=None, eq=False)

    def __str__(self) -> str:
        return ".".join(str(element) for element in self.elements)

    __repr__ = __str__

    @property
    def concepts(self) -> Tuple[ConceptId, ...]:
        return tuple(element.concept for element in self.elements)

    @staticmethod
    def of(concepts: Tuple[ConceptId, ...]) -> 'ResultTerm':
        return ResultTerm(tuple(TermElement(concept) for concept in concepts))


@attr.s(frozen=True, slots=True, repr=False)
class Rule(object):
    """
    One CPL statement. A self-loop rule `P -> P` has a single output and nothing else.
    """
    label = attr.ib(type=Optional[str])
    outputs = attr.ib(type=Tuple[ConceptId, ...], converter=tuple)
    inputs = attr.ib(type=Tuple[Chain, ...], converter=tuple, default=())
    declared_results = attr.ib(type=Tuple[ResultTerm, ...], converter=tuple, default=())
    relations = attr.ib(type=Tuple[Relation, ...], converter=tuple, default=())
    self_loop = attr.ib(type=bool, default=False)
    location = attr.ib(type=Optional[SourceLocation], default=None, eq=False)

    def __attrs_post_init__(self) -> None:
        if self.self_loop:
            if len(self.outputs) != 1 or self.inputs or self.declared_results or self.relations:
                raise RuleError("a self-loop rule has exactly one concept and nothing else")
        elif not self.outputs or not self.inputs:
            raise RuleError("a rule needs at least one output and one input chain")

    def __str__(self) -> str:
        if self.self_loop:
            body = "{0} -> {0}".format(self.outputs[0].name)
        else:
            body = "{0} + {1} -> {2}".format(
                " ^ ".join(output.name for output in self.outputs),
                " ^ ".join(str(chain) for chain in self.inputs),
                " ^ ".join(str(term) for term in self.declared_results),
            )
        return body if self.label is None else "{0}: {1}".format(self.label, body)

    __repr__ = __str__

    @property
    def concepts(self) -> List[ConceptId]:
        """
        Concepts of the left-hand side (outputs, then chain elements) in first-appearance order.
        :return: Distinct concepts.
        """
        seen = []
        for concept in self.outputs + tuple(element for chain in self.inputs for element in chain.elements):
            if concept not in seen:
                seen.append(concept)
        return seen

    @property
    def referenced(self) -> List[ConceptId]:
        """
        Every concept the rule mentions, relations included, in first-appearance order.
        :return: Distinct concepts.
        """
        seen = self.concepts
        for relation in self.relations:
            for concept in (relation.left, relation.right):
                if concept not in seen:
                    seen.append(concept)
        return seen

    def quantities(self) -> List[Tuple[Chain, ResultTerm, Quantity]]:
        """
        Pairs every declared result term with the input chain it inverts and assembles the quantity it states.
        Result terms that do not invert any chain are skipped.
        :return: Matched chains, terms and their quantities.
        """
        matched = []
        for term in self.declared_results:
            concepts = term.concepts
            for chain in self.inputs:
                if concepts[1:] != tuple(reversed(chain.elements)) or concepts[0] not in self.outputs:
                    continue
                quantity = Quantity(chain.quantity, term.elements[1].amount, term.elements[-1].amount)
                if any(amount is not None for amount in (quantity.total, quantity.taken, quantity.remainder)):
                    matched.append((chain, term, quantity))
                break
        return matched
