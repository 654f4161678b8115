# -*- coding: utf-8 -*-
from typing import List, Optional, Sequence, Tuple, Union

from ..models import Chain, ConceptId, Relation, RelationKind, Rule, RuleError, SourceLocation

_SURFACE_KINDS = {
    '<': RelationKind.SUB_CONCEPT,
    '-': RelationKind.ASSOCIATION,
    'in': RelationKind.CONTAINED_IN,
}


def normalize_relation(
        operator: Union[str, RelationKind],
        left: ConceptId,
        right: ConceptId,
        location: Optional[SourceLocation] = None,
) -> Relation:
    """
    Turns a written relation into its normalized form. `X > Y` is the written reverse of `Y < X`.
    :param operator: One of `<`, `>`, `-`, `in`, or an already normalized kind.
    :param left: Left operand as written.
    :param right: Right operand as written.
    :param location: Where the relation was written.
    :return: Normalized relation.
    """
    if left == right:
        raise RuleError("{0} cannot be related to itself".format(left.name))

    if isinstance(operator, RelationKind):
        return Relation(operator, left, right, location)
    if operator == '>':
        return Relation(RelationKind.SUB_CONCEPT, right, left, location)
    if operator not in _SURFACE_KINDS:
        raise RuleError("unknown relation operator {0!r}".format(operator))
    return Relation(_SURFACE_KINDS[operator], left, right, location)


def derive_result(outputs: Sequence[ConceptId], inputs: Sequence[Chain]) -> List[Tuple[ConceptId, ...]]:
    """
    Derives the result terms of a rule: every output followed by every inverted input chain.
    :param outputs: Output concepts, the outer loop.
    :param inputs: Input chains, the inner loop.
    :return: Result terms as concept tuples.
    """
    return [
        (output,) + tuple(reversed(chain.elements))
        for output in outputs
        for chain in inputs
    ]


def is_reverse_pair(a: Rule, b: Rule) -> bool:
    """
    Checks whether two rules repeat one process in opposite directions, e.g. `P + B.H` and `B + P.H`.
    :param a: First rule.
    :param b: Second rule.
    :return: True iff outputs and sources swap while the intermediates and effector stay the same.
    """
    for rule in (a, b):
        if rule.self_loop or len(rule.outputs) != 1 or len(rule.inputs) != 1:
            return False
    if a == b:
        return False

    chain_a, chain_b = a.inputs[0], b.inputs[0]
    return (
        a.outputs[0] == chain_b.source
        and b.outputs[0] == chain_a.source
        and chain_a.intermediates == chain_b.intermediates
    )


def reverse_pairs(rules: Sequence[Rule]) -> List[Tuple[int, int]]:
    """
    Finds every reverse rule pair.
    :param rules: Rules in scene order.
    :return: Index pairs (earlier, later).
    """
    return [
        (i, j)
        for i in range(len(rules))
        for j in range(i + 1, len(rules))
        if is_reverse_pair(rules[i], rules[j])
    ]
