# -*- coding: utf-8 -*-
import pytest
from numpy.random import choice, randint

from src.cpl_toolkit.language import derive_result, is_reverse_pair, load_scene, normalize_relation, reverse_pairs
from src.cpl_toolkit.models import Chain, ConceptId, Relation, RelationKind, Rule, RuleError
from tests.common import generate_concepts, generate_rule, scene_path
from tests.common.generate_scenes import RELATION_OPERATORS

A, B, C, D, O = (ConceptId(name) for name in "ABCDO")


class TestNormalizeRelation(object):

    @pytest.mark.parametrize('operator, kind', [
        ('<', RelationKind.SUB_CONCEPT),
        ('-', RelationKind.ASSOCIATION),
        ('in', RelationKind.CONTAINED_IN),
        (RelationKind.ASSOCIATION, RelationKind.ASSOCIATION),
    ])
    def test_written_operators(self, operator, kind: RelationKind) -> None:
        assert normalize_relation(operator, A, B) == Relation(kind, A, B)

    def test_greater_than_is_reversed_sub_concept(self) -> None:
        assert normalize_relation('>', A, B) == Relation(RelationKind.SUB_CONCEPT, B, A)
        assert normalize_relation('>', A, B) == normalize_relation('<', B, A)

    def test_self_relation(self) -> None:
        for operator in ('<', '>', '-', 'in'):
            with pytest.raises(RuleError):
                normalize_relation(operator, A, A)

    def test_unknown_operator(self) -> None:
        with pytest.raises(RuleError):
            normalize_relation('=', A, B)

    @pytest.mark.repeat(200)
    def test_idempotent(self) -> None:
        concepts = generate_concepts(randint(2, 9))
        left, right = (concepts[i] for i in choice(len(concepts), size=2, replace=False))
        operator = RELATION_OPERATORS[randint(0, len(RELATION_OPERATORS))]
        relation = normalize_relation(operator, left, right)

        assert normalize_relation(relation.kind, relation.left, relation.right) == relation
        assert normalize_relation(relation.kind.value, relation.left, relation.right) == relation


class TestDeriveResult(object):

    def test_single_chain(self) -> None:
        assert derive_result([O], [Chain([A, B])]) == [(O, B, A)]
        assert derive_result([O], [Chain([A, B, C])]) == [(O, C, B, A)]

    def test_outputs_outer_chains_inner(self) -> None:
        assert derive_result([O, D], [Chain([A, B]), Chain([B, C])]) == [
            (O, B, A),
            (O, C, B),
            (D, B, A),
            (D, C, B),
        ]

    def test_chain_needs_two_elements(self) -> None:
        with pytest.raises(RuleError):
            Chain([A])
        with pytest.raises(RuleError):
            Chain([A, B, A])

    @pytest.mark.repeat(200)
    def test_chain_inverts_back(self) -> None:
        concepts = generate_concepts(randint(2, 9))
        rule = generate_rule(concepts, with_relations=False)
        terms = derive_result(rule.outputs, rule.inputs)

        assert len(terms) == len(rule.outputs) * len(rule.inputs)
        for k, term in enumerate(terms):
            output, chain = rule.outputs[k // len(rule.inputs)], rule.inputs[k % len(rule.inputs)]
            assert term[0] == output
            assert tuple(reversed(term[1:])) == chain.elements
            assert derive_result([output], [Chain(reversed(term[1:]))]) == [term]


class TestReversePairs(object):

    def test_swapped_output_and_source(self) -> None:
        forward = Rule('r5', [O], [Chain([A, B])])
        backward = Rule('r7', [A], [Chain([O, B])])

        assert is_reverse_pair(forward, backward) is True
        assert is_reverse_pair(backward, forward) is True

    def test_not_a_pair(self) -> None:
        rule = Rule(None, [O], [Chain([A, B])])

        assert is_reverse_pair(rule, rule) is False
        assert is_reverse_pair(rule, Rule(None, [A], [Chain([O, C])])) is False
        assert is_reverse_pair(rule, Rule(None, [O], self_loop=True)) is False
        assert is_reverse_pair(rule, Rule(None, [A, D], [Chain([O, B])])) is False

    def test_cooking(self) -> None:
        scene = load_scene(scene_path('cooking.cpl'))
        labels = scene.rule_labels

        assert [(labels[i], labels[j]) for i, j in reverse_pairs(scene.rules)] == [('r5', 'r7')]
