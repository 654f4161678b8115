# -*- coding: utf-8 -*-
import pytest
from numpy.random import randint

from src.cpl_toolkit.analyzers import check_scene, diagnose_scene, unused_entities, validate_rule
from src.cpl_toolkit.language import format_scene, load_scene, parse_scene
from src.cpl_toolkit.models import Rule, Scene, Severity
from tests.common import generate_concepts, generate_rule, generate_scene, scene_path, shuffle_rules


SCENE_TEMPLATE = "scene S {{ entities {{ Pot as P; Kitchen as K; Cupboard as D; }} rules {{ {0} }} }}"


def _rule(text: str) -> Rule:
    return parse_scene(SCENE_TEMPLATE.format(text)).rules[0]


def _messages(text: str):
    return [diagnostic.message for diagnostic in validate_rule(_rule(text))]


class TestRuleValidator(object):

    def test_valid_rules(self) -> None:
        assert _messages("r1: P + K.D -> P.D.K;") == []
        assert _messages("P -> P;") == []
        assert _messages("P ^ K + D.P ^ D.K -> P.P.D ^ P.K.D ^ K.P.D ^ K.K.D;") == []

    def test_result_mismatch(self) -> None:
        diagnostics = validate_rule(_rule("r1: P + K.D -> P.K.D;"))

        assert [diagnostic.message for diagnostic in diagnostics] == [
            "result mismatch: expected term P.D.K",
            "result mismatch: unexpected term P.K.D",
        ]
        assert all(diagnostic.rules == ('r1',) for diagnostic in diagnostics)

    def test_missing_and_repeated_terms(self) -> None:
        assert _messages("P + K.D ^ D.K -> P.D.K;") == ["result mismatch: expected term P.K.D"]
        assert _messages("P + K.D -> P.D.K ^ P.D.K;") == ["result mismatch: unexpected term P.D.K"]

    @pytest.mark.parametrize('text', [
        "P + K.D(2) -> P.D(1).K(1);",
        "P + K.D(x) -> P.D(y).K(x-y);",
        "P + K.D(2) -> P.D(2).K;",
        "P + K.D(2.5) -> P.D(0.5).K(2);",
        "P + K.D(x) -> P.D.K;",
    ])
    def test_conserved_quantities(self, text: str) -> None:
        assert _messages(text) == []

    @pytest.mark.parametrize('text, problem', [
        ("P + K.D(2) -> P.D(3).K;", "taken 3 exceeds total 2"),
        ("P + K.D(2) -> P.D(-1).K;", "taken -1 is negative"),
        ("P + K.D(-2) -> P.D.K;", "total -2 is negative"),
        ("P + K.D(2) -> P.D(1).K(2);", "taken 1 plus remainder 2 does not equal total 2"),
        ("P + K.D(2) -> P.D.K(3);", "remainder 3 exceeds total 2"),
        ("P + K.D(x) -> P.D(y).K(y-x);", "remainder y-x should read x-y"),
        ("P + K.D -> P.D(1).K;", "result quantity has no total on the input chain"),
    ])
    def test_violated_quantities(self, text: str, problem: str) -> None:
        assert _messages(text) == ["conservation violated in P.D.K: {0}".format(problem)]

    @pytest.mark.repeat(1000)
    def test_derived_results_are_valid(self) -> None:
        concepts = generate_concepts(randint(2, 9))
        rule = generate_rule(concepts, 'r')

        assert validate_rule(rule) == [], rule

        dropped = Rule(rule.label, rule.outputs, rule.inputs, rule.declared_results[:-1], rule.relations)
        diagnostics = validate_rule(dropped)

        assert len(diagnostics) == 1, dropped
        assert diagnostics[0].message.startswith("result mismatch: expected term")


class TestSceneChecker(object):

    def test_cooking_is_consistent(self) -> None:
        scene = load_scene(scene_path('cooking.cpl'))

        assert check_scene(scene) == []
        assert [diagnostic.message for diagnostic in diagnose_scene(scene)] == [
            "entity Gas is declared but never used",
        ]

    def test_gas_variant_is_clean(self) -> None:
        assert diagnose_scene(load_scene(scene_path('cooking_gas.cpl'))) == []

    def test_reversed_sub_concept(self) -> None:
        diagnostics = check_scene(load_scene(scene_path('inconsistent.cpl')))

        assert len(diagnostics) == 1
        assert diagnostics[0].severity == Severity.ERROR
        assert diagnostics[0].message == "sub-concept contradiction: Cupboard < Kitchen and Kitchen < Cupboard"
        assert diagnostics[0].rules == ('r1', 'r9')
        assert diagnostics[0].line == 25

    def test_sub_concept_and_association(self) -> None:
        diagnostics = check_scene(load_scene(scene_path('sub_assoc.cpl')))

        assert len(diagnostics) == 1
        assert diagnostics[0].message == "Egg < Water contradicts the association Egg - Water"
        assert diagnostics[0].rules == ('r4', 'r9')

    def test_sub_concept_cycle(self) -> None:
        diagnostics = check_scene(load_scene(scene_path('cycle3.cpl')))

        assert len(diagnostics) == 1
        assert diagnostics[0].message == "sub-concept cycle: A < B < C < A"
        assert diagnostics[0].rules == ('a', 'b', 'c')

    def test_containment_contradiction(self) -> None:
        scene = parse_scene("scene S { entities { Pot; Cupboard; X; } rules { r1: X + Pot.Cupboard -> "
                            "X.Cupboard.Pot where Pot in Cupboard; r2: X ^ Pot + Cupboard.Pot -> X.Pot.Cupboard ^ "
                            "Pot.Pot.Cupboard where Cupboard in Pot; } }")
        diagnostics = check_scene(scene)

        assert [diagnostic.message for diagnostic in diagnostics] == [
            "containment contradiction: Cupboard in Pot and Pot in Cupboard",
        ]
        assert diagnostics[0].rules == ('r1', 'r2')

    def test_unused_entities(self) -> None:
        scene = load_scene(scene_path('cooking.cpl'))
        diagnostics = unused_entities(scene)

        assert len(diagnostics) == 1
        assert diagnostics[0].severity == Severity.WARNING
        assert (diagnostics[0].line, diagnostics[0].column) == (8, 5)

        scene = parse_scene("scene S { entities { Room; A; B; } root Room; rules { A + A.B -> A.B.A; } }")
        assert unused_entities(scene) == []

    @staticmethod
    def _findings(diagnostics):
        return sorted((diagnostic.message, tuple(sorted(diagnostic.rules))) for diagnostic in diagnostics)

    @pytest.mark.repeat(500)
    def test_rule_order_does_not_matter(self) -> None:
        scene = generate_scene(randint(2, 7), randint(1, 10), label_probability=1.0)
        shuffled = shuffle_rules(scene)

        assert self._findings(check_scene(scene)) == self._findings(check_scene(shuffled)), format_scene(scene)

    @pytest.mark.repeat(500)
    def test_added_rule_keeps_contradictions(self) -> None:
        scene = generate_scene(randint(2, 7), randint(1, 10))
        extended = Scene(
            scene.name,
            scene.entities,
            scene.root,
            scene.rules + (generate_rule(list(scene.entities), 'extra'),),
        )

        before = {diagnostic.message for diagnostic in check_scene(scene)}
        after = {diagnostic.message for diagnostic in check_scene(extended)}
        assert before <= after, "%s lost %s" % (format_scene(extended), before - after)
