# -*- coding: utf-8 -*-
from src.cpl_toolkit.analyzers import build_forest, build_process_graph, extract_cycles
from src.cpl_toolkit.language import load_scene, parse_scene
from src.cpl_toolkit.models import Scene, UniLinkKind
from tests.common import scene_path


def _cooking() -> Scene:
    return load_scene(scene_path('cooking.cpl'))


class TestProcessGraph(object):

    def test_cooking(self) -> None:
        graph = build_process_graph(_cooking())
        edges = [(a.name, b.name, data['rule']) for a, b, data in graph.edges(data=True)]

        assert len(edges) == 15
        assert ('Kitchen', 'Cupboard', 'r1') in edges
        assert ('Cupboard', 'Pot', 'r1') in edges
        assert ('Pot', 'Pot', 'r8') in edges
        assert graph.number_of_edges(_cooking().lookup('P'), _cooking().lookup('H')) == 2


class TestCycleExtractor(object):

    def test_cooking_cycles(self) -> None:
        scene = _cooking()
        report = extract_cycles(scene, build_forest(scene))

        assert [str(cycle) for cycle in report.cycles] == [
            "Pot - Heat - Pot [r5, r7]",
            "Hob - Heat - Hob [r5, r7]",
            "Pot - Egg - Water - Pot [r4, r8]",
            "Pot - Egg - Heat - Pot [r6, r8]",
            "Pot - Hob - Heat - Pot [r7, r8]",
        ]
        for cycle in report.cycles:
            assert cycle.concepts[0] == cycle.concepts[-1]

    def test_cooking_uni_links(self) -> None:
        scene = _cooking()
        report = extract_cycles(scene, build_forest(scene))

        assert [(str(link), link.kind) for link in report.uni_links] == [
            ("Cupboard, Pot -> Pot", UniLinkKind.CROSS),
            ("Pot, Water -> Water, Tap", UniLinkKind.CROSS),
            ("Pot, Heat -> Heat, Hob, Cooker", UniLinkKind.CROSS),
            ("Kitchen, Cupboard, Pot -> Pot", UniLinkKind.ENTRY),
            ("Kitchen, Tap, Water -> Water", UniLinkKind.ENTRY),
            ("Kitchen, Cooker, Hob -> Hob", UniLinkKind.ENTRY),
        ]

    def test_self_loop_on_source(self) -> None:
        scene = parse_scene("scene S { entities { A; C; X; } rules { r1: X + A.C -> X.C.A; r2: A -> A; } }")
        report = extract_cycles(scene, build_forest(scene))

        assert [cycle.names for cycle in report.cycles] == [('A', 'X', 'C', 'A')]
        assert report.cycles[0].rules == ('r1', 'r2')

    def test_self_loop_on_super_concept(self) -> None:
        scene = parse_scene(
            "scene S { entities { A; B; C; X; } rules { X + B.C -> X.C.B where B < A; A -> A; } }"
        )
        report = extract_cycles(scene, build_forest(scene))

        assert [str(cycle) for cycle in report.cycles] == ["A - X - C - A [#1, #2]"]

    def test_no_repeats(self) -> None:
        scene = parse_scene("scene S { entities { A; B; C; } rules { A + B.C -> A.C.B; } }")
        report = extract_cycles(scene, build_forest(scene))

        assert report.cycles == ()
        assert report.uni_links == ()
