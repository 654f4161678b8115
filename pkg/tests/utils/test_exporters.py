# -*- coding: utf-8 -*-
import json

import matplotlib
import pydot

from src.cpl_toolkit.analyzers import (
    build_ensemble,
    build_forest,
    build_grid,
    build_hierarchy,
    cluster_grid,
    extract_cycles,
    predict,
)
from src.cpl_toolkit.language import load_scene
from src.cpl_toolkit.models import MemoryStore, Scene
from src.cpl_toolkit.utils import (
    FORMAT_VERSION,
    clustering_to_dict,
    cycles_to_dict,
    cycles_to_dot,
    dot_source,
    dump_json,
    forest_to_dict,
    forest_to_dot,
    grid_to_dict,
    hierarchy_to_dict,
    hierarchy_to_dot,
    prediction_to_dict,
    save_image_from_grid,
)
from tests.common import scene_path

matplotlib.use('Agg')


def _cooking() -> Scene:
    return load_scene(scene_path('cooking.cpl'))


def _unquote(value) -> str:
    return str(value).strip('"')


class TestDotExport(object):

    def test_forest(self) -> None:
        graph = forest_to_dot(build_forest(_cooking()))

        assert len(graph.get_subgraphs()) == 4
        edges = graph.get_edges()
        assert len(edges) == 11 + 3
        assert sum(1 for edge in edges if _unquote(edge.get('style')) == 'dashed') == 3

        parsed = pydot.graph_from_dot_data(dot_source(graph))[0]
        labels = [_unquote(node.get('label')) for subgraph in parsed.get_subgraphs() for node in subgraph.get_nodes()]
        assert sorted(labels) == sorted([
            'Cupboard', 'Pot', 'Pot', 'Water', 'Egg', 'Heat', 'Tap', 'Water', 'Cooker', 'Hob', 'Heat',
        ])

    def test_cycles(self) -> None:
        scene = _cooking()
        graph = cycles_to_dot(scene, extract_cycles(scene, build_forest(scene)))
        edges = graph.get_edges()

        assert len(graph.get_nodes()) == 9
        assert len(edges) == 15
        assert sorted(set(_unquote(edge.get('label')) for edge in edges)) == [
            'r1', 'r2', 'r3', 'r4', 'r5', 'r6', 'r7', 'r8',
        ]
        assert any(edge.get('color') is not None for edge in edges)
        pydot.graph_from_dot_data(dot_source(graph))

    def test_hierarchy(self) -> None:
        scene = _cooking()
        graph = hierarchy_to_dot(build_hierarchy(scene, build_ensemble(scene)).hierarchy)

        assert _unquote(graph.get('rankdir')) == 'BT'
        assert len(graph.get_nodes()) == 9
        assert len(graph.get_edges()) == 9
        assert [_unquote(node.get('label')) for node in graph.get_nodes() if node.get('shape') == 'doublecircle'] == [
            'Pot',
        ]
        assert dot_source(graph).endswith('\n')


class TestJsonExport(object):

    def test_grid(self) -> None:
        grid = build_grid(_cooking())
        payload = json.loads(dump_json(grid_to_dict(grid, cluster_grid(grid))))

        assert list(payload) == ['format_version', 'concepts', 'counts', 'clusters', 'secondary_links']
        assert payload['format_version'] == FORMAT_VERSION == 1
        assert payload['concepts'][0] == 'Pot'
        assert payload['counts'][0][5] == 3
        assert payload['clusters'][0] == ['Pot', 'Water', 'Egg']
        assert payload['secondary_links'][0] == {'left': 'Heat', 'right': 'Pot', 'count': 3}

    def test_clustering(self) -> None:
        payload = clustering_to_dict(cluster_grid(build_grid(_cooking())))

        assert list(payload) == ['format_version', 'clusters', 'secondary_links']
        assert len(payload['secondary_links']) == 9

    def test_forest(self) -> None:
        payload = forest_to_dict(build_forest(_cooking()))

        assert payload['container'] == 'Kitchen'
        kitchen = payload['roots'][0]
        assert kitchen['concept'] == 'Kitchen'
        assert kitchen['placement'] is None
        assert [child['concept'] for child in kitchen['children']] == ['Cupboard', 'Pot', 'Tap', 'Cooker']
        assert kitchen['children'][0]['children'][0] == {
            'concept': 'Pot',
            'home': False,
            'placement': 'contained_in',
            'rule': 'r1',
            'children': [],
        }

    def test_cycles(self) -> None:
        scene = _cooking()
        payload = cycles_to_dict(extract_cycles(scene, build_forest(scene)))

        assert payload['cycles'][0] == {'concepts': ['Pot', 'Heat', 'Pot'], 'rules': ['r5', 'r7']}
        assert payload['uni_links'][0] == {'kind': 'cross', 'source': ['Cupboard', 'Pot'], 'target': ['Pot']}

    def test_hierarchy(self) -> None:
        scene = _cooking()
        payload = hierarchy_to_dict(build_hierarchy(scene, build_ensemble(scene)))

        assert payload['root'] == 'Pot'
        assert payload['edges'][0] == ['Pot', 'Cupboard']
        assert payload['trace'][0] == {'kind': 'node', 'rule': None, 'concepts': ['Pot']}
        assert payload['diagnostics'] == []

    def test_prediction(self) -> None:
        store = MemoryStore()
        store.add('s1', ['A', 'B'])
        payload = prediction_to_dict(predict(store, ['A'], legal=['B']))

        assert payload == {
            'format_version': 1,
            'legal': ['B'],
            'predicted': [{'feature': 'B', 'votes': 1, 'future': True}],
        }

    def test_dump_json(self) -> None:
        text = dump_json({'format_version': 1, 'b': [1, 2]})

        assert text == '{\n  "format_version": 1,\n  "b": [\n    1,\n    2\n  ]\n}\n'


class TestCreateImage(object):

    def test_save_image(self, tmp_path) -> None:
        grid = build_grid(_cooking())
        path = tmp_path / 'grid.png'

        save_image_from_grid(grid, str(path), cluster_grid(grid))

        with open(str(path), 'rb') as f:
            assert f.read(8) == b'\x89PNG\r\n\x1a\n'
