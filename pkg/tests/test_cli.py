# -*- coding: utf-8 -*-
import io
import json
import os

import pytest

from src.cpl_toolkit.cli import run
from src.cpl_toolkit.language import load_scene, parse_scene
from tests.common import scene_path

GOLDEN_DIR = os.path.join(os.path.dirname(os.path.abspath(__file__)), 'golden')

COOKING = scene_path('cooking.cpl')


def _run(*argv):
    stdout, stderr = io.StringIO(), io.StringIO()
    code = run(list(argv), stdout, stderr)
    return code, stdout.getvalue(), stderr.getvalue()


class TestCheck(object):

    def test_cooking(self, monkeypatch) -> None:
        monkeypatch.delenv('CPL_COLOR', raising=False)
        code, out, err = _run('check', COOKING)

        assert code == 0
        assert out == "{0}:8:5: warning: entity Gas is declared but never used\n0 errors, 1 warning\n".format(COOKING)
        assert err == ""

    def test_gas_variant(self) -> None:
        code, out, _ = _run('check', scene_path('cooking_gas.cpl'))

        assert code == 0
        assert out == "0 errors, 0 warnings\n"

    @pytest.mark.parametrize('file_name, message', [
        ('inconsistent.cpl', "sub-concept contradiction: Cupboard < Kitchen and Kitchen < Cupboard [r1, r9]"),
        ('sub_assoc.cpl', "Egg < Water contradicts the association Egg - Water [r4, r9]"),
        ('cycle3.cpl', "sub-concept cycle: A < B < C < A [a, b, c]"),
    ])
    def test_mutations(self, file_name: str, message: str) -> None:
        code, out, _ = _run('check', scene_path(file_name))

        assert code == 1
        assert message in out
        assert out.splitlines()[-1].startswith("1 error, ")

    def test_parse_failure(self) -> None:
        code, out, err = _run('check', scene_path('first_attempt.cpl'))

        assert code == 2
        assert out == ""
        assert err.startswith("{0}:6:16: error: syntax error".format(scene_path('first_attempt.cpl')))
        assert "O + S.F -> O.F.S" in err

    def test_color(self, monkeypatch) -> None:
        monkeypatch.setenv('CPL_COLOR', '1')
        _, out, _ = _run('check', COOKING)

        assert "\x1b[33mwarning\x1b[0m" in out

    def test_missing_file(self, tmp_path) -> None:
        code, _, err = _run('check', str(tmp_path / 'missing.cpl'))

        assert code == 2
        assert "missing.cpl" in err


class TestAnalyses(object):

    def test_grid_csv(self) -> None:
        code, out, _ = _run('grid', COOKING, '--format', 'csv')

        with open(os.path.join(GOLDEN_DIR, 'cooking_grid.csv'), encoding='utf-8', newline='') as f:
            assert out == f.read()
        assert code == 0

    def test_grid_json_and_image(self, tmp_path) -> None:
        image = tmp_path / 'grid.png'
        code, out, _ = _run('grid', COOKING, '--format', 'json', '--image', str(image))
        payload = json.loads(out)

        assert code == 0
        assert payload['format_version'] == 1
        assert payload['concepts'] == ['Pot', 'Kitchen', 'Cupboard', 'Tap', 'Water', 'Heat', 'Cooker', 'Hob', 'Egg']
        assert image.exists()

    def test_cluster(self) -> None:
        code, out, _ = _run('cluster', COOKING)
        lines = out.splitlines()

        assert code == 0
        assert lines[:5] == ["{Pot, Water, Egg}", "{Kitchen, Cupboard}", "{Tap}", "{Heat, Hob}", "{Cooker}"]
        assert lines[5:7] == ["Heat - Pot: 3", "Hob - Pot: 2"]
        assert len(lines) == 14

    def test_trees(self) -> None:
        _, out, _ = _run('trees', COOKING)
        _, sorted_out, _ = _run('trees', COOKING, '--sort')

        assert out == "Kitchen(Cupboard(Pot), Pot(Water, Egg, Heat), Tap(Water), Cooker(Hob(Heat)))\n"
        assert sorted_out == "Kitchen(Cooker(Hob(Heat)), Cupboard(Pot), Pot(Egg, Heat, Water), Tap(Water))\n"

    def test_trees_dot(self) -> None:
        code, out, _ = _run('trees', COOKING, '--dot')

        assert code == 0
        assert out.startswith("digraph forest {")
        assert "dashed" in out

    def test_cycles(self) -> None:
        _, out, _ = _run('cycles', COOKING)
        lines = out.splitlines()

        assert lines[0] == "Cupboard, Pot -> Pot"
        assert "Kitchen, Cooker, Hob -> Hob" in lines
        assert lines[-5:] == [
            "Pot - Heat - Pot [r5, r7]",
            "Hob - Heat - Hob [r5, r7]",
            "Pot - Egg - Water - Pot [r4, r8]",
            "Pot - Egg - Heat - Pot [r6, r8]",
            "Pot - Hob - Heat - Pot [r7, r8]",
        ]

    def test_hierarchy(self) -> None:
        code, out, _ = _run('hierarchy', COOKING)

        assert code == 0
        assert out.splitlines()[:4] == ["root: Pot", "Pot -> Cupboard", "Cupboard -> Kitchen", "Pot -> Water"]
        assert len(out.splitlines()) == 10

        _, traced, _ = _run('hierarchy', COOKING, '--trace')
        assert "trace:\nnode -: Pot\nensemble r1: Pot, Kitchen, Cupboard\n" in traced

        _, dot, _ = _run('hierarchy', COOKING, '--dot')
        assert "rankdir=BT" in dot

    def test_blocked_by_errors(self) -> None:
        code, out, err = _run('hierarchy', scene_path('inconsistent.cpl'))

        assert code == 1
        assert out == ""
        assert "sub-concept contradiction" in err

    def test_out(self, tmp_path) -> None:
        path = tmp_path / 'cycles.json'
        code, out, _ = _run('cycles', COOKING, '--format', 'json', '--out', str(path))

        assert code == 0
        assert out == ""
        with open(str(path), encoding='utf-8') as f:
            assert json.load(f)['format_version'] == 1

    def test_deterministic(self) -> None:
        for command in ('grid', 'cluster', 'trees', 'cycles', 'hierarchy'):
            assert _run(command, COOKING) == _run(command, COOKING)


class TestFormatAndMemory(object):

    def test_format(self) -> None:
        code, out, _ = _run('format', COOKING)

        assert code == 0
        assert out.startswith("scene Cooking {\n")
        assert parse_scene(out).rules == load_scene(COOKING).rules

    def test_remember_and_predict(self, tmp_path) -> None:
        memory = str(tmp_path / 'memory')

        code, out, _ = _run('remember', COOKING, '--memory', memory)
        assert code == 0
        assert out == os.path.join(memory, 'Cooking.json') + "\n"

        code, _, _ = _run('remember', scene_path('cooking_gas.cpl'), '--memory', memory, '--id', 'gas')
        assert code == 0

        code, out, _ = _run('predict', '--memory', memory, '--input', 'Pot', '--legal', 'Gas, Egg')
        assert code == 0
        assert out == "Egg 2 (future)\nGas 1 (future)\n"

        code, out, _ = _run('predict', '--memory', memory, '--input', 'Pot,Water', '-k', '1', '--format', 'json')
        assert json.loads(out)['predicted'] == [{'feature': 'Cooker', 'votes': 4, 'future': True}]

    def test_duplicate_entry(self, tmp_path) -> None:
        memory = str(tmp_path)
        _run('remember', COOKING, '--memory', memory, '--id', 'x')
        _run('remember', COOKING, '--memory', memory, '--id', 'x')

        code, _, err = _run('predict', '--memory', memory, '--input', 'Pot')
        assert code == 0
        assert err == ""

    def test_invalid_k(self, tmp_path) -> None:
        code, _, err = _run('predict', '--memory', str(tmp_path), '--input', 'Pot', '-k', '0')

        assert code == 2
        assert "k must be at least 1" in err


class TestUsage(object):

    def test_unknown_command(self, capsys) -> None:
        code, out, _ = _run('boil', COOKING)

        assert code == 2
        assert out == ""
        assert "usage" in capsys.readouterr().err

    def test_unknown_flag(self, capsys) -> None:
        assert _run('check', COOKING, '--fast')[0] == 2
        assert "unrecognized arguments" in capsys.readouterr().err

    def test_help(self, capsys) -> None:
        assert _run('--help')[0] == 0
        assert "predict" in capsys.readouterr().out
