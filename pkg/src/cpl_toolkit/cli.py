# -*- coding: utf-8 -*-
import argparse
import logging
import os
import sys
from typing import Callable, Dict, List, Optional, Sequence, TextIO

from .analyzers import (
    build_ensemble,
    build_forest,
    build_grid,
    build_hierarchy,
    cluster_grid,
    diagnose_scene,
    extract_cycles,
    load_memory,
    nested_notation,
    predict,
    save_entry,
    scene_features,
)
from .language import format_scene, load_scene
from .models import CplError, Diagnostic, Scene, SceneParseError
from .utils import (
    clustering_to_dict,
    cycles_to_dict,
    cycles_to_dot,
    dot_source,
    dump_json,
    forest_to_dict,
    forest_to_dot,
    grid_to_csv,
    grid_to_dict,
    hierarchy_to_dict,
    hierarchy_to_dot,
    prediction_to_dict,
    save_image_from_grid,
)

logger = logging.getLogger(__name__)

EXIT_CLEAN = 0
EXIT_DIAGNOSTICS = 1
EXIT_FAILURE = 2


class AnalysisBlocked(Exception):
    """
    Raised when a scene has error diagnostics and cannot be analyzed further.
    """
    pass


def _use_color() -> bool:
    return os.environ.get('CPL_COLOR', '0').strip() == '1'


def _feature_list(text: str) -> List[str]:
    return [feature.strip() for feature in text.split(',') if feature.strip()]


def _plural(count: int, noun: str) -> str:
    return "{0} {1}{2}".format(count, noun, "" if count == 1 else "s")


class Command(object):
    """
    One subcommand invocation: parsed arguments plus the streams it reports to.
    """

    def __init__(self, args: argparse.Namespace, stdout: TextIO, stderr: TextIO) -> None:
        """
        Initialize the class with parameters.
        :param args: Parsed command-line arguments.
        :param stdout: Stream for command output when no `--out` is given.
        :param stderr: Stream for diagnostics that block an analysis.
        """
        self.args = args
        self.stdout = stdout
        self.stderr = stderr
        self.color = _use_color()

    def emit(self, text: str) -> None:
        if self.args.out:
            with open(self.args.out, 'w', encoding='utf-8', newline='') as f:
                f.write(text)
            logger.info("wrote %s", self.args.out)
        else:
            self.stdout.write(text)

    def format_diagnostics(self, diagnostics: Sequence[Diagnostic]) -> str:
        return "".join(diagnostic.format(self.args.file, self.color) + "\n" for diagnostic in diagnostics)

    def analyzable_scene(self) -> Scene:
        """
        Loads the scene and refuses to go on when it has error diagnostics.
        :return: A consistent scene.
        """
        scene = load_scene(self.args.file)
        diagnostics = diagnose_scene(scene)
        if any(diagnostic.is_error for diagnostic in diagnostics):
            self.stderr.write(self.format_diagnostics(diagnostics))
            raise AnalysisBlocked(self.args.file)
        return scene


def _check(command: Command) -> int:
    diagnostics = diagnose_scene(load_scene(command.args.file))
    errors = sum(1 for diagnostic in diagnostics if diagnostic.is_error)
    warnings = len(diagnostics) - errors
    command.emit("{0}{1}, {2}\n".format(
        command.format_diagnostics(diagnostics),
        _plural(errors, "error"),
        _plural(warnings, "warning"),
    ))
    return EXIT_DIAGNOSTICS if errors else EXIT_CLEAN


def _grid(command: Command) -> int:
    grid = build_grid(command.analyzable_scene())
    if command.args.image:
        save_image_from_grid(grid, command.args.image)
        logger.info("saved heat map to %s", command.args.image)
    if command.args.format == 'json':
        command.emit(dump_json(grid_to_dict(grid)))
    else:
        command.emit(grid_to_csv(grid))
    return EXIT_CLEAN


def _cluster(command: Command) -> int:
    clustering = cluster_grid(build_grid(command.analyzable_scene()))
    if command.args.format == 'json':
        command.emit(dump_json(clustering_to_dict(clustering)))
        return EXIT_CLEAN

    lines = ["{{{0}}}".format(", ".join(concept.name for concept in cluster)) for cluster in clustering.clusters]
    lines += [str(link) for link in clustering.secondary_links]
    command.emit("".join(line + "\n" for line in lines))
    return EXIT_CLEAN


def _trees(command: Command) -> int:
    forest = build_forest(command.analyzable_scene())
    if command.args.dot:
        command.emit(dot_source(forest_to_dot(forest)))
    elif command.args.format == 'json':
        command.emit(dump_json(forest_to_dict(forest)))
    else:
        command.emit(nested_notation(forest, command.args.sort) + "\n")
    return EXIT_CLEAN


def _cycles(command: Command) -> int:
    scene = command.analyzable_scene()
    report = extract_cycles(scene, build_forest(scene))
    if command.args.dot:
        command.emit(dot_source(cycles_to_dot(scene, report)))
    elif command.args.format == 'json':
        command.emit(dump_json(cycles_to_dict(report)))
    else:
        lines = [str(link) for link in report.uni_links] + [str(cycle) for cycle in report.cycles]
        command.emit("".join(line + "\n" for line in lines))
    return EXIT_CLEAN


def _hierarchy(command: Command) -> int:
    scene = command.analyzable_scene()
    result = build_hierarchy(scene, build_ensemble(scene))
    if command.args.dot:
        command.emit(dot_source(hierarchy_to_dot(result.hierarchy)))
    elif command.args.format == 'json':
        command.emit(dump_json(hierarchy_to_dict(result)))
    else:
        hierarchy = result.hierarchy
        lines = ["root: {0}".format(hierarchy.root.name)]
        lines += ["{0} -> {1}".format(parent.name, child.name) for parent, child in hierarchy.edges]
        text = "".join(line + "\n" for line in lines) + command.format_diagnostics(result.diagnostics)
        if command.args.trace:
            text += "trace:\n{0}\n".format(result.trace)
        command.emit(text)
    return EXIT_DIAGNOSTICS if any(diagnostic.is_error for diagnostic in result.diagnostics) else EXIT_CLEAN


def _predict(command: Command) -> int:
    store = load_memory(command.args.memory)
    legal = None if command.args.legal is None else _feature_list(command.args.legal)
    prediction = predict(store, _feature_list(command.args.input), legal, command.args.k)
    if command.args.format == 'json':
        command.emit(dump_json(prediction_to_dict(prediction)))
    else:
        command.emit("".join(str(item) + "\n" for item in prediction.ranked))
    return EXIT_CLEAN


def _format(command: Command) -> int:
    command.emit(format_scene(load_scene(command.args.file)))
    return EXIT_CLEAN


def _remember(command: Command) -> int:
    scene = command.analyzable_scene()
    path = save_entry(command.args.memory, command.args.id or scene.name, scene_features(scene))
    command.emit(path + "\n")
    return EXIT_CLEAN


COMMANDS = {
    'check': _check,
    'grid': _grid,
    'cluster': _cluster,
    'trees': _trees,
    'cycles': _cycles,
    'hierarchy': _hierarchy,
    'predict': _predict,
    'format': _format,
    'remember': _remember,
}  # type: Dict[str, Callable[[Command], int]]


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--out', metavar='PATH', help="write the output to PATH instead of standard output")
    common.add_argument('-v', '--verbose', action='count', default=0, help="log progress (-vv for debug output)")

    parser = argparse.ArgumentParser(prog='cpl', description="Analyze scenes written in the cognitive process language.")
    subparsers = parser.add_subparsers(dest='command', metavar='COMMAND')
    subparsers.required = True

    def scene_command(name: str, help_text: str) -> argparse.ArgumentParser:
        sub = subparsers.add_parser(name, parents=[common], help=help_text)
        sub.add_argument('file', metavar='FILE', help="scene script (.cpl)")
        return sub

    scene_command('check', "report diagnostics")
    scene_command('format', "print the canonical text of a scene")

    grid = scene_command('grid', "print the frequency grid")
    grid.add_argument('--format', choices=['csv', 'json'], default='csv')
    grid.add_argument('--image', metavar='PATH', help="also save the grid as a heat map")

    cluster = scene_command('cluster', "print primary clusters and secondary links")
    cluster.add_argument('--format', choices=['text', 'json'], default='text')

    trees = scene_command('trees', "print the nested object set")
    trees.add_argument('--dot', action='store_true', help="emit graphviz DOT")
    trees.add_argument('--format', choices=['text', 'json'], default='text')
    trees.add_argument('--sort', action='store_true', help="order children by name")

    cycles = scene_command('cycles', "print uni-directional links and process cycles")
    cycles.add_argument('--dot', action='store_true', help="emit graphviz DOT")
    cycles.add_argument('--format', choices=['text', 'json'], default='text')

    hierarchy = scene_command('hierarchy', "print the ensemble hierarchy")
    hierarchy.add_argument('--dot', action='store_true', help="emit graphviz DOT")
    hierarchy.add_argument('--format', choices=['text', 'json'], default='text')
    hierarchy.add_argument('--trace', action='store_true', help="append the construction trace")

    remember = scene_command('remember', "store a scene's concepts in a memory directory")
    remember.add_argument('--memory', metavar='DIR', required=True)
    remember.add_argument('--id', help="entry id, defaults to the scene name")

    prediction = subparsers.add_parser('predict', parents=[common], help="predict features from memory")
    prediction.add_argument('--memory', metavar='DIR', required=True)
    prediction.add_argument('--input', metavar='LIST', required=True, help="comma-separated input features")
    prediction.add_argument('--legal', metavar='LIST', help="comma-separated features legal in this situation")
    prediction.add_argument('-k', type=int, default=5, help="number of features to predict")
    prediction.add_argument('--format', choices=['text', 'json'], default='text')
    prediction.set_defaults(file=None)

    return parser


def _configure_logging(verbosity: int) -> None:
    level = logging.WARNING if verbosity == 0 else logging.INFO if verbosity == 1 else logging.DEBUG
    logging.basicConfig(stream=sys.stderr, level=level, format="%(levelname)s %(name)s: %(message)s")
    logging.getLogger(__name__.rpartition('.')[0]).setLevel(level)


def run(argv: Optional[Sequence[str]] = None, stdout: Optional[TextIO] = None, stderr: Optional[TextIO] = None) -> int:
    """
    Runs one subcommand.
    :param argv: Command-line arguments without the program name. Defaults to sys.argv[1:].
    :param stdout: Output stream, sys.stdout by default.
    :param stderr: Error stream, sys.stderr by default.
    :return: Exit code: 0 clean, 1 error diagnostics, 2 parse, I/O or usage failure.
    """
    stdout = sys.stdout if stdout is None else stdout
    stderr = sys.stderr if stderr is None else stderr

    try:
        args = build_parser().parse_args(argv)
    except SystemExit as error:
        return EXIT_FAILURE if error.code else EXIT_CLEAN

    _configure_logging(args.verbose)
    command = Command(args, stdout, stderr)

    try:
        return COMMANDS[args.command](command)
    except SceneParseError as error:
        stderr.write(command.format_diagnostics(error.diagnostics))
        return EXIT_FAILURE
    except AnalysisBlocked:
        return EXIT_DIAGNOSTICS
    except OSError as error:
        stderr.write("cpl: {0}\n".format(error))
        return EXIT_FAILURE
    except CplError as error:
        stderr.write("cpl: {0}\n".format(error))
        return EXIT_FAILURE


def main() -> None:
    sys.exit(run())
