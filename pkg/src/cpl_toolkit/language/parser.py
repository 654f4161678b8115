# -*- coding: utf-8 -*-
import logging
import re
from typing import Dict, List, Optional, Tuple

import pyparsing as pp

from ..models import (
    Chain,
    ConceptId,
    Diagnostic,
    Relation,
    ResultTerm,
    Rule,
    RuleError,
    Scene,
    SceneParseError,
    Severity,
    TermElement,
)
from .algebra import normalize_relation
from .grammar import Name, RawRelationChain, RawRule, RawScene, RawSelfLoop, RawTriple, parse_raw_scene

logger = logging.getLogger(__name__)

_TOKEN = re.compile(r"\w+|\S")
_NESTED_HINT = (
    "nested '(A -> B)' forms are not CPL rules; write each step as a triple 'O + S.F -> O.F.S'"
)


def _syntax_diagnostic(source: str, error: pp.ParseBaseException) -> Diagnostic:
    loc = min(error.loc, len(source))
    while loc < len(source) and source[loc].isspace():
        loc += 1
    token = _TOKEN.match(source, loc)
    found = token.group(0) if token is not None else None

    message = "syntax error: {0}".format(error.msg)
    message += ", found {0!r}".format(found) if found is not None else ", found end of text"
    if found == '(':
        message = "{0}; {1}".format(message, _NESTED_HINT)

    return Diagnostic(
        Severity.ERROR,
        message,
        pp.lineno(loc, source),
        pp.col(loc, source),
        len(found) if found is not None else 0,
    )


class SceneBuilder(object):
    """
    Turns a raw scene into a Scene: resolves names, desugars relation chains and checks rule shapes. Every problem
    is collected as a positioned diagnostic.
    """

    def __init__(self) -> None:
        """
        Initialize the class with parameters.
        """
        self.diagnostics = []  # type: List[Diagnostic]
        self.symbols = {}  # type: Dict[str, ConceptId]

    def _error(self, message: str, name_or_location, rules: Tuple[str, ...] = ()) -> None:
        location = name_or_location.location if isinstance(name_or_location, Name) else name_or_location
        self.diagnostics.append(Diagnostic.at(Severity.ERROR, message, location, rules))

    def _declare(self, raw_scene: RawScene) -> List[ConceptId]:
        entities = []
        for raw_entity in raw_scene.entities:
            concept = ConceptId(
                raw_entity.name.text,
                raw_entity.abbrev.text if raw_entity.abbrev is not None else None,
                raw_entity.name.location,
            )
            for name in filter(None, (raw_entity.name, raw_entity.abbrev)):
                if name.text in self.symbols:
                    self._error("duplicate declaration of {0}".format(name.text), name)
                else:
                    self.symbols[name.text] = concept
            entities.append(concept)
        return entities

    def _resolve(self, name: Name) -> Optional[ConceptId]:
        concept = self.symbols.get(name.text)
        if concept is None:
            self._error("unknown entity {0}".format(name.text), name)
        return concept

    def _relations(self, raw_relations: Tuple[RawRelationChain, ...]) -> List[Relation]:
        relations = []
        for raw in raw_relations:
            operands = [self._resolve(name) for name in raw.operands]
            for i, operator in enumerate(raw.operators):
                left, right = operands[i], operands[i + 1]
                if left is None or right is None:
                    continue
                try:
                    relations.append(normalize_relation(operator, left, right, raw.operands[i].location))
                except RuleError as error:
                    self._error(str(error), raw.operands[i])
        return relations

    def _triple(self, label: Optional[str], raw_rule: RawRule, body: RawTriple) -> Optional[Rule]:
        failed = len(self.diagnostics)

        outputs = [self._resolve(name) for name in body.outputs]
        known = [output for output in outputs if output is not None]
        if len(set(known)) != len(known):
            self._error("outputs must be distinct", body.outputs[0])

        inputs = []
        for raw_chain in body.chains:
            elements = [self._resolve(name) for name in raw_chain.names]
            if None in elements:
                continue
            if len(set(elements)) != len(elements):
                self._error("chain elements must be distinct", raw_chain.location)
                continue
            inputs.append(Chain(elements, raw_chain.amount, raw_chain.location))

        results = []
        for raw_term in body.terms:
            elements = []
            for position, raw_element in enumerate(raw_term.elements):
                concept = self._resolve(raw_element.name)
                if raw_element.amount is not None and position not in (1, len(raw_term.elements) - 1):
                    self._error(
                        "quantity on {0} must sit on the effector or the source of the result term".format(
                            raw_element.name.text,
                        ),
                        raw_element.name,
                    )
                elements.append(TermElement(concept, raw_element.amount))
            results.append(ResultTerm(elements, raw_term.location))

        relations = self._relations(body.relations)
        if len(self.diagnostics) != failed:
            return None
        return Rule(label, outputs, inputs, results, relations, False, raw_rule.location)

    def _self_loop(self, label: Optional[str], raw_rule: RawRule, body: RawSelfLoop) -> Optional[Rule]:
        left, right = self._resolve(body.left), self._resolve(body.right)
        if left is None or right is None:
            return None
        if left != right:
            self._error("a self-loop must name the same concept on both sides", body.right)
            return None
        if body.relations:
            self._error("a self-loop rule takes no where clause", body.relations[0].operands[0])
            return None
        return Rule(label, [left], self_loop=True, location=raw_rule.location)

    def process(self, raw_scene: RawScene) -> Scene:
        """
        Builds the scene.
        :param raw_scene: Output of the grammar.
        :return: The scene. Raises SceneParseError with every diagnostic when anything is wrong.
        """
        entities = self._declare(raw_scene)
        root = self._resolve(raw_scene.root.name) if raw_scene.root is not None else None

        labels = set()
        rules = []
        for raw_rule in raw_scene.rules:
            label = raw_rule.label.text if raw_rule.label is not None else None
            if label is not None:
                if label in labels:
                    self._error("duplicate rule label {0}".format(label), raw_rule.label)
                labels.add(label)

            if isinstance(raw_rule.body, RawSelfLoop):
                rule = self._self_loop(label, raw_rule, raw_rule.body)
            else:
                rule = self._triple(label, raw_rule, raw_rule.body)
            if rule is not None:
                rules.append(rule)

        if self.diagnostics:
            raise SceneParseError(sorted(self.diagnostics, key=lambda diagnostic: diagnostic.sort_key))
        return Scene(raw_scene.name.text, entities, root, rules)


def parse_scene(source: str) -> Scene:
    """
    Parses a CPL scene script.
    :param source: Script text.
    :return: The scene. Raises SceneParseError carrying positioned diagnostics on failure.
    """
    try:
        raw_scene = parse_raw_scene(source)
    except pp.ParseBaseException as error:
        diagnostic = _syntax_diagnostic(source, error)
        logger.debug("syntax error at %d:%d", diagnostic.line, diagnostic.column)
        raise SceneParseError([diagnostic])

    scene = SceneBuilder().process(raw_scene)
    logger.debug("parsed scene %s with %d entities and %d rules", scene.name, len(scene.entities), len(scene.rules))
    return scene


def load_scene(path: str) -> Scene:
    """
    Reads and parses a `.cpl` file.
    :param path: Path to the script, UTF-8 encoded.
    :return: The scene.
    """
    with open(path, encoding='utf-8') as f:
        return parse_scene(f.read())
