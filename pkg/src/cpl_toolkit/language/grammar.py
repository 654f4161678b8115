# -*- coding: utf-8 -*-
"""
Concrete CPL grammar. Parse actions build positioned raw syntax nodes; name resolution and shape checks happen in
the parser module.
"""
from typing import Optional, Tuple, Union

import attr
import pyparsing as pp

from ..models import Amount, SourceLocation

KEYWORDS = ('scene', 'entities', 'as', 'root', 'rules', 'where', 'in')


def location_at(source: str, loc: int, length: int = 1) -> SourceLocation:
    return SourceLocation(pp.lineno(loc, source), pp.col(loc, source), length)


@attr.s(frozen=True, slots=True)
class Name(object):
    text = attr.ib(type=str)
    location = attr.ib(type=SourceLocation)


@attr.s(frozen=True, slots=True)
class RawEntity(object):
    name = attr.ib(type=Name)
    abbrev = attr.ib(type=Optional[Name])


@attr.s(frozen=True, slots=True)
class RawRoot(object):
    name = attr.ib(type=Name)


@attr.s(frozen=True, slots=True)
class RawChain(object):
    names = attr.ib(type=Tuple[Name, ...])
    amount = attr.ib(type=Optional[Amount])

    @property
    def location(self) -> SourceLocation:
        return self.names[0].location


@attr.s(frozen=True, slots=True)
class RawTermElement(object):
    name = attr.ib(type=Name)
    amount = attr.ib(type=Optional[Amount])


@attr.s(frozen=True, slots=True)
class RawTerm(object):
    elements = attr.ib(type=Tuple[RawTermElement, ...])

    @property
    def location(self) -> SourceLocation:
        return self.elements[0].name.location


@attr.s(frozen=True, slots=True)
class RawRelationChain(object):
    """
    A written relation chain such as `E - H < P`: operands and the operators between them.
    """
    operands = attr.ib(type=Tuple[Name, ...])
    operators = attr.ib(type=Tuple[str, ...])


@attr.s(frozen=True, slots=True)
class RawTriple(object):
    outputs = attr.ib(type=Tuple[Name, ...])
    chains = attr.ib(type=Tuple[RawChain, ...])
    terms = attr.ib(type=Tuple[RawTerm, ...])
    relations = attr.ib(type=Tuple[RawRelationChain, ...])

    @property
    def location(self) -> SourceLocation:
        return self.outputs[0].location


@attr.s(frozen=True, slots=True)
class RawSelfLoop(object):
    left = attr.ib(type=Name)
    right = attr.ib(type=Name)
    relations = attr.ib(type=Tuple[RawRelationChain, ...])

    @property
    def location(self) -> SourceLocation:
        return self.left.location


@attr.s(frozen=True, slots=True)
class RawLabel(object):
    name = attr.ib(type=Name)


@attr.s(frozen=True, slots=True)
class RawRule(object):
    label = attr.ib(type=Optional[Name])
    body = attr.ib(type=Union[RawTriple, RawSelfLoop])
    location = attr.ib(type=SourceLocation)


@attr.s(frozen=True, slots=True)
class RawScene(object):
    name = attr.ib(type=Name)
    entities = attr.ib(type=Tuple[RawEntity, ...])
    root = attr.ib(type=Optional[RawRoot])
    rules = attr.ib(type=Tuple[RawRule, ...])


def _name_action(source: str, loc: int, tokens: pp.ParseResults) -> Name:
    return Name(tokens[0], location_at(source, loc, len(tokens[0])))


def _number_action(tokens: pp.ParseResults) -> Union[int, float]:
    return float(tokens[0]) if '.' in tokens[0] else int(tokens[0])


def _amount_action(tokens: pp.ParseResults) -> Amount:
    atoms = [token.text if isinstance(token, Name) else token for token in tokens]
    return Amount(atoms[0], atoms[1] if len(atoms) > 1 else None)


def _chain_action(tokens: pp.ParseResults) -> RawChain:
    names = tuple(token for token in tokens if isinstance(token, Name))
    amounts = [token for token in tokens if isinstance(token, Amount)]
    return RawChain(names, amounts[0] if amounts else None)


def _term_element_action(tokens: pp.ParseResults) -> RawTermElement:
    return RawTermElement(tokens[0], tokens[1] if len(tokens) > 1 else None)


def _relation_action(tokens: pp.ParseResults) -> RawRelationChain:
    return RawRelationChain(tuple(tokens[0::2]), tuple(tokens[1::2]))


def _triple_action(tokens: pp.ParseResults) -> RawTriple:
    relations = tuple(tokens[3]) if len(tokens) > 3 else ()
    return RawTriple(tuple(tokens[0]), tuple(tokens[1]), tuple(tokens[2]), relations)


def _self_loop_action(tokens: pp.ParseResults) -> RawSelfLoop:
    relations = tuple(tokens[2]) if len(tokens) > 2 else ()
    return RawSelfLoop(tokens[0], tokens[1], relations)


def _rule_action(tokens: pp.ParseResults) -> RawRule:
    label = tokens[0].name if isinstance(tokens[0], RawLabel) else None
    body = tokens[-1]
    return RawRule(label, body, label.location if label is not None else body.location)


def _scene_action(tokens: pp.ParseResults) -> RawScene:
    root = tokens[2] if isinstance(tokens[2], RawRoot) else None
    return RawScene(tokens[0], tuple(tokens[1]), root, tuple(tokens[-1]))


def _build_grammar() -> pp.ParserElement:
    lbrace, rbrace, lpar, rpar, semi, colon, comma, plus, dot, caret = map(pp.Suppress, "{}();:,+.^")
    arrow = pp.Suppress(pp.Literal("->").set_name("'->'"))

    keyword = pp.MatchFirst([pp.Keyword(text) for text in KEYWORDS])
    word = pp.Word(pp.alphas, pp.alphanums + "_").set_name("identifier").set_parse_action(_name_action)
    identifier = (~keyword + word).set_name("identifier")

    number = pp.Regex(r"-?\d+(\.\d+)?").set_name("number").set_parse_action(_number_action)
    atom = number | identifier
    amount = (atom + pp.Optional(pp.Suppress("-") + atom)).set_parse_action(_amount_action)
    quantity = (lpar - amount - rpar).set_name("quantity")

    chain = (identifier + pp.OneOrMore(dot + identifier) + pp.Optional(quantity)).set_name("input chain")
    chain.set_parse_action(_chain_action)
    term_element = (identifier + pp.Optional(quantity)).set_parse_action(_term_element_action)
    term = (term_element + pp.OneOrMore(dot + term_element)).set_name("result term")
    term.set_parse_action(lambda tokens: RawTerm(tuple(tokens)))

    relation_operator = (pp.Literal("<") | pp.Literal(">") | pp.Literal("-") | pp.Keyword("in"))
    relation = (identifier + pp.OneOrMore(relation_operator.set_name("relation operator") - identifier))
    relation.set_parse_action(_relation_action)
    where_clause = pp.Group(pp.Suppress(pp.Keyword("where")) - relation + pp.ZeroOrMore(comma - relation))

    refs = pp.Group(identifier + pp.ZeroOrMore(caret - identifier))
    chains = pp.Group(chain + pp.ZeroOrMore(caret - chain))
    terms = pp.Group(term + pp.ZeroOrMore(caret - term))
    triple = (refs + plus - chains - arrow - terms + pp.Optional(where_clause)).set_parse_action(_triple_action)
    self_loop = (identifier + arrow - identifier + pp.Optional(where_clause)).set_parse_action(_self_loop_action)

    label = (identifier + colon).set_parse_action(lambda tokens: RawLabel(tokens[0]))
    rule = (pp.Optional(label) + (triple | self_loop) - semi).set_name("rule").set_parse_action(_rule_action)

    abbreviation = pp.Suppress(pp.Keyword("as")) - identifier
    entity = (identifier + pp.Optional(abbreviation) - semi).set_name("entity declaration")
    entity.set_parse_action(lambda tokens: RawEntity(tokens[0], tokens[1] if len(tokens) > 1 else None))
    entities = pp.Suppress(pp.Keyword("entities")) - lbrace - pp.Group(pp.OneOrMore(entity)) - rbrace
    root = (pp.Suppress(pp.Keyword("root")) - identifier - semi).set_parse_action(lambda tokens: RawRoot(tokens[0]))
    rules = pp.Suppress(pp.Keyword("rules")) - lbrace - pp.Group(pp.ZeroOrMore(rule)) - rbrace

    scene = pp.Suppress(pp.Keyword("scene")) - identifier - lbrace - entities - pp.Optional(root) - rules - rbrace
    scene.set_parse_action(_scene_action)
    scene.ignore(pp.python_style_comment)
    scene.parse_with_tabs()
    return scene


SCENE = _build_grammar()


def parse_raw_scene(source: str) -> RawScene:
    """
    Runs the grammar over a script.
    :param source: Script text.
    :return: The raw scene. Syntax errors surface as pyparsing exceptions.
    """
    return SCENE.parse_string(source, parse_all=True)[0]
