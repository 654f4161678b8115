# -*- coding: utf-8 -*-
from typing import List

from ..models import Chain, ResultTerm, Rule, Scene

INDENT = '  '


def _chain(chain: Chain) -> str:
    text = ".".join(element.symbol for element in chain.elements)
    return text if chain.quantity is None else "{0}({1})".format(text, chain.quantity)


def _term(term: ResultTerm) -> str:
    return ".".join(
        element.concept.symbol if element.amount is None else "{0}({1})".format(element.concept.symbol, element.amount)
        for element in term.elements
    )


def format_rule(rule: Rule) -> str:
    """
    Writes one rule in canonical form, relation chains written out pairwise.
    :param rule: Rule to write.
    :return: Rule text including the terminating semicolon.
    """
    if rule.self_loop:
        body = "{0} -> {0}".format(rule.outputs[0].symbol)
    else:
        body = "{0} + {1} -> {2}".format(
            " ^ ".join(output.symbol for output in rule.outputs),
            " ^ ".join(_chain(chain) for chain in rule.inputs),
            " ^ ".join(_term(term) for term in rule.declared_results),
        )
        if rule.relations:
            body += " where " + ", ".join(relation.format() for relation in rule.relations)

    if rule.label is not None:
        body = "{0}: {1}".format(rule.label, body)
    return body + ";"


def format_scene(scene: Scene) -> str:
    """
    Writes a scene back to canonical CPL text that parses to an equal scene.
    :param scene: Scene to write.
    :return: Script text ending with a newline.
    """
    lines = ["scene {0} {{".format(scene.name), INDENT + "entities {"]  # type: List[str]
    for entity in scene.entities:
        if entity.abbrev is None:
            lines.append(INDENT * 2 + "{0};".format(entity.name))
        else:
            lines.append(INDENT * 2 + "{0} as {1};".format(entity.name, entity.abbrev))
    lines.append(INDENT + "}")

    if scene.root is not None:
        lines.append(INDENT + "root {0};".format(scene.root.symbol))

    lines.append(INDENT + "rules {")
    lines.extend(INDENT * 2 + format_rule(rule) for rule in scene.rules)
    lines.append(INDENT + "}")
    lines.append("}")
    return "\n".join(lines) + "\n"
