# -*- coding: utf-8 -*-
import logging
from typing import Dict

import pydot

from ..models import ConceptId, CycleReport, Hierarchy, OccurrenceForest, Scene
from ..analyzers.concept_forest import cross_links
from ..analyzers.process_cycles import build_process_graph

logger = logging.getLogger(__name__)

CYCLE_COLORS = ['red', 'blue', 'darkgreen', 'orange', 'purple', 'brown', 'magenta', 'cyan']


def forest_to_dot(forest: OccurrenceForest) -> pydot.Dot:
    """
    Draws the forest with one cluster per tree. Repeated occurrences are joined by dashed, undirected edges.
    :param forest: Concept forest.
    :return: DOT graph.
    """
    graph = pydot.Dot('forest', graph_type='digraph', rankdir='TB')
    trees = forest.trees()

    def node_id(occurrence) -> str:
        return "n{0}".format(occurrence.index)

    for root in forest.roots:
        if forest.container is not None and root.concept == forest.container:
            graph.add_node(pydot.Node(node_id(root), label=root.concept.name, shape='box'))

    for position, tree in enumerate(trees):
        cluster = pydot.Cluster('tree{0}'.format(position), label=tree.concept.name, style='dotted')
        for occurrence in tree.walk():
            cluster.add_node(pydot.Node(
                node_id(occurrence),
                label=occurrence.concept.name,
                style='solid' if occurrence.is_home else 'dashed',
            ))
        graph.add_subgraph(cluster)

    for occurrence in forest.occurrences():
        if occurrence.parent is not None:
            graph.add_edge(pydot.Edge(node_id(occurrence.parent), node_id(occurrence)))

    for link in cross_links(forest):
        graph.add_edge(pydot.Edge(node_id(link.first), node_id(link.second), style='dashed', dir='none'))

    return graph


def cycles_to_dot(scene: Scene, report: CycleReport) -> pydot.Dot:
    """
    Draws the process graph with the edges of every cycle colored, one color per cycle.
    :param scene: Scene the report was built from.
    :param report: Cycle report.
    :return: DOT graph.
    """
    process_graph = build_process_graph(scene)
    graph = pydot.Dot('cycles', graph_type='digraph')

    ids = {}  # type: Dict[ConceptId, str]
    for concept in process_graph.nodes:
        ids[concept] = "n{0}".format(len(ids))
        graph.add_node(pydot.Node(ids[concept], label=concept.name))

    colored = {}  # type: Dict[tuple, str]
    for position, cycle in enumerate(report.cycles):
        color = CYCLE_COLORS[position % len(CYCLE_COLORS)]
        for a, b in zip(cycle.concepts, cycle.concepts[1:]):
            colored.setdefault((a, b), color)

    for a, b, data in process_graph.edges(data=True):
        attributes = {'label': data['rule']}
        if (a, b) in colored:
            attributes.update(color=colored[(a, b)], penwidth='2')
        graph.add_edge(pydot.Edge(ids[a], ids[b], **attributes))

    return graph


def hierarchy_to_dot(hierarchy: Hierarchy) -> pydot.Dot:
    """
    Draws the hierarchy with the root at the bottom.
    :param hierarchy: Ensemble hierarchy.
    :return: DOT graph.
    """
    graph = pydot.Dot('hierarchy', graph_type='digraph', rankdir='BT')
    ids = {concept: "n{0}".format(i) for i, concept in enumerate(hierarchy.nodes)}
    for concept in hierarchy.nodes:
        shape = 'doublecircle' if concept == hierarchy.root else 'ellipse'
        graph.add_node(pydot.Node(ids[concept], label=concept.name, shape=shape))
    for parent, child in hierarchy.edges:
        graph.add_edge(pydot.Edge(ids[parent], ids[child]))
    return graph


def dot_source(graph: pydot.Dot) -> str:
    source = graph.to_string()
    logger.debug("rendered %s with %d nodes", graph.get_name(), len(graph.get_nodes()))
    return source if source.endswith('\n') else source + '\n'
