# -*- coding: utf-8 -*-
import csv
import io
import json
from typing import Any, Dict, List, Optional

from ..models import (
    Clustering,
    CycleReport,
    Diagnostic,
    FrequencyGrid,
    HierarchyResult,
    Occurrence,
    OccurrenceForest,
    Prediction,
)

FORMAT_VERSION = 1


def grid_to_csv(grid: FrequencyGrid) -> str:
    """
    Writes the grid as CSV: a header of concept names, one row per concept, blank diagonal cells.
    :param grid: Frequency grid.
    :return: CSV text with '\\n' line endings.
    """
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator='\n')
    names = [concept.name for concept in grid.concepts]
    writer.writerow([''] + names)
    for i, name in enumerate(names):
        writer.writerow([name] + ['' if i == j else int(grid.counts[i, j]) for j in range(grid.size)])
    return buffer.getvalue()


def _names(concepts) -> List[str]:
    return [concept.name for concept in concepts]


def grid_to_dict(grid: FrequencyGrid, clustering: Optional[Clustering] = None) -> Dict[str, Any]:
    """
    Exports the grid, and its clustering when given, as one JSON object.
    :param grid: Frequency grid.
    :param clustering: Clustering of the same grid.
    :return: Keys `format_version`, `concepts`, `counts`, then `clusters` and `secondary_links`.
    """
    payload = {
        'format_version': FORMAT_VERSION,
        'concepts': _names(grid.concepts),
        'counts': grid.counts.tolist(),
    }
    if clustering is not None:
        exported = clustering_to_dict(clustering)
        payload['clusters'] = exported['clusters']
        payload['secondary_links'] = exported['secondary_links']
    return payload


def clustering_to_dict(clustering: Clustering) -> Dict[str, Any]:
    return {
        'format_version': FORMAT_VERSION,
        'clusters': [_names(cluster) for cluster in clustering.clusters],
        'secondary_links': [
            {'left': link.left.name, 'right': link.right.name, 'count': link.count}
            for link in clustering.secondary_links
        ],
    }


def _occurrence_to_dict(occurrence: Occurrence) -> Dict[str, Any]:
    return {
        'concept': occurrence.concept.name,
        'home': occurrence.is_home,
        'placement': None if occurrence.origin is None else occurrence.origin.kind.value,
        'rule': None if occurrence.origin is None else occurrence.origin.rule,
        'children': [_occurrence_to_dict(child) for child in occurrence.children],
    }


def forest_to_dict(forest: OccurrenceForest) -> Dict[str, Any]:
    return {
        'format_version': FORMAT_VERSION,
        'container': None if forest.container is None else forest.container.name,
        'roots': [_occurrence_to_dict(root) for root in forest.roots],
    }


def cycles_to_dict(report: CycleReport) -> Dict[str, Any]:
    return {
        'format_version': FORMAT_VERSION,
        'uni_links': [
            {'kind': link.kind.value, 'source': _names(link.source), 'target': _names(link.target)}
            for link in report.uni_links
        ],
        'cycles': [{'concepts': _names(cycle.concepts), 'rules': list(cycle.rules)} for cycle in report.cycles],
    }


def diagnostic_to_dict(diagnostic: Diagnostic) -> Dict[str, Any]:
    return {
        'severity': diagnostic.severity.value,
        'message': diagnostic.message,
        'line': diagnostic.line,
        'column': diagnostic.column,
        'rules': list(diagnostic.rules),
    }


def hierarchy_to_dict(result: HierarchyResult) -> Dict[str, Any]:
    hierarchy = result.hierarchy
    return {
        'format_version': FORMAT_VERSION,
        'root': hierarchy.root.name,
        'nodes': _names(hierarchy.nodes),
        'edges': [[parent.name, child.name] for parent, child in hierarchy.edges],
        'trace': [
            {'kind': event.kind.value, 'rule': event.rule, 'concepts': _names(event.concepts)}
            for event in result.trace.events
        ],
        'diagnostics': [diagnostic_to_dict(diagnostic) for diagnostic in result.diagnostics],
    }


def prediction_to_dict(prediction: Prediction) -> Dict[str, Any]:
    return {
        'format_version': FORMAT_VERSION,
        'legal': None if prediction.legal is None else sorted(prediction.legal),
        'predicted': [
            {'feature': item.feature, 'votes': item.votes, 'future': item.future}
            for item in prediction.ranked
        ],
    }


def dump_json(payload: Dict[str, Any]) -> str:
    """
    Serializes an export with two-space indentation, keys kept in insertion order.
    :param payload: One of the `*_to_dict` exports.
    :return: JSON text ending with a newline.
    """
    return json.dumps(payload, indent=2) + '\n'
