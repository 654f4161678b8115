# -*- coding: utf-8 -*-
from .create_image import save_image_from_grid, show_image_from_grid
from .disjoint_set_node import DisjointSet, DisjointSetNode
from .dot_export import cycles_to_dot, dot_source, forest_to_dot, hierarchy_to_dot
from .serialization import (
    FORMAT_VERSION,
    clustering_to_dict,
    cycles_to_dict,
    diagnostic_to_dict,
    dump_json,
    forest_to_dict,
    grid_to_csv,
    grid_to_dict,
    hierarchy_to_dict,
    prediction_to_dict,
)

__all__ = [
    'DisjointSet',
    'DisjointSetNode',
    'FORMAT_VERSION',
    'clustering_to_dict',
    'cycles_to_dict',
    'cycles_to_dot',
    'diagnostic_to_dict',
    'dot_source',
    'dump_json',
    'forest_to_dict',
    'forest_to_dot',
    'grid_to_csv',
    'grid_to_dict',
    'hierarchy_to_dict',
    'hierarchy_to_dot',
    'prediction_to_dict',
    'save_image_from_grid',
    'show_image_from_grid',
]
