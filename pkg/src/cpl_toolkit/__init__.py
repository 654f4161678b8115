# -*- coding: utf-8 -*-
from .analyzers import (
    build_ensemble,
    build_forest,
    build_grid,
    build_hierarchy,
    cluster_grid,
    diagnose_scene,
    extract_cycles,
    predict,
)
from .language import format_scene, load_scene, parse_scene

__all__ = [
    'build_ensemble',
    'build_forest',
    'build_grid',
    'build_hierarchy',
    'cluster_grid',
    'diagnose_scene',
    'extract_cycles',
    'format_scene',
    'load_scene',
    'parse_scene',
    'predict',
]
