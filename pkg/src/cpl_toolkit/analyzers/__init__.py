# -*- coding: utf-8 -*-
from .abstract_analyzer import AbstractAnalyzer
from .concept_forest import ForestBuilder, NestedNotation, build_forest, cross_links, nested_notation
from .ensemble_hierarchy import HierarchyBuilder, build_ensemble, build_hierarchy, select_root
from .frequency_grid import (
    GridBuilder,
    PrimaryClusterer,
    build_grid,
    cluster_grid,
    primary_clusters,
    secondary_links,
)
from .memory_predictor import (
    MemoryPredictor,
    cross_reference,
    load_memory,
    predict,
    save_entry,
    scene_features,
    store_scene,
)
from .process_cycles import CycleExtractor, build_process_graph, extract_cycles
from .rule_checker import (
    RuleValidator,
    SceneChecker,
    check_scene,
    diagnose_scene,
    unused_entities,
    validate_rule,
)

__all__ = [
    'AbstractAnalyzer',
    'CycleExtractor',
    'ForestBuilder',
    'GridBuilder',
    'HierarchyBuilder',
    'MemoryPredictor',
    'NestedNotation',
    'PrimaryClusterer',
    'RuleValidator',
    'SceneChecker',
    'build_ensemble',
    'build_forest',
    'build_grid',
    'build_hierarchy',
    'build_process_graph',
    'check_scene',
    'cluster_grid',
    'cross_links',
    'cross_reference',
    'diagnose_scene',
    'extract_cycles',
    'load_memory',
    'nested_notation',
    'predict',
    'primary_clusters',
    'save_entry',
    'scene_features',
    'secondary_links',
    'select_root',
    'store_scene',
    'unused_entities',
    'validate_rule',
]
