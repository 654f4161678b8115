# -*- coding: utf-8 -*-
from .algebra import derive_result, is_reverse_pair, normalize_relation, reverse_pairs
from .formatter import format_rule, format_scene
from .parser import SceneBuilder, load_scene, parse_scene

__all__ = [
    'SceneBuilder',
    'derive_result',
    'format_rule',
    'format_scene',
    'is_reverse_pair',
    'load_scene',
    'normalize_relation',
    'parse_scene',
    'reverse_pairs',
]
