from .generate_scenes import (
    SCENES_DIR,
    generate_concepts,
    generate_features,
    generate_rule,
    generate_scene,
    generate_store,
    scene_path,
    shuffle_rules,
)
from .oracles import check_grid, count_pairs_brute_force, count_votes_brute_force, predict_brute_force

__all__ = [
    'SCENES_DIR',
    'check_grid',
    'count_pairs_brute_force',
    'count_votes_brute_force',
    'generate_concepts',
    'generate_features',
    'generate_rule',
    'generate_scene',
    'generate_store',
    'predict_brute_force',
    'scene_path',
    'shuffle_rules',
]
