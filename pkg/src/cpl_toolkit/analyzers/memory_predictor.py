# -*- coding: utf-8 -*-
import json
import logging
import os
from collections import Counter
from typing import Iterable, List, Optional

from ..models import (
    InvalidQueryError,
    MemoryEntryError,
    MemoryFormatError,
    MemoryStore,
    PredictedFeature,
    Prediction,
    Scene,
)
from .abstract_analyzer import AbstractAnalyzer

logger = logging.getLogger(__name__)

ENTRY_SUFFIX = '.json'


def store_scene(store: MemoryStore, entry_id: str, features: Iterable[str]) -> MemoryStore:
    """
    Stores a scene as a feature set.
    :param store: Store to add to.
    :param entry_id: Fresh identifier.
    :param features: Non-empty feature set.
    :return: The same store, one entry larger.
    """
    store.add(entry_id, features)
    return store


def cross_reference(store: MemoryStore, input_features: Iterable[str]) -> Counter:
    """
    Retrieves every entry holding an input feature and lets it vote for all of its features. An entry matched by
    several input features votes once per match.
    :param store: Memory to search.
    :param input_features: Features of the current scene.
    :return: Vote count per feature, input features included.
    """
    votes = Counter()
    for feature in sorted(set(input_features)):
        for features in store.matching(feature):
            votes.update(features)
    return votes


class MemoryPredictor(AbstractAnalyzer):
    """
    Predicts the features most likely to come next, constrained by what is legal in the current situation.
    """

    def __init__(self, k: int = 5) -> None:
        """
        Initialize the class with parameters.
        :param k: Number of features to predict.
        """
        if k < 1:
            raise InvalidQueryError("k must be at least 1, got {0}".format(k))
        self.k = k

    def process(
            self,
            store: MemoryStore,
            input_features: Iterable[str],
            legal: Optional[Iterable[str]] = None,
    ) -> Prediction:
        """
        Ranks the voted features.
        :param store: Memory to search.
        :param input_features: Features of the current scene.
        :param legal: Features allowed in the current situation. When given, input features may be predicted again.
        :return: Top-k features by votes, then by name.
        """
        inputs = set(input_features)
        votes = cross_reference(store, inputs)

        if legal is None:
            allowed = None
            candidates = {feature: count for feature, count in votes.items() if feature not in inputs}
        else:
            allowed = frozenset(legal)
            candidates = {feature: count for feature, count in votes.items() if feature in allowed}

        ranked = sorted(candidates.items(), key=lambda item: (-item[1], item[0]))[:self.k]
        return Prediction(
            [PredictedFeature(feature, count, feature not in inputs) for feature, count in ranked],
            allowed,
        )


def predict(
        store: MemoryStore,
        input_features: Iterable[str],
        legal: Optional[Iterable[str]] = None,
        k: int = 5,
) -> Prediction:
    return MemoryPredictor(k).process(store, input_features, legal)


def scene_features(scene: Scene) -> List[str]:
    """
    Gets the features a scene is remembered by: the names of the concepts its rules use.
    :param scene: Parsed scene.
    :return: Concept names in first-appearance order.
    """
    return [concept.name for concept in scene.referenced_concepts()]


def _entry_path(directory: str, entry_id: str) -> str:
    if not entry_id or os.sep in entry_id or (os.altsep and os.altsep in entry_id) or entry_id.startswith('.'):
        raise MemoryFormatError("entry id {0!r} cannot be used as a file name".format(entry_id))
    return os.path.join(directory, entry_id + ENTRY_SUFFIX)


def save_entry(directory: str, entry_id: str, features: Iterable[str]) -> str:
    """
    Writes one memory entry as `<id>.json`.
    :param directory: Memory directory, created when missing.
    :param entry_id: Identifier of the entry.
    :param features: Features of the entry.
    :return: Path of the written file.
    """
    path = _entry_path(directory, entry_id)
    os.makedirs(directory, exist_ok=True)
    with open(path, 'w', encoding='utf-8') as f:
        json.dump({'id': entry_id, 'features': sorted(set(features))}, f, indent=2)
        f.write('\n')
    logger.info("stored %s", path)
    return path


def load_memory(directory: str, strict: bool = False) -> MemoryStore:
    """
    Reads a memory directory, one JSON file per stored scene.
    :param directory: Memory directory.
    :param strict: Raise on malformed files instead of skipping them with a warning.
    :return: Store holding every valid entry.
    """
    store = MemoryStore()
    for file_name in sorted(os.listdir(directory)):
        if not file_name.endswith(ENTRY_SUFFIX):
            continue
        path = os.path.join(directory, file_name)
        try:
            with open(path, encoding='utf-8') as f:
                payload = json.load(f)
            if not isinstance(payload, dict) or not isinstance(payload.get('id'), str):
                raise MemoryFormatError("{0} has no string id".format(path))
            features = payload.get('features')
            if not isinstance(features, list) or not all(isinstance(feature, str) for feature in features):
                raise MemoryFormatError("{0} has no feature list".format(path))
            store.add(payload['id'], features)
        except (ValueError, MemoryEntryError, MemoryFormatError) as error:
            if strict:
                raise MemoryFormatError(str(error))
            logger.warning("skipped %s: %s", path, error)
    logger.debug("loaded %s from %s", store, directory)
    return store
