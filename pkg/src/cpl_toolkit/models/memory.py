# -*- coding: utf-8 -*-
from threading import RLock
from typing import Dict, FrozenSet, Iterable, List, Optional, Set, Tuple

import attr

from .errors import DuplicateEntryError, MemoryEntryError


class MemoryStore(object):
    """
    Stored scenes as feature sets, indexed by feature. Reads work on snapshots, writes take the lock.
    """

    def __init__(self) -> None:
        """
        Initialize the class with parameters.
        """
        self._lock = RLock()
        self._entries = {}  # type: Dict[str, FrozenSet[str]]
        self._index = {}  # type: Dict[str, Set[str]]

    def __str__(self) -> str:
        return "MemoryStore(size={0})".format(self.size)

    __repr__ = __str__

    @property
    def size(self) -> int:
        return len(self._entries)

    @property
    def entries(self) -> Dict[str, FrozenSet[str]]:
        with self._lock:
            return dict(self._entries)

    def add(self, entry_id: str, features: Iterable[str]) -> None:
        """
        Adds an entry to the store.
        :param entry_id: Fresh identifier of the stored scene.
        :param features: Non-empty feature set of the scene.
        :return: None
        """
        features = frozenset(features)
        if not features:
            raise MemoryEntryError("entry {0} has no features".format(entry_id))

        with self._lock:
            if entry_id in self._entries:
                raise DuplicateEntryError("entry {0} is already stored".format(entry_id))
            self._entries[entry_id] = features
            for feature in features:
                self._index.setdefault(feature, set()).add(entry_id)

    def matching(self, feature: str) -> List[FrozenSet[str]]:
        """
        Retrieves the feature sets of every entry containing a feature.
        :param feature: Feature to look up.
        :return: Feature sets, in identifier order.
        """
        with self._lock:
            return [self._entries[entry_id] for entry_id in sorted(self._index.get(feature, ()))]


@attr.s(frozen=True, slots=True, repr=False)
class PredictedFeature(object):
    feature = attr.ib(type=str)
    votes = attr.ib(type=int)
    future = attr.ib(type=bool)

    def __str__(self) -> str:
        return "{0} {1}{2}".format(self.feature, self.votes, " (future)" if self.future else "")

    __repr__ = __str__


@attr.s(frozen=True, slots=True, repr=False)
class Prediction(object):
    """
    Vote-ranked features, optionally restricted to what is legal in the current situation.
    """
    ranked = attr.ib(type=Tuple[PredictedFeature, ...], converter=tuple)
    legal = attr.ib(type=Optional[FrozenSet[str]], default=None)

    def __str__(self) -> str:
        return "Prediction(ranked={0}, legal={1})".format(
            list(self.ranked),
            None if self.legal is None else sorted(self.legal),
        )

    __repr__ = __str__

    @property
    def pairs(self) -> List[Tuple[str, int]]:
        return [(item.feature, item.votes) for item in self.ranked]
