# -*- coding: utf-8 -*-
import logging
from itertools import combinations
from typing import List, Tuple

from ..models import Clustering, FrequencyGrid, Scene, SecondaryLink
from ..utils.disjoint_set_node import DisjointSet
from .abstract_analyzer import AbstractAnalyzer

logger = logging.getLogger(__name__)


class GridBuilder(AbstractAnalyzer):
    """
    Counts how often two concepts meet on the left-hand side of a rule. Both mirrored cells are updated each time.
    """

    def process(self, scene: Scene) -> FrequencyGrid:
        """
        Builds the frequency grid of a scene.
        :param scene: Consistent scene.
        :return: Grid over the concepts used by rules, in first-appearance order.
        """
        concepts = []
        for rule in scene.rules:
            for concept in rule.concepts:
                if concept not in concepts:
                    concepts.append(concept)

        grid = FrequencyGrid(concepts)
        for rule in scene.rules:
            if rule.self_loop:
                continue
            for a, b in combinations(rule.concepts, 2):
                grid.increment(a, b)

        logger.debug("built %s", grid)
        return grid


class PrimaryClusterer(AbstractAnalyzer):
    """
    Greedy clustering: concepts join the concepts they have the largest counts with.

    Mutual-best pairs seed the clusters first, strongest count first; between equal counts the pair with less count
    mass towards third parties wins. Then unclustered concepts attach to their best partner outside the seeds as
    long as that partner has nothing better among its own cluster and the remaining unclustered concepts.
    """

    def process(self, grid: FrequencyGrid) -> Clustering:
        """
        Clusters the concepts of a grid.
        :param grid: Frequency grid.
        :return: Clustering without secondary links. Clusters are ordered by their first concept in the grid.
        """
        n = grid.size
        counts = grid.counts
        names = [concept.name for concept in grid.concepts]
        strength = [int(value) for value in counts.sum(axis=1)]
        best = [int(counts[i].max()) for i in range(n)]

        sets = DisjointSet(n)
        clustered = [False] * n

        seeds = []
        for i, j in combinations(range(n), 2):
            count = int(counts[i, j])
            if count > 0 and count == best[i] == best[j]:
                mass = strength[i] + strength[j] - 2 * count
                seeds.append((-count, mass, tuple(sorted((names[i], names[j]))), i, j))

        for _, _, _, i, j in sorted(seeds):
            if clustered[i] or clustered[j]:
                continue
            sets.union(i, j)
            clustered[i] = clustered[j] = True
            logger.debug("seeded cluster %s, %s", names[i], names[j])

        committed = {i for i in range(n) if clustered[i]}

        while True:
            attachments = self._attachments(grid, sets, clustered, committed)
            if not attachments:
                break
            _, _, _, x, y = min(attachments)
            sets.union(x, y)
            clustered[x] = clustered[y] = True
            logger.debug("attached %s to %s", names[x], names[y])

        return Clustering(tuple(grid.concepts[i] for i in group) for group in sets.groups())

    @staticmethod
    def _attachments(
            grid: FrequencyGrid,
            sets: DisjointSet,
            clustered: List[bool],
            committed: set,
    ) -> List[Tuple[int, str, str, int, int]]:
        n = grid.size
        counts = grid.counts
        attachments = []

        for x in range(n):
            if clustered[x]:
                continue
            partners = [y for y in range(n) if y != x and y not in committed]
            top = max((int(counts[x, y]) for y in partners), default=0)
            if top == 0:
                continue

            for y in partners:
                if int(counts[x, y]) != top:
                    continue
                own = [
                    z for z in range(n)
                    if z != y and (not clustered[z] or (clustered[y] and sets.same(y, z)))
                ]
                if top >= max(int(counts[y, z]) for z in own):
                    attachments.append((-top, grid.concepts[x].name, grid.concepts[y].name, x, y))

        return attachments


def build_grid(scene: Scene) -> FrequencyGrid:
    return GridBuilder().process(scene)


def primary_clusters(grid: FrequencyGrid) -> Clustering:
    return PrimaryClusterer().process(grid)


def secondary_links(grid: FrequencyGrid, clustering: Clustering) -> Tuple[SecondaryLink, ...]:
    """
    Collects the count relations left between clusters.
    :param grid: Frequency grid.
    :param clustering: Clustering of the grid's concepts.
    :return: Every nonzero cross-cluster pair, strongest first, then by name.
    """
    links = []
    for a, b, count in grid.pairs():
        if clustering.cluster_of(a) == clustering.cluster_of(b):
            continue
        left, right = sorted((a, b), key=lambda concept: concept.name)
        links.append(SecondaryLink(left, right, count))
    return tuple(sorted(links, key=lambda link: (-link.count, link.left.name, link.right.name)))


def cluster_grid(grid: FrequencyGrid) -> Clustering:
    """
    Runs the primary clustering and attaches the secondary links.
    :param grid: Frequency grid.
    :return: Complete clustering.
    """
    clustering = primary_clusters(grid)
    return Clustering(clustering.clusters, secondary_links(grid, clustering))
