# -*- coding: utf-8 -*-
from typing import Dict, List


class DisjointSetNode(object):
    """
    A single node in a disjoint set. Values are grid positions; the smallest one names the set.
    """

    def __init__(self, value: int) -> None:
        self.value = value
        self.parent = self

    def root(self) -> 'DisjointSetNode':
        """
        Gets the root of the set.
        :return: Node that represents the root.
        """
        if self.parent is not self:
            self.parent = self.parent.root()
        return self.parent

    def unite_with(self, other: 'DisjointSetNode') -> None:
        """
        Unite two nodes into a single set. The root with the smaller value stays the root.
        :param other: Node to unite with.
        :return: None
        """
        root = self.root()
        other_root = other.root()

        if root is other_root:
            return

        if root.value > other_root.value:
            root, other_root = other_root, root
        other_root.parent = root


class DisjointSet(object):
    """
    A partition of the positions 0..n-1 that starts out as singletons.
    """

    def __init__(self, n: int) -> None:
        self.nodes = [DisjointSetNode(i) for i in range(n)]

    def find(self, i: int) -> int:
        return self.nodes[i].root().value

    def union(self, i: int, j: int) -> None:
        self.nodes[i].unite_with(self.nodes[j])

    def same(self, i: int, j: int) -> bool:
        return self.find(i) == self.find(j)

    def groups(self) -> List[List[int]]:
        """
        Gets every set, members ascending, sets ordered by their smallest member.
        :return: The partition.
        """
        groups = {}  # type: Dict[int, List[int]]
        for node in self.nodes:
            groups.setdefault(node.root().value, []).append(node.value)
        return [groups[root] for root in sorted(groups)]
