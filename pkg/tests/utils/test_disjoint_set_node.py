# -*- coding: utf-8 -*-
import pytest
from numpy.random import randint

from src.cpl_toolkit.utils import DisjointSet


class TestDisjointSet(object):

    def test_singletons(self) -> None:
        sets = DisjointSet(3)

        assert sets.groups() == [[0], [1], [2]]
        assert sets.same(0, 1) is False

    def test_smallest_member_names_the_set(self) -> None:
        sets = DisjointSet(5)
        sets.union(4, 2)
        sets.union(3, 4)
        sets.union(1, 0)

        assert sets.find(3) == 2
        assert sets.find(1) == 0
        assert sets.same(3, 2) is True
        assert sets.groups() == [[0, 1], [2, 3, 4]]

    @pytest.mark.repeat(200)
    def test_groups_are_a_partition(self) -> None:
        n = randint(1, 20)
        sets = DisjointSet(n)
        for _ in range(randint(0, n)):
            sets.union(randint(0, n), randint(0, n))

        groups = sets.groups()
        assert sorted(value for group in groups for value in group) == list(range(n))
        for group in groups:
            assert group == sorted(group)
            assert all(sets.find(value) == group[0] for value in group), groups
        assert [group[0] for group in groups] == sorted(group[0] for group in groups)
