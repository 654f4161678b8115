# -*- coding: utf-8 -*-
from typing import Optional, Union

import attr
import numpy as np

Atom = Union[str, int, float]


def _format_atom(atom: Atom) -> str:
    if isinstance(atom, float):
        return np.format_float_positional(atom, trim='0')
    return str(atom)


@attr.s(frozen=True, slots=True, repr=False)
class Amount(object):
    """
    A dimensionless amount written in a quantity annotation: a symbol, a number or a difference of two of them.
    """
    minuend = attr.ib(type=Atom)
    subtrahend = attr.ib(type=Optional[Atom], default=None)

    def __str__(self) -> str:
        if self.subtrahend is None:
            return _format_atom(self.minuend)
        return "{0}-{1}".format(_format_atom(self.minuend), _format_atom(self.subtrahend))

    __repr__ = __str__

    @property
    def is_numeric(self) -> bool:
        atoms = [self.minuend] if self.subtrahend is None else [self.minuend, self.subtrahend]
        return all(not isinstance(atom, str) for atom in atoms)

    @property
    def is_simple(self) -> bool:
        return self.subtrahend is None

    @property
    def value(self) -> Union[int, float]:
        """
        Evaluates a numeric amount.
        :return: The numeric value.
        """
        if not self.is_numeric:
            raise ValueError("amount {0} is symbolic".format(self))
        if self.subtrahend is None:
            return self.minuend
        return self.minuend - self.subtrahend


@attr.s(frozen=True, slots=True)
class Quantity(object):
    """
    The general quantity form of a rule: the effector carries `total` on the input chain, `taken` moves into the
    output and `remainder` stays with the source.
    """
    total = attr.ib(type=Optional[Amount], default=None)
    taken = attr.ib(type=Optional[Amount], default=None)
    remainder = attr.ib(type=Optional[Amount], default=None)

    def __str__(self) -> str:
        return "(total={0}, taken={1}, remainder={2})".format(self.total, self.taken, self.remainder)
