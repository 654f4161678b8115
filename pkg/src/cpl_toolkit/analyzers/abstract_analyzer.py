# -*- coding: utf-8 -*-
from abc import ABC, abstractmethod
from typing import Any


class AbstractAnalyzer(ABC):
    """
    An abstract class that defines the interface shared by every analysis step.
    """

    @abstractmethod
    def process(self, *args) -> Any:
        """
        Abstract process function to be implemented in the subclasses.
        :param args: Inputs of the analysis step.
        :return: Result of the analysis step.
        """
        pass
