# -*- coding: utf-8 -*-
from .concept import ConceptId, Relation, RelationKind, SourceLocation
from .diagnostic import Diagnostic, Severity
from .errors import (
    CplError,
    DuplicateEntryError,
    EmptyEnsembleError,
    InvalidQueryError,
    MemoryEntryError,
    MemoryFormatError,
    RuleError,
    SceneParseError,
)
from .forest import (
    CrossLink,
    CycleReport,
    Occurrence,
    OccurrenceForest,
    Placement,
    PlacementKind,
    ProcessCycle,
    UniLink,
    UniLinkKind,
)
from .grid import Clustering, FrequencyGrid, SecondaryLink
from .hierarchy import ConstructionTrace, Ensemble, Hierarchy, HierarchyResult, TraceEvent, TraceEventKind
from .memory import MemoryStore, PredictedFeature, Prediction
from .quantity import Amount, Quantity
from .rule import Chain, ResultTerm, Rule, TermElement
from .scene import Scene
from .relation_store import RelationStore

__all__ = [
    'Amount',
    'Chain',
    'Clustering',
    'ConceptId',
    'ConstructionTrace',
    'CplError',
    'CrossLink',
    'CycleReport',
    'Diagnostic',
    'DuplicateEntryError',
    'EmptyEnsembleError',
    'Ensemble',
    'FrequencyGrid',
    'Hierarchy',
    'HierarchyResult',
    'InvalidQueryError',
    'MemoryEntryError',
    'MemoryFormatError',
    'MemoryStore',
    'Occurrence',
    'OccurrenceForest',
    'Placement',
    'PlacementKind',
    'PredictedFeature',
    'Prediction',
    'ProcessCycle',
    'Quantity',
    'Relation',
    'RelationKind',
    'RelationStore',
    'ResultTerm',
    'Rule',
    'Scene',
    'SecondaryLink',
    'Severity',
    'SourceLocation',
    'TermElement',
    'TraceEvent',
    'TraceEventKind',
    'UniLink',
    'UniLinkKind',
]
