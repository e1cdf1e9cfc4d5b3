from .base import ArtifactModel, SCHEMA_VERSION
from .profiles import CoveringEntry, CoveringProfile, LogCountProfile, ComplexityEntry, ComplexityProfile
from .reports import (
    InvariantCheck,
    ValidationReport,
    TrendRecord,
    DimensionEstimate,
    HyperspaceCount,
    HyperspaceEntry,
    VerificationReport,
)
from .intervals import IntervalSet

__all__ = [
    'ArtifactModel',
    'SCHEMA_VERSION',
    'CoveringEntry',
    'CoveringProfile',
    'LogCountProfile',
    'ComplexityEntry',
    'ComplexityProfile',
    'InvariantCheck',
    'ValidationReport',
    'TrendRecord',
    'DimensionEstimate',
    'HyperspaceCount',
    'HyperspaceEntry',
    'VerificationReport',
    'IntervalSet',
]
