from .metric_spaces import (
    MetricSpace,
    EuclideanSpace,
    MatrixSpace,
    SequenceSpace,
    diameter,
    check_metric_axioms,
)
from .dense_nets import BinaryExpansion, Region, DyadicEnumeration, DyadicNet, dyadic_net
from .ingest import read_points_csv, read_points_json, read_matrix_json, parse_number

__all__ = [
    'MetricSpace',
    'EuclideanSpace',
    'MatrixSpace',
    'SequenceSpace',
    'diameter',
    'check_metric_axioms',
    'BinaryExpansion',
    'Region',
    'DyadicEnumeration',
    'DyadicNet',
    'dyadic_net',
    'read_points_csv',
    'read_points_json',
    'read_matrix_json',
    'parse_number',
]
