"""Projective-plane interconnection networks: generation, analysis and costing."""

from .design import CostConfig, DesignReport, design, dimension, reproduce_table, scalability_sweep
from .field import FieldElement, FieldSpec, field_create, field_of_order
from .metrics import ALL_PAIRS, LEAF_TO_LEAF, MetricsReport, TrafficScope, analyze
from .topology import Topology, build, expected_params

__version__ = "0.1.0"
