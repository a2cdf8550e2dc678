"""
Data models module for the skew DGA tool.

Contains Pydantic models for ring specifications and command reports.
"""

from skew_dga_tool.models.ring_spec import FieldSpec, VariableSpec, QEntry, RingSpec
from skew_dga_tool.models.report_models import Bounds, Report

__all__ = [
    "FieldSpec",
    "VariableSpec",
    "QEntry",
    "RingSpec",
    "Bounds",
    "Report"
]
