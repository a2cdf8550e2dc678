"""
Report models for the skew DGA tool.

Every command produces a Report; its JSON form has exactly the keys command,
bounds, result, warnings and elapsed_ms, with sorted keys so identical runs
print identical bytes.
"""

import json
from typing import Any, Dict, List, Optional

from pydantic import BaseModel, Field, field_validator

from skew_dga_tool.core.error_handler import ExitStatus


class Bounds(BaseModel):
    """Truncation bounds a command ran with."""

    hdeg: int = Field(..., ge=0, description="Homological bound N")
    ideg: int = Field(..., ge=0, description="Internal degree bound D")


class Report(BaseModel):
    """Machine-readable outcome of one command."""

    command: str = Field(..., description="Command that produced the report")
    bounds: Bounds = Field(..., description="Truncation bounds")
    result: Dict[str, Any] = Field(default_factory=dict, description="Command payload")
    warnings: List[str] = Field(default_factory=list, description="Truncation and skip notes")
    elapsed_ms: int = Field(0, ge=0, description="Wall time, 0 when timing is disabled")
    status: ExitStatus = Field(ExitStatus.OK, exclude=True, description="Process exit status")
    text: Optional[str] = Field(None, exclude=True, description="Human readable rendering")

    @field_validator("command")
    @classmethod
    def validate_command(cls, v):
        """Validate that the command is not empty."""
        if not v.strip():
            raise ValueError("command cannot be empty")
        return v

    @property
    def passed(self) -> bool:
        return self.status == ExitStatus.OK

    def to_json(self) -> str:
        """Deterministic JSON: sorted keys, two-space indent."""
        return json.dumps(self.model_dump(mode="json"), sort_keys=True, indent=2)
