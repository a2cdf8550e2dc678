"""
Ring specification models for the skew DGA tool.

A RingSpec is the validated content of a ring-spec file: ground field,
variables with internal degrees, the commutation scalars above the diagonal,
relation texts and optional truncation bounds.
"""

import re
from typing import List, Optional

from pydantic import BaseModel, Field, field_validator, model_validator

_NAME_PATTERN = re.compile(r"^[A-Za-z_][A-Za-z_0-9]*$")


class FieldSpec(BaseModel):
    """Ground field: the rationals (characteristic 0) or F_p."""

    characteristic: int = Field(0, ge=0, description="0 for QQ, otherwise an odd prime p")

    def to_text(self) -> str:
        return "field QQ" if self.characteristic == 0 else f"field GF {self.characteristic}"


class VariableSpec(BaseModel):
    """A ring variable with its internal degree."""

    name: str = Field(..., description="Variable name as used in relations")
    degree: int = Field(1, ge=1, description="Positive internal degree")

    @field_validator("name")
    @classmethod
    def validate_name(cls, v):
        """Validate that the name is an identifier."""
        if not _NAME_PATTERN.match(v):
            raise ValueError(f"invalid variable name '{v}'")
        return v


class QEntry(BaseModel):
    """The scalar q_ij with x_i x_j = q_ij x_j x_i, 1-based with i < j."""

    i: int = Field(..., ge=1, description="Row index")
    j: int = Field(..., ge=1, description="Column index")
    value: str = Field(..., description="Canonical scalar text 'a' or 'a/b'")

    @model_validator(mode="after")
    def validate_order(self):
        if self.i >= self.j:
            raise ValueError(f"q entries are given for i < j, got ({self.i}, {self.j})")
        return self


class RingSpec(BaseModel):
    """Validated ring specification."""

    field: FieldSpec = Field(default_factory=FieldSpec, description="Ground field")
    variables: List[VariableSpec] = Field(..., description="Variables in order")
    q_entries: List[QEntry] = Field(default_factory=list, description="Non-trivial q entries")
    relations: List[str] = Field(default_factory=list, description="Relation texts, canonical")
    hdeg: Optional[int] = Field(None, ge=0, description="Homological bound N from the spec")
    ideg: Optional[int] = Field(None, ge=0, description="Internal degree bound D from the spec")

    @field_validator("variables")
    @classmethod
    def validate_variables(cls, v):
        """Validate that variables exist and have distinct names."""
        if not v:
            raise ValueError("at least one variable is required")
        names = [variable.name for variable in v]
        duplicates = sorted({name for name in names if names.count(name) > 1})
        if duplicates:
            raise ValueError(f"duplicate variable names: {', '.join(duplicates)}")
        return v

    @model_validator(mode="after")
    def validate_q_entries(self):
        n = len(self.variables)
        seen = set()
        for entry in self.q_entries:
            if entry.j > n:
                raise ValueError(f"q entry ({entry.i}, {entry.j}) exceeds {n} variables")
            if (entry.i, entry.j) in seen:
                raise ValueError(f"q entry ({entry.i}, {entry.j}) given twice")
            seen.add((entry.i, entry.j))
        self.q_entries = sorted(self.q_entries, key=lambda e: (e.i, e.j))
        return self

    @property
    def n(self) -> int:
        return len(self.variables)

    @property
    def c(self) -> int:
        return len(self.relations)

    def to_text(self) -> str:
        """Print in the ring-spec grammar; parsing the output gives back this spec."""
        lines = [self.field.to_text()]
        lines.extend(f"var {v.name} deg {v.degree}" for v in self.variables)
        lines.extend(f"q {e.i} {e.j} {e.value}" for e in self.q_entries)
        lines.extend(f"rel {r}" for r in self.relations)
        if self.hdeg is not None or self.ideg is not None:
            parts = ["bounds"]
            if self.hdeg is not None:
                parts.append(f"hdeg {self.hdeg}")
            if self.ideg is not None:
                parts.append(f"ideg {self.ideg}")
            lines.append(" ".join(parts))
        return "\n".join(lines) + "\n"
