"""
Pydantic models for the JSON documents read and written by the CLI and HTTP API.

Rationals always travel as strings "p/q" or "p".
"""
from typing import Any, Dict, List, Optional

from pydantic import BaseModel, Field, field_validator

from satpos.exact import to_rational


def _check_rational(value: Any) -> str:
    if isinstance(value, int) and not isinstance(value, bool):
        return str(value)
    to_rational(value)
    return str(value).strip()


class RowDocument(BaseModel):
    """One row a · x (rel) b of a polytope."""
    a: List[str] = Field(..., description="Coefficients as rational strings")
    rel: str = Field(..., description="One of le, lt, eq")
    b: str = Field(..., description="Right-hand side as a rational string")

    @field_validator("a", mode="before")
    @classmethod
    def _coefficients(cls, value: Any) -> List[str]:
        return [_check_rational(v) for v in value]

    @field_validator("b", mode="before")
    @classmethod
    def _rhs(cls, value: Any) -> str:
        return _check_rational(value)

    @field_validator("rel")
    @classmethod
    def _relation(cls, value: str) -> str:
        value = value.lower()
        if value not in ("le", "lt", "eq"):
            raise ValueError(f"Unknown relation {value!r}")
        return value


class PolytopeDocument(BaseModel):
    """H-representation of a rational polytope."""
    dim: int = Field(..., ge=0, description="Ambient dimension")
    rows: List[RowDocument] = Field(default_factory=list)


class QuasiPolynomialDocument(BaseModel):
    """Quasi-polynomial: constituent j (1-based) governs n = j mod period."""
    period: int = Field(..., ge=1)
    constituents: List[List[str]] = Field(..., description="Ascending coefficients per constituent")


class PositiveFormDocument(BaseModel):
    """h(t) / prod (1 - t^a)^mult."""
    h: List[int]
    den: List[List[int]] = Field(..., description="Pairs [a, mult]")


class RationalFunctionDocument(BaseModel):
    """Canonical rational function in t, ascending coefficients."""
    numerator: List[str]
    denominator: List[str]


class CommandResult(BaseModel):
    """Envelope printed by every CLI subcommand."""
    command: List[str] = Field(..., description="Subcommand path, e.g. ['kron', 'tworow']")
    inputs: Dict[str, Any] = Field(default_factory=dict)
    outputs: Dict[str, Any] = Field(default_factory=dict)
    wall_time_ms: float = 0.0


class ErrorDocument(BaseModel):
    """Body of a domain error on stdout or over HTTP."""
    error: str
    message: str
    details: Optional[Dict[str, Any]] = None
