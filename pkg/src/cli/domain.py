"""
Domain models for the command-line front end.

This module defines the command and output-format vocabularies, the points
sampled by value tables, and the run configuration gathered from flags and
environment defaults.
"""

import os
from dataclasses import dataclass
from enum import Enum
from typing import List, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from meromorphic.domain import Chart


class CommandKind(str, Enum):
    """Subcommands of the verification front end."""
    POLES = "poles"
    VERIFY = "verify"
    TABLE = "table"


class OutputFormat(str, Enum):
    """File formats for pole tables and verification reports."""
    JSON = "json"
    CSV = "csv"


class TableFunction(str, Enum):
    """Functions the table command can sample."""
    ZETA = "zeta"
    ETA = "eta"
    ZETA_UP = "zeta_up"
    ZETA_DOWN = "zeta_down"
    DOUBLE_ZETA = "double-zeta"


class ExitCode(int, Enum):
    OK = 0
    CHECK_FAILED = 1
    USAGE_ERROR = 2


@dataclass(frozen=True)
class TablePoint:
    """A sample point; `tau` is only used by the double ζ."""

    z: complex
    tau: Optional[complex] = None

    @classmethod
    def parse(cls, text: str) -> 'TablePoint':
        """
        Parse "z" or "z:tau", each a Python complex literal such as -2 or 0.5+1j.

        Raises:
            ValueError: If a part is not a complex literal
        """
        parts = [part.strip() for part in text.split(":")]
        if len(parts) > 2 or not all(parts):
            raise ValueError(f"Malformed sample point '{text}'")
        try:
            values = [complex(part.replace(" ", "")) for part in parts]
        except ValueError as e:
            raise ValueError(f"Malformed sample point '{text}': {e}") from e
        return cls(z=values[0], tau=values[1] if len(values) == 2 else None)


class RunConfig(BaseModel):
    """Everything one invocation of the front end needs."""
    model_config = ConfigDict(arbitrary_types_allowed=True)

    command: CommandKind = Field(..., description="Subcommand")
    model: Optional[str] = Field(default=None, description="Path of a model descriptor JSON file")
    suite: Optional[str] = Field(default=None, description="Verification suite name")
    function: TableFunction = Field(default=TableFunction.ZETA, description="Function sampled by tables and pole searches")
    points: List[TablePoint] = Field(default_factory=list, description="Sample points of the table command")
    tolerance: Optional[float] = Field(default=None, gt=0, description="Overrides every declared check tolerance")
    seed: int = Field(default=42, description="Seed of the random property suites")
    grid: int = Field(default=16, description="θ grid size per factor")
    nodes: int = Field(default=64, description="Trapezoidal nodes of contour quadratures")
    out: Optional[str] = Field(default=None, description="Output file; optional for verify")
    format: OutputFormat = Field(default=OutputFormat.JSON, description="Output format")
    window: Tuple[float, float, float, float] = Field(default=(-3.0, 3.0, -1.0, 1.0),
                                                     description="Pole search window (re_min, re_max, im_min, im_max)")
    chart: Chart = Field(default=Chart.A_Z, description="Variable convention of ζ")
    threads: int = Field(default=1, ge=1, description="Workers running the checks of a suite")
    composition_depth: Optional[int] = Field(default=None, ge=0,
                                             description="Truncates the left products of the trace suite")

    @field_validator("grid")
    @classmethod
    def validate_grid(cls, v: int) -> int:
        if v < 16 or v & (v - 1):
            raise ValueError(f"Grid size must be a power of two ≥ 16, got {v}")
        return v

    @field_validator("nodes")
    @classmethod
    def validate_nodes(cls, v: int) -> int:
        if v < 64:
            raise ValueError(f"Contour nodes must be at least 64, got {v}")
        return v

    @field_validator("window")
    @classmethod
    def validate_window(cls, v: Tuple[float, float, float, float]) -> Tuple[float, float, float, float]:
        re_min, re_max, im_min, im_max = v
        if re_min > re_max or im_min > im_max:
            raise ValueError(f"Inverted pole window {v}")
        return v

    @field_validator("model")
    @classmethod
    def validate_model(cls, v: Optional[str]) -> Optional[str]:
        if v is not None and not os.path.isfile(v):
            raise FileNotFoundError(f"Model descriptor not found: {v}")
        return v

    @model_validator(mode="after")
    def validate_command(self) -> 'RunConfig':
        if self.command in (CommandKind.POLES, CommandKind.TABLE) and self.model is None:
            raise ValueError(f"The {self.command.value} command needs a model file")
        if self.command in (CommandKind.POLES, CommandKind.TABLE) and self.out is None:
            raise ValueError(f"The {self.command.value} command needs an output path")
        if self.command == CommandKind.VERIFY and not self.suite:
            raise ValueError("The verify command needs a suite name")
        if self.function == TableFunction.DOUBLE_ZETA and self.command == CommandKind.POLES:
            raise ValueError("Pole tables are not available for the double ζ")
        return self
