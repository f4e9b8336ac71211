"""
Symbol file storage and persistence.

This module reads and writes symbol-definition files (JSON):

    { "order": [m1, m2], "depth": [N1, N2],
      "components": [ { "j": …, "k": …, "grid": [G1, G2], "values": [[re, im], …] } ],
      "multiplier": bool }

Values are listed in row-major order over (θ₁, ω₁, θ₂, ω₂); components not
listed are zero.
"""

import json
import logging
import os
from typing import List, Optional

import numpy as np
from pydantic import BaseModel, Field, ValidationError

from .builder import empty_table, from_table
from .domain import BiOrder, ClassicalBisingularSymbol

logger = logging.getLogger(__name__)


class ComponentRecord(BaseModel):
    """One stored component of a symbol."""
    j: int = Field(..., ge=0, description="First-factor index, degree m1 - j")
    k: int = Field(..., ge=0, description="Second-factor index, degree m2 - k")
    grid: List[int] = Field(..., min_length=2, max_length=2, description="Grid sizes [G1, G2]")
    values: List[List[float]] = Field(..., description="Row-major [re, im] pairs over (θ₁, ω₁, θ₂, ω₂)")


class SymbolFile(BaseModel):
    """Wire format of a classical bisingular symbol."""
    order: List[float] = Field(..., min_length=2, max_length=2, description="Bi-order [m1, m2]")
    depth: List[int] = Field(..., min_length=2, max_length=2, description="Truncation [N1, N2]")
    components: List[ComponentRecord] = Field(default_factory=list, description="Non-zero components")
    multiplier: bool = Field(default=False, description="True when the symbol is x-independent")


def to_record(symbol: ClassicalBisingularSymbol) -> SymbolFile:
    """Convert a symbol to its wire model, skipping zero components."""
    if not symbol.order.is_real:
        raise ValueError("Symbol files store real bi-orders only")
    components = []
    n1, n2 = symbol.depth
    for j in range(n1 + 1):
        for k in range(n2 + 1):
            values = symbol.table[j, k]
            if not np.any(values):
                continue
            flat = values.reshape(-1)
            components.append(ComponentRecord(
                j=j, k=k, grid=list(symbol.grid),
                values=[[float(v.real), float(v.imag)] for v in flat],
            ))
    return SymbolFile(order=[float(complex(symbol.order.m1).real), float(complex(symbol.order.m2).real)],
                      depth=[n1, n2], components=components, multiplier=symbol.multiplier)


def from_record(record: SymbolFile) -> ClassicalBisingularSymbol:
    """
    Build a symbol from its wire model.

    Raises:
        ValueError: If a component lies outside the depth, grids disagree,
            or the value count does not match the grid
    """
    depth = (record.depth[0], record.depth[1])
    grids = {tuple(c.grid) for c in record.components}
    if len(grids) > 1:
        raise ValueError(f"Components use different grids: {sorted(grids)}")
    grid = grids.pop() if grids else (16, 16)
    table = empty_table(depth, grid)
    expected = grid[0] * 2 * grid[1] * 2
    for component in record.components:
        if component.j > depth[0] or component.k > depth[1]:
            raise ValueError(f"Component ({component.j}, {component.k}) outside depth {depth}")
        if len(component.values) != expected:
            raise ValueError(f"Component ({component.j}, {component.k}) has {len(component.values)} "
                             f"values, expected {expected}")
        pairs = np.asarray(component.values, dtype=float)
        if pairs.ndim != 2 or pairs.shape[1] != 2:
            raise ValueError(f"Component ({component.j}, {component.k}) values must be [re, im] pairs")
        table[component.j, component.k] = (pairs[:, 0] + 1j * pairs[:, 1]).reshape(grid[0], 2, grid[1], 2)
    return from_table(BiOrder(record.order[0], record.order[1]), table, record.multiplier)


class SymbolStore:
    """
    Manages symbol files on the file system.

    Paths are resolved against an optional base directory.
    """

    def __init__(self, base_dir: Optional[str] = None):
        """
        Initialize the symbol store.

        Args:
            base_dir: Directory that relative paths are resolved against
        """
        self.base_dir = base_dir

    def _resolve(self, path: str) -> str:
        if self.base_dir and not os.path.isabs(path):
            return os.path.join(self.base_dir, path)
        return path

    def load(self, path: str) -> ClassicalBisingularSymbol:
        """
        Load a symbol file.

        Raises:
            FileNotFoundError: If the file does not exist
            ValueError: If the JSON is malformed or violates the schema
        """
        full_path = self._resolve(path)
        if not os.path.exists(full_path):
            raise FileNotFoundError(f"Symbol file not found: {full_path}")
        try:
            with open(full_path, 'r', encoding='utf-8') as f:
                data = json.load(f)
            record = SymbolFile.model_validate(data)
        except json.JSONDecodeError as e:
            raise ValueError(f"Malformed symbol file {full_path}: {e}") from e
        except ValidationError as e:
            raise ValueError(f"Invalid symbol file {full_path}: {e}") from e
        symbol = from_record(record)
        logger.debug(f"Loaded symbol of order ({symbol.order.m1}, {symbol.order.m2}) from {full_path}")
        return symbol

    def save(self, symbol: ClassicalBisingularSymbol, path: str) -> str:
        """
        Save a symbol file, creating parent directories.

        Returns:
            Path of the written file
        """
        full_path = self._resolve(path)
        directory = os.path.dirname(full_path)
        if directory:
            os.makedirs(directory, exist_ok=True)
        with open(full_path, 'w', encoding='utf-8') as f:
            f.write(to_record(symbol).model_dump_json(indent=2))
        logger.info(f"Saved symbol to {full_path}")
        return full_path
