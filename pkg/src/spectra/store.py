"""
Model descriptor and spectrum dump persistence.

Descriptors are JSON files { "kind": "...", "params": {...} }; spectrum
dumps are CSV files with header value,multiplicity,sign.
"""

import csv
import json
import logging
import os
from typing import Iterable, List

from pydantic import ValidationError

from .domain import ModelDescriptor, SpectralDatum, SpectralOperator
from .models import make_model

logger = logging.getLogger(__name__)

CSV_HEADER = ["value", "multiplicity", "sign"]


class ModelStore:
    """Reads and writes model descriptors and spectrum dumps."""

    def load_descriptor(self, path: str) -> SpectralOperator:
        """
        Load a model descriptor and build the operator.

        Raises:
            FileNotFoundError: If the file does not exist
            ValueError: If the JSON is malformed or the model invalid
        """
        if not os.path.exists(path):
            raise FileNotFoundError(f"Model descriptor not found: {path}")
        try:
            with open(path, 'r', encoding='utf-8') as f:
                descriptor = ModelDescriptor.model_validate(json.load(f))
        except json.JSONDecodeError as e:
            raise ValueError(f"Malformed model descriptor {path}: {e}") from e
        except ValidationError as e:
            raise ValueError(f"Invalid model descriptor {path}: {e}") from e
        return make_model(descriptor.kind, descriptor.params)

    def save_descriptor(self, operator: SpectralOperator, path: str) -> None:
        directory = os.path.dirname(path)
        if directory:
            os.makedirs(directory, exist_ok=True)
        with open(path, 'w', encoding='utf-8') as f:
            f.write(operator.descriptor().model_dump_json(indent=2))
        logger.info(f"Saved model descriptor to {path}")

    def write_spectrum(self, data: Iterable[SpectralDatum], path: str) -> int:
        """
        Write spectral data as CSV.

        Returns:
            Number of rows written
        """
        directory = os.path.dirname(path)
        if directory:
            os.makedirs(directory, exist_ok=True)
        rows = 0
        with open(path, 'w', encoding='utf-8', newline='') as f:
            writer = csv.writer(f)
            writer.writerow(CSV_HEADER)
            for datum in data:
                writer.writerow([repr(datum.value), datum.multiplicity, datum.sign])
                rows += 1
        logger.info(f"Wrote {rows} spectral data to {path}")
        return rows

    def read_spectrum(self, path: str) -> List[SpectralDatum]:
        if not os.path.exists(path):
            raise FileNotFoundError(f"Spectrum file not found: {path}")
        with open(path, 'r', encoding='utf-8', newline='') as f:
            reader = csv.DictReader(f)
            if reader.fieldnames != CSV_HEADER:
                raise ValueError(f"Spectrum file {path} must have header {','.join(CSV_HEADER)}")
            return [SpectralDatum(value=float(row["value"]), multiplicity=int(row["multiplicity"]),
                                  sign=int(row["sign"])) for row in reader]
