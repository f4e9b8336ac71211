"""
Pole report persistence.

Reports are written as JSON

    { "chart": "A^z" | "A^-z",
      "entries": [ { "z": [re, im], "order": n, "c2": [re, im], "c1": [re, im] } ] }

or as CSV with header z_re,z_im,order,c2_re,c2_im,c1_re,c1_im.
"""

import csv
import json
import logging
import os

from pydantic import ValidationError

from .domain import PoleEntry, PoleEntryRecord, PoleReport, PoleReportRecord

logger = logging.getLogger(__name__)

CSV_HEADER = ["z_re", "z_im", "order", "c2_re", "c2_im", "c1_re", "c1_im"]


def _pair(value: complex):
    return [float(value.real), float(value.imag)]


def to_record(report: PoleReport) -> PoleReportRecord:
    return PoleReportRecord(chart=report.chart, entries=[
        PoleEntryRecord(z=_pair(entry.location), order=entry.order,
                        c2=_pair(entry.c_minus2), c1=_pair(entry.c_minus1))
        for entry in report.entries
    ])


def from_record(record: PoleReportRecord) -> PoleReport:
    entries = [PoleEntry(location=complex(*e.z), order=e.order, c_minus2=complex(*e.c2), c_minus1=complex(*e.c1))
               for e in record.entries]
    return PoleReport(chart=record.chart, entries=entries)


class PoleStore:
    """Reads and writes pole reports."""

    def _prepare(self, path: str) -> None:
        directory = os.path.dirname(path)
        if directory:
            os.makedirs(directory, exist_ok=True)

    def save_json(self, report: PoleReport, path: str) -> None:
        self._prepare(path)
        with open(path, 'w', encoding='utf-8') as f:
            f.write(to_record(report).model_dump_json(indent=2))
        logger.info(f"Saved pole report with {len(report.entries)} entries to {path}")

    def load_json(self, path: str) -> PoleReport:
        """
        Raises:
            FileNotFoundError: If the file does not exist
            ValueError: If the JSON is malformed or violates the schema
        """
        if not os.path.exists(path):
            raise FileNotFoundError(f"Pole report not found: {path}")
        try:
            with open(path, 'r', encoding='utf-8') as f:
                record = PoleReportRecord.model_validate(json.load(f))
        except json.JSONDecodeError as e:
            raise ValueError(f"Malformed pole report {path}: {e}") from e
        except ValidationError as e:
            raise ValueError(f"Invalid pole report {path}: {e}") from e
        return from_record(record)

    def save_csv(self, report: PoleReport, path: str) -> None:
        self._prepare(path)
        with open(path, 'w', encoding='utf-8', newline='') as f:
            writer = csv.writer(f)
            writer.writerow(CSV_HEADER)
            for entry in report.entries:
                writer.writerow(_pair(entry.location) + [entry.order]
                                + _pair(entry.c_minus2) + _pair(entry.c_minus1))
        logger.info(f"Saved pole report CSV to {path}")
