"""
Report and value-table persistence.

Verification reports are written as JSON (the VerificationReport wire
format, checks in declaration order) or as CSV with header
check,lhs_re,lhs_im,rhs_re,rhs_im,tolerance,pass. Value tables are CSV with
header re_z,im_z[,re_tau,im_tau],re_value,im_value,status,re_c2,im_c2,re_c1,im_c1;
pole rows have status "pole", empty value cells and their Laurent data.
"""

import csv
import logging
import os
from dataclasses import dataclass
from typing import List, Optional

from meromorphic.domain import LaurentExpansion
from wodzicki.domain import VerificationReport

logger = logging.getLogger(__name__)

REPORT_CSV_HEADER = ["check", "lhs_re", "lhs_im", "rhs_re", "rhs_im", "tolerance", "pass"]
VALUE_COLUMNS = ["re_value", "im_value", "status", "re_c2", "im_c2", "re_c1", "im_c1"]


@dataclass
class TableRow:
    """One sampled point; `value` is None at a pole."""

    z: complex
    value: Optional[complex]
    tau: Optional[complex] = None
    laurent: Optional[LaurentExpansion] = None


def table_header(double: bool) -> List[str]:
    return ["re_z", "im_z"] + (["re_tau", "im_tau"] if double else []) + VALUE_COLUMNS


class ReportStore:
    """Writes verification reports and value tables."""

    def _prepare(self, path: str) -> None:
        directory = os.path.dirname(path)
        if directory:
            os.makedirs(directory, exist_ok=True)

    def save_report(self, report: VerificationReport, path: str, fmt: str = "json") -> None:
        self._prepare(path)
        if fmt == "csv":
            with open(path, 'w', encoding='utf-8', newline='') as f:
                writer = csv.writer(f)
                writer.writerow(REPORT_CSV_HEADER)
                for check in report.checks:
                    writer.writerow([check.check] + check.lhs + check.rhs + [check.tolerance, check.passed])
        else:
            with open(path, 'w', encoding='utf-8') as f:
                f.write(report.model_dump_json(by_alias=True, indent=2))
        logger.info(f"Saved report of suite {report.suite} with {len(report.checks)} checks to {path}")

    def save_table(self, rows: List[TableRow], path: str, double: bool = False) -> None:
        self._prepare(path)
        with open(path, 'w', encoding='utf-8', newline='') as f:
            writer = csv.writer(f)
            writer.writerow(table_header(double))
            for row in rows:
                cells = [row.z.real, row.z.imag]
                if double:
                    tau = row.tau if row.tau is not None else row.z
                    cells += [tau.real, tau.imag]
                if row.value is not None:
                    cells += [row.value.real, row.value.imag, "value", "", "", "", ""]
                elif row.laurent is not None:
                    c2, c1 = row.laurent.coefficient(-2), row.laurent.coefficient(-1)
                    cells += ["", "", "pole", c2.real, c2.imag, c1.real, c1.imag]
                else:
                    cells += ["", "", "pole", "", "", "", ""]
                writer.writerow(cells)
        logger.info(f"Saved value table with {len(rows)} rows to {path}")
