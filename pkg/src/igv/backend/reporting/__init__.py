"""Reporting package.
- CSV reports with provenance header comments
- Static SVG charts rendered from those reports
- Excel workbook export
"""

from .csv_report import (
    output_header,
    read_csv_table,
    write_axiom_csv,
    write_census_csv,
    write_differences_csv,
    write_histogram_csv,
    write_rank_csv,
)
from .svg import PlotError, emit_plot
from .workbook import write_workbook

__all__ = [
    "PlotError",
    "emit_plot",
    "output_header",
    "read_csv_table",
    "write_axiom_csv",
    "write_census_csv",
    "write_differences_csv",
    "write_histogram_csv",
    "write_rank_csv",
    "write_workbook",
]
