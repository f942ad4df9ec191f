"""Result artifacts: CSV tables, summary.json and plot command files."""

from .writer import SUMMARY_FILE, build_summary, version_stamp, write_results
from .plots import PLOT_TEMPLATES, discover_csv_files, emit_plots

__all__ = [
    "SUMMARY_FILE",
    "build_summary",
    "version_stamp",
    "write_results",
    "PLOT_TEMPLATES",
    "discover_csv_files",
    "emit_plots"
]
