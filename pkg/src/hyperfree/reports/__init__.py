"""
Reports - JSON command reports and their table rendering
"""

from hyperfree.reports.models import Report, Stopwatch, Timing, input_digest
from hyperfree.reports.render import render_text

__all__ = ["Report", "Stopwatch", "Timing", "input_digest", "render_text"]
