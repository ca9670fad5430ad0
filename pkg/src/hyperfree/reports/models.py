"""
Data models for command reports.
"""

from __future__ import annotations

import hashlib
import json
import time
from dataclasses import dataclass, field
from typing import Any, Dict, Optional

import psutil

from hyperfree import __version__


def input_digest(text: str) -> str:
    """sha256 of the input text, prefixed with the algorithm name"""
    return "sha256:" + hashlib.sha256(text.encode("utf-8")).hexdigest()


@dataclass
class Timing:
    """Wall-clock seconds and resident memory of the current process"""

    wall_seconds: float = 0.0
    rss_bytes: int = 0

    def to_dict(self) -> Dict[str, Any]:
        return {"wall_seconds": round(self.wall_seconds, 6), "rss_bytes": self.rss_bytes}


class Stopwatch:
    """Context manager filling a Timing on exit"""

    def __init__(self):
        self.timing = Timing()
        self._start = 0.0

    def __enter__(self) -> "Stopwatch":
        self._start = time.perf_counter()
        return self

    def __exit__(self, exc_type, exc, tb) -> None:
        self.timing.wall_seconds = time.perf_counter() - self._start
        self.timing.rss_bytes = psutil.Process().memory_info().rss


@dataclass
class Report:
    """
    Result of one CLI command

    Attributes:
        command: Command name
        digest: Digest of the input file, None for generated inputs
        result: Command-specific payload
        certificate: Freeness certificate payload, when one was produced
        timing: Only filled when timing was requested
        version: Tool version
    """

    command: str
    result: Dict[str, Any] = field(default_factory=dict)
    digest: Optional[str] = None
    certificate: Optional[Dict[str, Any]] = None
    timing: Optional[Timing] = None
    version: str = __version__

    def to_dict(self) -> Dict[str, Any]:
        out: Dict[str, Any] = {
            "command": self.command,
            "input": self.digest,
            "result": self.result,
            "version": self.version,
        }
        if self.certificate is not None:
            out["certificate"] = self.certificate
        if self.timing is not None:
            out["timing"] = self.timing.to_dict()
        return out

    def to_json(self) -> str:
        """UTF-8 JSON with sorted keys; byte-stable for a fixed input without timing"""
        return json.dumps(self.to_dict(), sort_keys=True, indent=2, ensure_ascii=False)
