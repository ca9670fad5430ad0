"""
Batch jobs - run one operation over many arrangement files, in parallel, in input order
"""

from concurrent.futures import ThreadPoolExecutor, as_completed
from dataclasses import dataclass
from glob import glob
from pathlib import Path
from typing import Any, Callable, Dict, List, Optional, Sequence

import yaml
from loguru import logger

from hyperfree.arrangements.charpoly import betti, chamber_counts, charpoly
from hyperfree.derivations.module import exponents_rank2
from hyperfree.errors import DomainError, HyperfreeError
from hyperfree.files.arrangement_file import ArrangementFile, load_arrangement
from hyperfree.freeness.criteria import free_test


def _exponents2(parsed: ArrangementFile) -> Dict[str, Any]:
    d1, d2 = exponents_rank2(parsed.arrangement, parsed.multiplicity)
    return {"exponents": [d1, d2], "delta": d2 - d1}


def _charpoly(parsed: ArrangementFile) -> Dict[str, Any]:
    return {"charpoly": charpoly(parsed.arrangement).format()}


def _betti(parsed: ArrangementFile) -> Dict[str, Any]:
    return {"betti": betti(parsed.arrangement)}


def _chambers(parsed: ArrangementFile) -> Dict[str, Any]:
    chambers, bounded = chamber_counts(parsed.arrangement)
    return {"chambers": chambers, "bounded": bounded}


def _freetest(parsed: ArrangementFile) -> Dict[str, Any]:
    if not parsed.is_simple:
        raise DomainError("freetest takes a simple arrangement; use exponents2 for multiplicities")
    certificate = free_test(parsed.arrangement)
    return certificate.to_dict(parsed.arrangement.variable_names)


OPERATIONS: Dict[str, Callable[[ArrangementFile], Dict[str, Any]]] = {
    "exponents2": _exponents2,
    "charpoly": _charpoly,
    "betti": _betti,
    "chambers": _chambers,
    "freetest": _freetest,
}


@dataclass(frozen=True)
class Job:
    """One (file, operation) pair"""

    file: str
    op: str

    def validate(self) -> bool:
        if self.op not in OPERATIONS:
            raise DomainError(
                f"Unknown sweep operation '{self.op}'. Available: {', '.join(sorted(OPERATIONS))}"
            )
        return True


def jobs_from_glob(pattern: str, op: str) -> List[Job]:
    """Sorted files matching the glob, all with the same operation"""
    files = sorted(glob(pattern))
    if not files:
        raise FileNotFoundError(f"No arrangement files match '{pattern}'")
    jobs = [Job(f, op) for f in files]
    for job in jobs:
        job.validate()
    return jobs


def load_manifest(path: str) -> List[Job]:
    """
    Read a YAML manifest

        jobs:
          - file: tests/fixtures/fig1.arr
            op: freetest

    Relative file paths are resolved against the manifest's directory.

    Raises:
        FileNotFoundError: If the manifest does not exist
        DomainError: On malformed entries
    """
    manifest_path = Path(path)
    if not manifest_path.exists():
        raise FileNotFoundError(f"Manifest not found: {path}")
    with open(manifest_path) as f:
        data = yaml.safe_load(f) or {}

    entries = data.get("jobs")
    if not isinstance(entries, list) or not entries:
        raise DomainError("Manifest must define a nonempty 'jobs' list")
    jobs = []
    for i, entry in enumerate(entries):
        if not isinstance(entry, dict) or "file" not in entry or "op" not in entry:
            raise DomainError(f"Manifest job {i} needs 'file' and 'op'")
        file_path = Path(entry["file"])
        if not file_path.is_absolute():
            file_path = manifest_path.parent / file_path
        job = Job(str(file_path), str(entry["op"]))
        job.validate()
        jobs.append(job)
    logger.info(f"Loaded {len(jobs)} jobs from {path}")
    return jobs


def _run_job(job: Job) -> Dict[str, Any]:
    record: Dict[str, Any] = {"file": job.file, "op": job.op}
    try:
        parsed = load_arrangement(job.file)
        record["result"] = OPERATIONS[job.op](parsed)
    except (HyperfreeError, FileNotFoundError) as e:
        record["error"] = str(e)
    return record


def run_jobs(jobs: Sequence[Job], workers: int = 1) -> List[Dict[str, Any]]:
    """
    Run jobs through a thread pool

    Per-job errors are recorded in the job's entry; output order is input order.
    """
    results: List[Optional[Dict[str, Any]]] = [None] * len(jobs)
    with ThreadPoolExecutor(max_workers=max(1, workers)) as executor:
        futures = {executor.submit(_run_job, job): i for i, job in enumerate(jobs)}
        for future in as_completed(futures):
            index = futures[future]
            try:
                results[index] = future.result()
            except Exception as e:
                logger.error(f"Job {jobs[index].file} failed: {e}")
                results[index] = {"file": jobs[index].file, "op": jobs[index].op, "error": str(e)}

    errors = sum(1 for r in results if r and "error" in r)
    logger.info(f"Ran {len(jobs)} jobs with {workers} workers, {errors} errors")
    return [r for r in results if r is not None]
