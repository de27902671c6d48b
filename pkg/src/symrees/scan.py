"""Batch classification over ranges of triples.

Workers share nothing mutable; results are merged back in input order, so
the output stream is byte-identical for a given job regardless of the
parallelism degree.  Every record produced under validated hypotheses is
checked against the proved cross-criteria implications; a violation aborts
the scan with a diagnostic, since it would falsify the implementation.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from multiprocessing import Pool
from typing import Iterable, Iterator

from .presentation import CurveTriple
from .records import VerdictRecord, from_verdict
from .witness import InternalConsistencyError, classify


@dataclass(frozen=True)
class ScanJob:
    """Triple ranges plus filters for one batch run."""

    a_range: tuple[int, int]
    b_range: tuple[int, int]
    c_range: tuple[int, int]
    u_max: int | None = None
    require_assumptions: bool = False
    jobs: int = 1

    @classmethod
    def upto(cls, bound: int, **kwargs) -> "ScanJob":
        if bound < 3:
            raise ValueError("bound must be >= 3")
        r = (1, bound)
        return cls(a_range=r, b_range=r, c_range=r, **kwargs)

    def __post_init__(self) -> None:
        for lo, hi in (self.a_range, self.b_range, self.c_range):
            if lo < 1 or hi < lo:
                raise ValueError("ranges must be nonempty and positive")
        if self.jobs < 1:
            raise ValueError("jobs must be >= 1")


def iter_triples(job: ScanJob) -> Iterator[tuple[int, int, int]]:
    """Pairwise coprime triples of the job, in lexicographic order."""
    for a in range(job.a_range[0], job.a_range[1] + 1):
        for b in range(job.b_range[0], job.b_range[1] + 1):
            if math.gcd(a, b) != 1:
                continue
            for c in range(job.c_range[0], job.c_range[1] + 1):
                if math.gcd(a, c) == 1 and math.gcd(b, c) == 1:
                    yield (a, b, c)


def _check_record_invariants(record: VerdictRecord) -> None:
    if not record.assumptions["all_hold"]:
        return
    eu = record.eu["holds"]
    gk = record.gk["holds"]
    we = record.witness_exists
    triple = record.triple
    if eu and not we:
        raise InternalConsistencyError(f"{triple}: EU holds but witness missing")
    if gk and we:
        raise InternalConsistencyError(f"{triple}: GK holds but witness exists")
    if record.presentation["u"] <= 6:
        if eu == gk:
            raise InternalConsistencyError(
                f"{triple}: u <= 6 but EU={eu} and GK={gk} are not exclusive"
            )
        if record.noetherian != eu:
            raise InternalConsistencyError(
                f"{triple}: u <= 6 verdict {record.noetherian} does not match EU={eu}"
            )


def classify_one(args: tuple[int, int, int]) -> VerdictRecord:
    record = from_verdict(classify(CurveTriple(*args)))
    _check_record_invariants(record)
    return record


def _keep(record: VerdictRecord, job: ScanJob) -> bool:
    if job.require_assumptions and not record.assumptions["all_hold"]:
        return False
    if job.u_max is not None:
        if record.presentation is None or record.presentation["u"] > job.u_max:
            return False
    return True


def run_scan(job: ScanJob) -> Iterator[VerdictRecord]:
    """Classify every triple of the job; yields records in input order."""
    triples = iter_triples(job)
    if job.jobs == 1:
        results: Iterable[VerdictRecord] = map(classify_one, triples)
        for record in results:
            if _keep(record, job):
                yield record
        return
    with Pool(processes=job.jobs) as pool:
        for record in pool.imap(classify_one, triples, chunksize=64):
            if _keep(record, job):
                yield record
