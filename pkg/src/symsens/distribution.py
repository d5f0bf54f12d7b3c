"""Exhaustive census of sensitivities over all symmetric functions of n variables.

Compact tables are enumerated as integer codes 0 .. 2^(n+1) - 1 with bit k of
the code equal to v_k. The range is cut into contiguous chunks; each chunk is
scanned with numpy (one vectorised pass per weight k) and yields a partial
result, and partial results are merged by pointwise addition. The merge is
associative and commutative, so a threaded scan gives the same answer as a
sequential one.

Per chunk the scan computes two things independently of each other:

* the maximum sensitivity, from the per-weight formula
  ``s_k = k [v_{k-1} != v_k] + (n - k) [v_{k+1} != v_k]``;
* the shortest run length of the table (the smallest composition part),
  by walking the runs.

Comparing ``shortest run == 1`` with ``max sensitivity == n`` checks the
max-sensitivity criterion table by table.
"""

from __future__ import annotations

import csv
import io
import json
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from symsens.core import (
    CompactTruthTable,
    has_max_sensitivity,
    is_trivial,
    sensitivity_profile,
    to_composition,
)
from symsens.errors import FormatError, SizeError

ENUMERATION_CAP = 24
# codes must fit in int64
HARD_LIMIT = 62
TABLE_ROWS_CAP = 6
REFERENCE_CAP = 16
# up to here verify_theorem1 walks the core predicates table by table
DIRECT_CHECK_MAX = 12
CHUNK_BITS = 18


def check_enumeration_cap(n: int, cap: int | None = None) -> None:
    if n < 1:
        raise ValueError(f"n must be at least 1, got {n}")
    cap = ENUMERATION_CAP if cap is None else cap
    if n > min(cap, HARD_LIMIT):
        tables = 1 << (n + 1)
        raise SizeError(
            f"n={n} exceeds the enumeration cap of {min(cap, HARD_LIMIT)}: "
            f"2^{n + 1} = {tables:,} compact tables x {n + 1} weights "
            f"is about {tables * (n + 1):.2e} elementary steps"
        )


@dataclass
class SensitivityHistogram:
    n: int
    counts: dict[int, int]

    @property
    def total(self) -> int:
        return sum(self.counts.values())

    def __getitem__(self, s: int) -> int:
        return self.counts.get(s, 0)

    def nonzero(self) -> dict[int, int]:
        return {s: c for s, c in sorted(self.counts.items()) if c}

    def __eq__(self, other) -> bool:
        if not isinstance(other, SensitivityHistogram):
            return NotImplemented
        return self.n == other.n and self.nonzero() == other.nonzero()

    def to_csv(self, header: bool = True) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        if header:
            writer.writerow(["n", "s", "count"])
        for s, c in self.nonzero().items():
            writer.writerow([self.n, s, c])
        return buf.getvalue()

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "counts": {str(s): c for s, c in self.nonzero().items()},
            "total": self.total,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), separators=(",", ":"))

    @classmethod
    def from_csv(cls, text: str) -> SensitivityHistogram:
        rows = [r for r in csv.reader(io.StringIO(text)) if r]
        if rows and rows[0] == ["n", "s", "count"]:
            rows = rows[1:]
        if not rows:
            raise FormatError("empty histogram CSV")
        ns = {int(r[0]) for r in rows}
        if len(ns) != 1:
            raise FormatError(f"histogram CSV mixes several n values: {sorted(ns)}")
        return cls(n=ns.pop(), counts={int(r[1]): int(r[2]) for r in rows})

    @classmethod
    def from_json(cls, text: str) -> SensitivityHistogram:
        data = json.loads(text)
        hist = cls(n=int(data["n"]), counts={int(s): int(c) for s, c in data["counts"].items()})
        if "total" in data and int(data["total"]) != hist.total:
            raise FormatError("histogram JSON total does not match its counts")
        return hist


@dataclass
class ScanResult:
    """Merged outcome of scanning a range of compact-table codes."""

    n: int
    histogram: list[int]
    theorem1_counterexamples: int = 0
    first_counterexample: int | None = None
    min_nontrivial: int | None = None
    min_nontrivial_code: int | None = None
    scanned: int = 0

    def merge(self, other: ScanResult) -> ScanResult:
        hist = [a + b for a, b in zip(self.histogram, other.histogram)]
        firsts = [c for c in (self.first_counterexample, other.first_counterexample) if c is not None]
        cands = [
            (s, c)
            for s, c in (
                (self.min_nontrivial, self.min_nontrivial_code),
                (other.min_nontrivial, other.min_nontrivial_code),
            )
            if s is not None
        ]
        best = min(cands) if cands else (None, None)
        return ScanResult(
            n=self.n,
            histogram=hist,
            theorem1_counterexamples=self.theorem1_counterexamples + other.theorem1_counterexamples,
            first_counterexample=min(firsts) if firsts else None,
            min_nontrivial=best[0],
            min_nontrivial_code=best[1],
            scanned=self.scanned + other.scanned,
        )


def _scan_chunk(n: int, start: int, stop: int) -> ScanResult:
    codes = np.arange(start, stop, dtype=np.int64)
    values = [((codes >> k) & 1).astype(np.int8) for k in range(n + 1)]
    changes = [values[k] != values[k + 1] for k in range(n)]

    max_sens = np.zeros(codes.size, dtype=np.int16)
    for k in range(n + 1):
        s_k = np.zeros(codes.size, dtype=np.int16)
        if k > 0:
            s_k += k * changes[k - 1]
        if k < n:
            s_k += (n - k) * changes[k]
        np.maximum(max_sens, s_k, out=max_sens)

    run = np.ones(codes.size, dtype=np.int16)
    shortest = np.full(codes.size, n + 1, dtype=np.int16)
    for k in range(1, n + 1):
        ended = changes[k - 1]
        np.minimum(shortest, np.where(ended, run, shortest), out=shortest)
        run = np.where(ended, 1, run + 1).astype(np.int16)
    np.minimum(shortest, run, out=shortest)

    bad = np.flatnonzero((shortest == 1) != (max_sens == n))
    nontrivial = shortest < n + 1
    result = ScanResult(
        n=n,
        histogram=[int(c) for c in np.bincount(max_sens, minlength=n + 1)],
        theorem1_counterexamples=int(bad.size),
        first_counterexample=int(codes[bad[0]]) if bad.size else None,
        scanned=int(codes.size),
    )
    if nontrivial.any():
        masked = np.where(nontrivial, max_sens, n + 1)
        i = int(np.argmin(masked))
        result.min_nontrivial = int(masked[i])
        result.min_nontrivial_code = int(codes[i])
    return result


def _chunks(n: int, chunk_bits: int):
    size = 1 << (n + 1)
    step = 1 << chunk_bits
    return [(lo, min(lo + step, size)) for lo in range(0, size, step)]


def scan(
    n: int,
    workers: int | None = 1,
    cap: int | None = None,
    chunk_bits: int = CHUNK_BITS,
) -> ScanResult:
    """Scan every compact table of n variables.

    ``workers`` > 1 (or None for the CPU count) spreads chunks over threads;
    numpy releases the GIL inside the vector kernels.
    """
    check_enumeration_cap(n, cap)
    ranges = _chunks(n, chunk_bits)
    if workers == 1 or len(ranges) == 1:
        parts = [_scan_chunk(n, lo, hi) for lo, hi in ranges]
    else:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(lambda r: _scan_chunk(n, *r), ranges))
    total = ScanResult(n=n, histogram=[0] * (n + 1))
    for part in parts:
        total = total.merge(part)
    return total


def census(n: int, workers: int | None = 1, cap: int | None = None, chunk_bits: int = CHUNK_BITS) -> SensitivityHistogram:
    result = scan(n, workers=workers, cap=cap, chunk_bits=chunk_bits)
    return SensitivityHistogram(n=n, counts=dict(enumerate(result.histogram)))


def census_reference(n: int) -> SensitivityHistogram:
    """Slow census that calls ``sensitivity_profile`` on every table (n <= 16)."""
    if n > REFERENCE_CAP:
        raise SizeError(f"reference census is limited to n <= {REFERENCE_CAP}")
    counts = dict.fromkeys(range(n + 1), 0)
    for code in range(1 << (n + 1)):
        counts[sensitivity_profile(CompactTruthTable.from_code(n, code)).max] += 1
    return SensitivityHistogram(n=n, counts=counts)


@dataclass
class Theorem1Check:
    """Outcome of checking ``shortest run == 1  <=>  s(f) == n`` for every table."""

    n: int
    holds: bool
    max_sensitivity_count: int
    counterexamples: int
    first_counterexample: CompactTruthTable | None = None

    def __bool__(self) -> bool:
        return self.holds


def verify_theorem1(n: int, workers: int | None = 1, cap: int | None = None) -> Theorem1Check:
    if n <= DIRECT_CHECK_MAX:
        bad = []
        hits = 0
        for code in range(1 << (n + 1)):
            c = CompactTruthTable.from_code(n, code)
            at_max = sensitivity_profile(c).max == n
            hits += at_max
            if has_max_sensitivity(c) != at_max:
                bad.append(c)
        return Theorem1Check(n, not bad, hits, len(bad), bad[0] if bad else None)
    result = scan(n, workers=workers, cap=cap)
    first = result.first_counterexample
    return Theorem1Check(
        n=n,
        holds=result.theorem1_counterexamples == 0,
        max_sensitivity_count=result.histogram[n],
        counterexamples=result.theorem1_counterexamples,
        first_counterexample=None if first is None else CompactTruthTable.from_code(n, first),
    )


@dataclass
class TuranCheck:
    """Lower bound ceil((n+1)/2) on the sensitivity of non-constant functions."""

    n: int
    holds: bool
    bound: int
    min_nontrivial: int
    gap_empty: bool
    witness: CompactTruthTable

    def __bool__(self) -> bool:
        return self.holds


def turan_bound(n: int) -> int:
    return math.ceil((n + 1) / 2)


def verify_turan(n: int, workers: int | None = 1, cap: int | None = None) -> TuranCheck:
    """Check the bound on every non-trivial table; report a table attaining the minimum."""
    result = scan(n, workers=workers, cap=cap)
    bound = turan_bound(n)
    gap_empty = all(result.histogram[s] == 0 for s in range(1, bound))
    witness = CompactTruthTable.from_code(n, result.min_nontrivial_code)
    if is_trivial(witness) or sensitivity_profile(witness).max != result.min_nontrivial:
        raise RuntimeError(f"scan kernel disagrees with core on witness {witness}")
    return TuranCheck(
        n=n,
        holds=result.min_nontrivial >= bound and gap_empty,
        bound=bound,
        min_nontrivial=result.min_nontrivial,
        witness=witness,
        gap_empty=gap_empty,
    )


def table_rows(n: int):
    """Yield (compact table, composition, sensitivity) for every function of n variables.

    Rows run from the all-ones table down to all-zeros, reading the printed
    table (v_0 first) as a binary number, which is the layout used for the
    classic n = 3 listing.
    """
    if n > TABLE_ROWS_CAP:
        raise SizeError(
            f"listing n={n} would print 2^{n + 1} rows; the limit is n <= {TABLE_ROWS_CAP}, "
            "use the census instead"
        )
    width = n + 1
    for printed in range((1 << width) - 1, -1, -1):
        c = CompactTruthTable.parse(format(printed, f"0{width}b"))
        yield c, to_composition(c), sensitivity_profile(c).max
