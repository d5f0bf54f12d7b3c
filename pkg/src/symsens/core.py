"""Compact truth tables of symmetric functions and their run-length compositions.

A symmetric function of n variables only sees the Hamming weight of its
input, so it is fully described by ``values = (v_0, ..., v_n)``. Reading the
maximal runs of equal values from left to right gives a composition of n+1,
e.g. ``1110`` -> ``3+1``. Each composition arises from exactly two tables
(one per starting value).

Everything here works on the compact form in O(n) and never builds the
2^n-entry table, except ``expand``/``compress`` which bridge to ``brute``.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import groupby

import numpy as np

from symsens.brute import TruthTable, check_cap
from symsens.errors import FormatError


@dataclass(frozen=True)
class CompactTruthTable:
    """Output value for each input weight 0..n."""

    values: tuple[int, ...]

    def __post_init__(self):
        values = tuple(int(v) for v in self.values)
        if len(values) < 2:
            raise ValueError("a compact truth table needs at least 2 entries (n >= 1)")
        if any(v not in (0, 1) for v in values):
            raise ValueError("compact truth table entries must be 0 or 1")
        object.__setattr__(self, "values", values)

    @property
    def n(self) -> int:
        return len(self.values) - 1

    @classmethod
    def parse(cls, text: str) -> CompactTruthTable:
        """Parse a bit string such as ``"1110"`` (leftmost character is v_0)."""
        bits = "".join(text.split())
        if len(bits) < 2 or set(bits) - {"0", "1"}:
            raise FormatError(f"expected a bit string of length >= 2, got {text!r}")
        return cls(tuple(int(ch) for ch in bits))

    @classmethod
    def from_code(cls, n: int, code: int) -> CompactTruthTable:
        """Decode an enumeration index: bit k of ``code`` is v_k."""
        if not 0 <= code < 1 << (n + 1):
            raise ValueError(f"code {code} out of range for n={n}")
        return cls(tuple((code >> k) & 1 for k in range(n + 1)))

    @property
    def code(self) -> int:
        return sum(v << k for k, v in enumerate(self.values))

    def complement(self) -> CompactTruthTable:
        return CompactTruthTable(tuple(1 - v for v in self.values))

    def reversed(self) -> CompactTruthTable:
        return CompactTruthTable(self.values[::-1])

    def __str__(self) -> str:
        return "".join(map(str, self.values))


@dataclass(frozen=True)
class Composition:
    """Ordered positive parts; ``total`` is their sum."""

    parts: tuple[int, ...]

    def __post_init__(self):
        parts = tuple(int(p) for p in self.parts)
        if not parts:
            raise ValueError("a composition has at least one part")
        if any(p < 1 for p in parts):
            raise ValueError(f"composition parts must be positive, got {parts}")
        object.__setattr__(self, "parts", parts)

    @property
    def total(self) -> int:
        return sum(self.parts)

    @classmethod
    def parse(cls, text: str) -> Composition:
        try:
            return cls(tuple(int(p) for p in text.split("+")))
        except ValueError:
            raise FormatError(f"not a composition: {text!r}") from None

    def __str__(self) -> str:
        return "+".join(map(str, self.parts))


@dataclass(frozen=True)
class SensitivityProfile:
    n: int
    per_weight: tuple[int, ...]
    max: int


def expand(c: CompactTruthTable, cap: int | None = None) -> TruthTable:
    check_cap(c.n, cap)
    return TruthTable(c.n, np.asarray(c.values, dtype=np.uint8)[hamming_weights(c.n)], cap=cap)


def hamming_weights(n: int) -> np.ndarray:
    """Popcount of every index 0..2^n - 1."""
    weights = np.zeros(1, dtype=np.intp)
    for _ in range(n):
        weights = np.concatenate([weights, weights + 1])
    return weights


def symmetry_witness(t: TruthTable) -> tuple[int, int] | None:
    """Two equal-weight input indices with different outputs, or None if symmetric."""
    weights = hamming_weights(t.n)
    # index 2^k - 1 is the first input of weight k
    reference = t.bits[(1 << np.arange(t.n + 1)) - 1]
    mismatched = np.flatnonzero(t.bits != reference[weights])
    if mismatched.size == 0:
        return None
    i = int(mismatched[0])
    return (1 << int(weights[i])) - 1, i


def compress(t: TruthTable) -> CompactTruthTable | None:
    """Compact form of a symmetric table; None when the table is not symmetric."""
    if symmetry_witness(t) is not None:
        return None
    return CompactTruthTable(tuple(t[(1 << k) - 1] for k in range(t.n + 1)))


def to_composition(c: CompactTruthTable) -> Composition:
    return Composition(tuple(sum(1 for _ in run) for _, run in groupby(c.values)))


def from_composition(comp: Composition, first_value: int) -> CompactTruthTable:
    if first_value not in (0, 1):
        raise ValueError("first_value must be 0 or 1")
    values = []
    v = first_value
    for part in comp.parts:
        values.extend([v] * part)
        v = 1 - v
    return CompactTruthTable(tuple(values))


def sensitivity_profile(c: CompactTruthTable) -> SensitivityProfile:
    """Per-weight and overall sensitivity in O(n).

    An input of weight k has k ones, each of which moves it to weight k-1,
    and n-k zeros, each of which moves it to weight k+1. So

        s_k = k * [v_{k-1} != v_k] + (n - k) * [v_{k+1} != v_k]

    and the boundary terms vanish through their zero multipliers.
    """
    v = c.values
    n = c.n
    per_weight = tuple(
        (k * (v[k - 1] != v[k]) if k > 0 else 0)
        + ((n - k) * (v[k + 1] != v[k]) if k < n else 0)
        for k in range(n + 1)
    )
    return SensitivityProfile(n=n, per_weight=per_weight, max=max(per_weight))


def has_max_sensitivity(c: CompactTruthTable) -> bool:
    """True iff some run in the compact table has length 1 (equivalently s(f) = n)."""
    return min(to_composition(c).parts) == 1


def is_trivial(c: CompactTruthTable) -> bool:
    return len(set(c.values)) == 1
