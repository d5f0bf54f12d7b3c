"""Brute-force sensitivity of arbitrary Boolean functions on full truth tables.

Bit ordering: an input vector x = (x_1, ..., x_n) is stored at index
``sum(x_i << (i - 1))``, so x_1 is the least significant bit of the index.
Flipping variable x_i is therefore ``index ^ (1 << (i - 1))``.

Cost model: a table of n variables holds 2^n bytes, and ``sensitivity``
does n vectorised passes over it (O(n * 2^n) work, about 2 * 2^n bytes of
scratch). At the default cap of n = 20 this is 1 MiB and well under a second.

Text format (``parse_truth_table`` / ``format_truth_table``)::

    # optional comment lines
    n=3
    00010111

The body is either a binary string of 2^n characters where character i is
f(index i), or a ``0x``-prefixed hex integer whose bit i is f(index i).
Whitespace and underscores inside the body are ignored.
"""

from __future__ import annotations

import numpy as np

from symsens.errors import FormatError, SizeError

FULL_TABLE_CAP = 20


def check_cap(n: int, cap: int | None = None) -> None:
    cap = FULL_TABLE_CAP if cap is None else cap
    if n > cap:
        raise SizeError(
            f"n={n} exceeds the full truth-table cap of {cap} "
            f"(a table needs 2^{n} = {1 << n} entries and about {n << n} flip checks)"
        )


class TruthTable:
    """Immutable truth table of a Boolean function of ``n`` variables."""

    __slots__ = ("n", "bits")

    def __init__(self, n: int, bits, cap: int | None = None):
        if n < 1:
            raise ValueError(f"n must be at least 1, got {n}")
        check_cap(n, cap)
        arr = np.array(bits, dtype=np.uint8).ravel()
        if arr.size != 1 << n:
            raise FormatError(f"expected {1 << n} bits for n={n}, got {arr.size}")
        if np.any(arr > 1):
            raise FormatError("truth table entries must be 0 or 1")
        arr.flags.writeable = False
        self.n = n
        self.bits = arr

    @classmethod
    def from_bits(cls, bits, cap: int | None = None) -> TruthTable:
        """Build a table, inferring n from the length (which must be a power of two)."""
        size = len(bits)
        if size < 2 or size & (size - 1):
            raise FormatError(f"truth table length must be a power of two >= 2, got {size}")
        return cls(size.bit_length() - 1, bits, cap=cap)

    @classmethod
    def from_function(cls, n: int, func, cap: int | None = None) -> TruthTable:
        """Tabulate ``func(x)`` where x is the tuple (x_1, ..., x_n)."""
        check_cap(n, cap)
        bits = [
            int(bool(func(tuple((i >> j) & 1 for j in range(n))))) for i in range(1 << n)
        ]
        return cls(n, bits, cap=cap)

    def __len__(self) -> int:
        return self.bits.size

    def __getitem__(self, index: int) -> int:
        return int(self.bits[index])

    def __eq__(self, other) -> bool:
        if not isinstance(other, TruthTable):
            return NotImplemented
        return self.n == other.n and np.array_equal(self.bits, other.bits)

    def __hash__(self) -> int:
        return hash((self.n, self.bits.tobytes()))

    def __repr__(self) -> str:
        body = "".join(map(str, self.bits.tolist())) if self.n <= 6 else f"<{len(self)} bits>"
        return f"TruthTable(n={self.n}, bits={body})"

    def complement(self) -> TruthTable:
        return TruthTable(self.n, 1 - self.bits, cap=self.n)

    def is_constant(self) -> bool:
        return bool(np.all(self.bits == self.bits[0]))


def sensitivity_at(t: TruthTable, x: int) -> int:
    """Number of single-bit flips of input ``x`` that change the output."""
    if not 0 <= x < len(t):
        raise IndexError(f"input index {x} out of range for n={t.n}")
    fx = t.bits[x]
    return sum(1 for i in range(t.n) if t.bits[x ^ (1 << i)] != fx)


def sensitivity_vector(t: TruthTable) -> np.ndarray:
    """``sensitivity_at`` for every input at once, as an array of length 2^n."""
    counts = np.zeros(len(t), dtype=np.uint8)
    for i in range(t.n):
        # pairs (x, x ^ 2^i) sit at [:, 0, :] and [:, 1, :] in this view
        view = t.bits.reshape(-1, 2, 1 << i)
        diff = view[:, 0, :] != view[:, 1, :]
        acc = counts.reshape(-1, 2, 1 << i)
        acc[:, 0, :] += diff
        acc[:, 1, :] += diff
    return counts


def sensitivity(t: TruthTable) -> int:
    """Maximum of ``sensitivity_at`` over all 2^n inputs."""
    return int(sensitivity_vector(t).max())


def parse_truth_table(text: str, cap: int | None = None) -> TruthTable:
    n = None
    body = []
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if n is None:
            key, sep, value = line.partition("=")
            if not sep or key.strip().lower() != "n":
                raise FormatError(f"expected an 'n=<int>' header, got {line!r}")
            try:
                n = int(value)
            except ValueError:
                raise FormatError(f"bad variable count in header {line!r}") from None
            continue
        body.append(line)
    if n is None:
        raise FormatError("missing 'n=<int>' header")
    if n < 1:
        raise FormatError(f"n must be at least 1, got {n}")
    check_cap(n, cap)
    payload = "".join("".join(body).split()).replace("_", "")
    size = 1 << n
    if payload.lower().startswith("0x"):
        try:
            value = int(payload[2:], 16)
        except ValueError:
            raise FormatError("malformed hex body") from None
        if value >> size:
            raise FormatError(f"hex body has bits beyond index {size - 1}")
        bits = [(value >> i) & 1 for i in range(size)]
    else:
        if set(payload) - {"0", "1"}:
            raise FormatError("binary body may only contain 0 and 1")
        if len(payload) != size:
            raise FormatError(f"expected {size} bits for n={n}, got {len(payload)}")
        bits = [int(ch) for ch in payload]
    return TruthTable(n, bits, cap=cap)


def format_truth_table(t: TruthTable, encoding: str = "bin") -> str:
    if encoding == "bin":
        body = "".join(map(str, t.bits.tolist()))
    elif encoding == "hex":
        value = sum(1 << i for i in np.flatnonzero(t.bits).tolist())
        body = f"0x{value:0{max(1, len(t) // 4)}x}"
    else:
        raise ValueError(f"unknown encoding {encoding!r}")
    return f"n={t.n}\n{body}\n"


def read_truth_table(path, cap: int | None = None) -> TruthTable:
    with open(path, encoding="utf-8") as fh:
        return parse_truth_table(fh.read(), cap=cap)
