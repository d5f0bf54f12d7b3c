"""Exact counts of symmetric functions by composition class.

For n variables:

* ``total_count(n)``  T_n = 2^(n+1), all symmetric functions (series 4z/(1-2z)).
* ``no_ones_count(n)`` N_n, functions whose composition has no part equal to 1.
  N_1 = N_2 = 2 and N_n = N_{n-1} + N_{n-2}, i.e. N_n = 2 F(n) with
  generating function 2z/(1-z-z^2).
* ``max_sensitivity_count(n)`` a_n = T_n - N_n, functions with s(f) = n.

All arithmetic is on Python ints, so n is unbounded here.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass
from decimal import ROUND_HALF_EVEN, Decimal, localcontext
from fractions import Fraction

from symsens.errors import DomainError, SingularError

SELF_CHECK_TERMS = 32


def _check_n(n: int) -> None:
    if n < 1:
        raise DomainError(f"counts are defined for n >= 1, got {n}")


def total_count(n: int) -> int:
    _check_n(n)
    return 1 << (n + 1)


def no_ones_series(max_n: int) -> list[int]:
    """[N_1, ..., N_max_n]."""
    _check_n(max_n)
    out = [2, 2][:max_n]
    while len(out) < max_n:
        out.append(out[-1] + out[-2])
    return out


def no_ones_count(n: int) -> int:
    _check_n(n)
    prev, cur = 2, 2
    for _ in range(n - 2):
        prev, cur = cur, prev + cur
    return prev if n == 1 else cur


def no_ones_count_unsimplified(n: int) -> int:
    """N_n from the recurrence before cancellation.

    Growing each composition of n-1 by one unit (add 1 to the last part, or
    append a part 1) gives 2 N_{n-1}. Appending a 2 to compositions of n-2
    supplies the ones ending in a lone 2, and the N_{n-1} sequences that now
    end in an appended 1 are dropped:

        N_n = 2 N_{n-1} - N_{n-1} + N_{n-2}

    Kept only to cross-check ``no_ones_count``.
    """
    _check_n(n)
    seq = [2, 2]
    while len(seq) < n:
        seq.append(2 * seq[-1] - seq[-1] + seq[-2])
    return seq[n - 1]


def max_sensitivity_count(n: int) -> int:
    return total_count(n) - no_ones_count(n)


def asymptotic_ratio(n: int) -> Fraction:
    """a_n / 2^(n+1), exactly. Tends to 1 since a_n ~ 2^(n+1)."""
    return Fraction(max_sensitivity_count(n), total_count(n))


def to_decimal(value: Fraction, places: int = 12) -> str:
    """Round an exact fraction to ``places`` decimals without going through float."""
    with localcontext() as ctx:
        ctx.prec = places + len(str(abs(value.numerator) // value.denominator)) + 10
        q = Decimal(value.numerator) / Decimal(value.denominator)
        return str(q.quantize(Decimal(1).scaleb(-places), rounding=ROUND_HALF_EVEN))


def _trim(coeffs) -> tuple[int, ...]:
    coeffs = list(coeffs)
    while len(coeffs) > 1 and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs) if coeffs else (0,)


def _poly_mul(a, b) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


def _poly_add(a, b, sign: int = 1) -> list[int]:
    size = max(len(a), len(b))
    a = list(a) + [0] * (size - len(a))
    b = list(b) + [0] * (size - len(b))
    return [x + sign * y for x, y in zip(a, b)]


def _exact(x: Fraction):
    return x.numerator if x.denominator == 1 else x


@dataclass(frozen=True)
class RationalGF:
    """numerator(z) / denominator(z) with coefficients listed from z^0 upward.

    Construction runs a self-check: the first 32 coefficients obtained from
    the induced linear recurrence must agree with plain long division.
    """

    numerator: tuple[int, ...]
    denominator: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "numerator", _trim(self.numerator))
        object.__setattr__(self, "denominator", _trim(self.denominator))
        if self.denominator[0] == 0:
            raise SingularError("denominator has zero constant term")
        if expand_series(self, SELF_CHECK_TERMS) != long_division(self, SELF_CHECK_TERMS):
            raise AssertionError("recurrence and long division disagree")

    def __add__(self, other: RationalGF) -> RationalGF:
        return RationalGF(
            _poly_add(
                _poly_mul(self.numerator, other.denominator),
                _poly_mul(other.numerator, self.denominator),
            ),
            _poly_mul(self.denominator, other.denominator),
        )

    def __sub__(self, other: RationalGF) -> RationalGF:
        return RationalGF(
            _poly_add(
                _poly_mul(self.numerator, other.denominator),
                _poly_mul(other.numerator, self.denominator),
                sign=-1,
            ),
            _poly_mul(self.denominator, other.denominator),
        )


def expand_series(gf: RationalGF, k: int) -> list:
    """First ``k`` power-series coefficients of ``gf``.

    With Q(z) A(z) = P(z) and q_0 != 0, comparing coefficients gives
    a_m = (p_m - sum_{j>=1} q_j a_{m-j}) / q_0.
    Results are ints whenever they are integral (always, when q_0 = +-1).
    """
    if k < 1:
        raise ValueError("term count must be at least 1")
    p, q = gf.numerator, gf.denominator
    if q[0] == 0:
        raise SingularError("denominator has zero constant term")
    out: list[Fraction] = []
    for m in range(k):
        acc = Fraction(p[m] if m < len(p) else 0)
        for j in range(1, min(m, len(q) - 1) + 1):
            acc -= q[j] * out[m - j]
        out.append(acc / q[0])
    return [_exact(x) for x in out]


def long_division(gf: RationalGF, k: int) -> list:
    """Series coefficients by repeated division of the running remainder."""
    p, q = gf.numerator, gf.denominator
    if q[0] == 0:
        raise SingularError("denominator has zero constant term")
    remainder = [Fraction(x) for x in p] + [Fraction(0)] * (k + len(q))
    out = []
    for m in range(k):
        c = remainder[m] / q[0]
        out.append(c)
        if c:
            for j, qj in enumerate(q):
                remainder[m + j] -= c * qj
    return [_exact(x) for x in out]


TOTAL_GF = RationalGF((0, 4), (1, -2))
NO_ONES_GF = RationalGF((0, 2), (1, -1, -1))
MAX_SENSITIVITY_GF = TOTAL_GF - NO_ONES_GF


@dataclass(frozen=True)
class CountSeries:
    """T_n, N_n and a_n for n = 1..max_n."""

    max_n: int
    total: tuple[int, ...]
    no_ones: tuple[int, ...]
    max_sens: tuple[int, ...]

    def rows(self):
        for i in range(self.max_n):
            n = i + 1
            yield n, self.total[i], self.no_ones[i], self.max_sens[i], Fraction(
                self.max_sens[i], self.total[i]
            )

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["n", "total", "no_ones", "max_sens", "ratio"])
        for n, t, no, a, r in self.rows():
            writer.writerow([n, t, no, a, f"{r.numerator}/{r.denominator}"])
        return buf.getvalue()

    def to_records(self) -> list[dict]:
        return [
            {
                "n": n,
                "total": t,
                "no_ones": no,
                "max_sens": a,
                "ratio": f"{r.numerator}/{r.denominator}",
            }
            for n, t, no, a, r in self.rows()
        ]


def count_series(max_n: int) -> CountSeries:
    no_ones = no_ones_series(max_n)
    total = [1 << (n + 1) for n in range(1, max_n + 1)]
    return CountSeries(
        max_n=max_n,
        total=tuple(total),
        no_ones=tuple(no_ones),
        max_sens=tuple(t - no for t, no in zip(total, no_ones)),
    )
