"""Exact rationals and dense rational matrices.

Values are plain :class:`fractions.Fraction` objects, which are already kept
in lowest terms with a positive denominator. This module adds the pieces the
rest of the package needs on top: a strict parser, the canonical ``p/q``
serialization, and a fraction-free determinant.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

_RATIONAL_RE = re.compile(
    r"""
    ^(?P<sign>-?)
    (?:
        (?P<num>\d+)/(?P<den>\d+)
      | (?P<int>\d+)(?:\.(?P<frac>\d+))?
    )$
    """,
    re.VERBOSE,
)


def rational_parse(text: str) -> Fraction:
    """Parse ``INT``, ``INT/POSINT`` or a terminating decimal, exactly.

    >>> rational_parse("0.25")
    Fraction(1, 4)
    """
    if not isinstance(text, str):
        raise TypeError(f"expected str, got {type(text).__name__}")
    m = _RATIONAL_RE.match(text.strip())
    if m is None:
        raise ValueError(f"malformed rational: {text!r}")
    sign = -1 if m["sign"] else 1
    if m["num"] is not None:
        den = int(m["den"])
        if den == 0:
            raise ZeroDivisionError(f"zero denominator in {text!r}")
        return sign * Fraction(int(m["num"]), den)
    frac = m["frac"] or ""
    return sign * Fraction(int(m["int"] + frac), 10 ** len(frac))


def format_rational(x: Fraction) -> str:
    """Canonical serialization: ``p`` when the denominator is 1, else ``p/q``."""
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def format_decimal(x: Fraction, digits: int) -> str:
    """Round half-to-even to ``digits`` places. Display only."""
    if digits < 0:
        raise ValueError("digits must be non-negative")
    scaled = round(Fraction(x) * 10**digits)
    sign = "-" if scaled < 0 else ""
    s = str(abs(scaled)).rjust(digits + 1, "0")
    if digits == 0:
        return sign + s
    return f"{sign}{s[:-digits]}.{s[-digits:]}"


@dataclass(frozen=True)
class RationalMatrix:
    """Immutable dense matrix of Fractions stored row-major."""

    rows: tuple[tuple[Fraction, ...], ...]
    n_cols: int

    def __post_init__(self):
        for r in self.rows:
            if len(r) != self.n_cols:
                raise ValueError("ragged matrix rows")

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable], n_cols: int | None = None) -> RationalMatrix:
        data = tuple(tuple(Fraction(x) for x in r) for r in rows)
        if n_cols is None:
            n_cols = len(data[0]) if data else 0
        return cls(data, n_cols)

    @classmethod
    def zeros(cls, n_rows: int, n_cols: int) -> RationalMatrix:
        return cls(tuple((Fraction(0),) * n_cols for _ in range(n_rows)), n_cols)

    @property
    def n_rows(self) -> int:
        return len(self.rows)

    @property
    def shape(self) -> tuple[int, int]:
        return self.n_rows, self.n_cols

    def __getitem__(self, ij: tuple[int, int]) -> Fraction:
        i, j = ij
        return self.rows[i][j]

    def transpose(self) -> RationalMatrix:
        return RationalMatrix(tuple(zip(*self.rows)) if self.rows else (), self.n_rows)

    def tolist(self) -> list[list[Fraction]]:
        return [list(r) for r in self.rows]


def _check_indices(indices: Iterable[int], bound: int, what: str) -> set[int]:
    seen: set[int] = set()
    for k in indices:
        if not 0 <= k < bound:
            raise IndexError(f"{what} index {k} out of range 0..{bound - 1}")
        if k in seen:
            raise ValueError(f"duplicate {what} index {k}")
        seen.add(k)
    return seen


def minor_matrix(m: RationalMatrix, drop_rows: Iterable[int] = (), drop_cols: Iterable[int] = ()) -> RationalMatrix:
    """Return ``m`` with the given rows and columns removed, order preserved."""
    rows = _check_indices(drop_rows, m.n_rows, "row")
    cols = _check_indices(drop_cols, m.n_cols, "column")
    keep_cols = [j for j in range(m.n_cols) if j not in cols]
    data = tuple(
        tuple(r[j] for j in keep_cols) for i, r in enumerate(m.rows) if i not in rows
    )
    return RationalMatrix(data, len(keep_cols))


def _bareiss(a: list[list[int]]) -> int:
    # Destroys ``a``. Every division below is exact (Sylvester's identity).
    n = len(a)
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for p in range(k + 1, n):
                if a[p][k] != 0:
                    a[k], a[p] = a[p], a[k]
                    sign = -sign
                    break
            else:
                return 0
        akk = a[k][k]
        rk = a[k]
        for i in range(k + 1, n):
            ri = a[i]
            aik = ri[k]
            for j in range(k + 1, n):
                ri[j] = (ri[j] * akk - aik * rk[j]) // prev
        prev = akk
    return sign * a[n - 1][n - 1]


def det(m: RationalMatrix | Sequence[Sequence]) -> Fraction:
    """Exact determinant by Bareiss elimination.

    Each row is first scaled by the lcm of its denominators so the elimination
    runs over Python integers; the scale factors are divided back out at the
    end. The empty matrix has determinant 1.
    """
    if not isinstance(m, RationalMatrix):
        m = RationalMatrix.from_rows(m)
    n = m.n_rows
    if n != m.n_cols:
        raise ValueError(f"determinant of non-square {n}x{m.n_cols} matrix")
    if n == 0:
        return Fraction(1)
    scale = 1
    a: list[list[int]] = []
    for row in m.rows:
        q = math.lcm(*(x.denominator for x in row))
        scale *= q
        a.append([x.numerator * (q // x.denominator) for x in row])
    return Fraction(_bareiss(a), scale)
