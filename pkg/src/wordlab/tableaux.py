"""Schensted insertion, the RSK bijection, hooks, and permutation censuses.

Permutations are 1-based value tuples.  A standard tableau on n cells
holds each of 1..n once, strictly increasing along rows and down
columns.  xi_count(n, k) counts permutations with no decreasing
subsequence of length k+1 by four independent routes that must agree:
direct enumeration, hook-length summation, the exact closed form for
k = 3, and coefficient extraction from the determinant generating
function.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial
from typing import Iterator, Sequence


@dataclass(frozen=True)
class Tableau:
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        widths = [len(r) for r in self.rows]
        if any(w == 0 for w in widths) or any(
            widths[i] < widths[i + 1] for i in range(len(widths) - 1)
        ):
            raise ValueError("rows must be nonempty with weakly decreasing lengths")

    @property
    def shape(self) -> tuple[int, ...]:
        return tuple(len(r) for r in self.rows)

    @property
    def order(self) -> int:
        return sum(len(r) for r in self.rows)

    def is_standard(self) -> bool:
        entries = [x for row in self.rows for x in row]
        if sorted(entries) != list(range(1, len(entries) + 1)):
            return False
        for row in self.rows:
            if any(row[i] >= row[i + 1] for i in range(len(row) - 1)):
                return False
        for r in range(len(self.rows) - 1):
            lower = self.rows[r + 1]
            for c in range(len(lower)):
                if self.rows[r][c] >= lower[c]:
                    return False
        return True

    def __str__(self) -> str:
        width = max((len(str(x)) for row in self.rows for x in row), default=1)
        return "\n".join(" ".join(str(x).rjust(width) for x in row) for row in self.rows)


def schensted_insert(t: Tableau | None, x: int) -> tuple[Tableau, tuple[int, int]]:
    """Row-insert x; returns the new tableau and the landing cell (1-based)."""
    rows = [list(r) for r in t.rows] if t is not None else []
    if any(x in row for row in rows):
        raise ValueError(f"entry {x} already present")
    r = 0
    while True:
        if r == len(rows):
            rows.append([x])
            return Tableau(tuple(tuple(row) for row in rows)), (r + 1, 1)
        row = rows[r]
        if x >= row[-1]:
            row.append(x)
            return Tableau(tuple(tuple(row) for row in rows)), (r + 1, len(row))
        # bump the least entry above x into the next row
        lo, hi = 0, len(row) - 1
        while lo < hi:
            mid = (lo + hi) // 2
            if row[mid] > x:
                hi = mid
            else:
                lo = mid + 1
        x, row[lo] = row[lo], x
        r += 1


def rsk(pi: Sequence[int]) -> tuple[Tableau, Tableau]:
    """P by successive row insertion, Q by recording each landing cell."""
    _check_permutation(pi)
    p: Tableau | None = None
    q_rows: list[list[int]] = []
    for step, x in enumerate(pi, start=1):
        p, (r, _) = schensted_insert(p, x)
        if r > len(q_rows):
            q_rows.append([])
        q_rows[r - 1].append(step)
    if p is None:
        raise ValueError("empty permutation")
    q = Tableau(tuple(tuple(row) for row in q_rows))
    assert p.shape == q.shape and p.is_standard() and q.is_standard()
    return p, q


def rsk_inverse(p: Tableau, q: Tableau) -> tuple[int, ...]:
    """The unique permutation with rsk(pi) = (p, q), by reverse bumping."""
    if p.shape != q.shape:
        raise ValueError("shape mismatch")
    if not (p.is_standard() and q.is_standard()):
        raise ValueError("non-standard tableau")
    rows = [list(r) for r in p.rows]
    order = p.order
    positions = {}
    for r, row in enumerate(q.rows):
        for c, entry in enumerate(row):
            positions[entry] = (r, c)
    out = []
    for step in range(order, 0, -1):
        r, c = positions[step]
        x = rows[r].pop(c)
        if not rows[r]:
            rows.pop(r)
        for rr in range(r - 1, -1, -1):
            row = rows[rr]
            lo, hi = 0, len(row) - 1
            while lo < hi:  # rightmost entry below x
                mid = (lo + hi + 1) // 2
                if row[mid] < x:
                    lo = mid
                else:
                    hi = mid - 1
            x, row[lo] = row[lo], x
        out.append(x)
    return tuple(reversed(out))


def _check_permutation(pi: Sequence[int]) -> None:
    if sorted(pi) != list(range(1, len(pi) + 1)):
        raise ValueError("not a permutation of 1..n")


def longest_decreasing(pi: Sequence[int]) -> int:
    tails: list[int] = []  # negated patience piles
    for x in pi:
        y = -x
        lo, hi = 0, len(tails)
        while lo < hi:
            mid = (lo + hi) // 2
            if tails[mid] < y:
                lo = mid + 1
            else:
                hi = mid
        if lo == len(tails):
            tails.append(y)
        else:
            tails[lo] = y
    return len(tails)


def longest_increasing(pi: Sequence[int]) -> int:
    return longest_decreasing([-x for x in pi])


def partitions(n: int, max_part: int | None = None) -> Iterator[tuple[int, ...]]:
    if max_part is None:
        max_part = n
    if n == 0:
        yield ()
        return
    for first in range(min(n, max_part), 0, -1):
        for rest in partitions(n - first, first):
            yield (first,) + rest


def partitions_max_rows(n: int, k: int) -> Iterator[tuple[int, ...]]:
    for shape in partitions(n):
        if len(shape) <= k:
            yield shape


def hook_lengths(shape: tuple[int, ...]) -> tuple[tuple[int, ...], ...]:
    cols = [0] * (shape[0] if shape else 0)
    for row_len in shape:
        for c in range(row_len):
            cols[c] += 1
    return tuple(
        tuple(row_len - c + cols[c] - r - 1 for c in range(row_len))
        for r, row_len in enumerate(shape)
    )


def hook_count(shape: tuple[int, ...]) -> int:
    """Standard fillings of the shape: n! / product of hooks."""
    n = sum(shape)
    prod = 1
    for row in hook_lengths(shape):
        for h in row:
            prod *= h
    count, rem = divmod(factorial(n), prod)
    assert rem == 0
    return count


def delta_count(n: int, k: int) -> int:
    """Delta_k(n): standard tableaux on n cells with at most k rows."""
    return sum(hook_count(shape) for shape in partitions_max_rows(n, k))


def xi_count(n: int, k: int, method: str = "tableaux") -> int:
    """Permutations of n with no decreasing subsequence of length k+1."""
    if n < 0 or k < 1:
        raise ValueError("xi_count needs n >= 0, k >= 1")
    if method == "enumerate":
        if n > 9:
            raise ValueError("enumeration capped at n = 9")
        return _xi_enumerate(n, k)
    if method == "tableaux":
        if n > 12:
            raise ValueError("tableaux route capped at n = 12")
        if n == 0:
            return 1
        return sum(hook_count(shape) ** 2 for shape in partitions_max_rows(n, k))
    if method == "closed3":
        if k != 3:
            raise ValueError("closed form available only for k = 3")
        return xi3_closed(n)
    if method == "genfun":
        if k > 4 or n > 8:
            raise ValueError("generating-function route capped at k = 4, n = 8")
        return _xi_genfun(n, k)
    raise ValueError(f"unknown method {method!r}")


def _xi_enumerate(n: int, k: int) -> int:
    """Backtracking over permutation prefixes, pruning once piles exceed k."""
    if n == 0:
        return 1
    count = 0
    used = [False] * (n + 1)

    def place(depth: int, tails: list[int]) -> None:
        nonlocal count
        if depth == n:
            count += 1
            return
        for x in range(1, n + 1):
            if used[x]:
                continue
            y = -x
            lo, hi = 0, len(tails)
            while lo < hi:
                mid = (lo + hi) // 2
                if tails[mid] < y:
                    lo = mid + 1
                else:
                    hi = mid
            if lo == len(tails) and len(tails) == k:
                continue
            used[x] = True
            if lo == len(tails):
                tails.append(y)
                place(depth + 1, tails)
                tails.pop()
            else:
                old = tails[lo]
                tails[lo] = y
                place(depth + 1, tails)
                tails[lo] = old
            used[x] = False

    place(0, [])
    return count


def xi3_closed(n: int) -> int:
    """Exact-rational evaluation of the published xi_3(n) sum."""
    total = Fraction(0)
    for k in range(n + 1):
        num = 3 * k * k + 2 * k + 1 - n - 2 * k * n
        total += (
            Fraction(comb(2 * k, k) * comb(n, k) ** 2 * num)
            / ((k + 1) ** 2 * (k + 2) * (n - k + 1))
        )
    total *= 2
    assert total.denominator == 1
    return total.numerator


# --- generating-function route: rational power series in x, truncated ---


def _series_mul(a: list[Fraction], b: list[Fraction], cap: int) -> list[Fraction]:
    out = [Fraction(0)] * (cap + 1)
    for i, ai in enumerate(a):
        if ai == 0:
            continue
        for j, bj in enumerate(b):
            if i + j > cap:
                break
            out[i + j] += ai * bj
    return out


def _series_b(i: int, cap: int) -> list[Fraction]:
    out = [Fraction(0)] * (cap + 1)
    m = 0
    while 2 * m + i <= cap:
        out[2 * m + i] = Fraction(1, factorial(m) * factorial(m + i))
        m += 1
    return out


def _series_det(mat: list[list[list[Fraction]]], cap: int) -> list[Fraction]:
    k = len(mat)
    if k == 1:
        return mat[0][0]
    out = [Fraction(0)] * (cap + 1)
    for j in range(k):
        minor = [[row[c] for c in range(k) if c != j] for row in mat[1:]]
        term = _series_mul(mat[0][j], _series_det(minor, cap), cap)
        for idx, v in enumerate(term):
            out[idx] += v if j % 2 == 0 else -v
    return out


def _xi_genfun(n: int, k: int) -> int:
    cap = 2 * n + 2
    mat = [[_series_b(abs(i - j), cap) for j in range(k)] for i in range(k)]
    u = _series_det(mat, cap)
    value = u[2 * n] * factorial(n) ** 2
    assert value.denominator == 1
    return value.numerator


def xi_bound(n: int, k: int) -> int:
    """k**(2n) / ((k-1)!)**2, floored."""
    return k ** (2 * n) // factorial(k - 1) ** 2


def delta_bound(n: int, k: int) -> int:
    """k**n / (k-1)!, floored."""
    return k**n // factorial(k - 1)


def multilinear_word_count(l: int, n: int, k: int) -> int:
    """Multilinear length-n words over l letters with no (k+1)-term decreasing run."""
    if n > l:
        raise ValueError("a multilinear word cannot be longer than the alphabet")
    return comb(l, n) * xi_count(n, k, method="tableaux" if n <= 12 else "enumerate")


def permutations_of(n: int) -> Iterator[tuple[int, ...]]:
    return itertools.permutations(range(1, n + 1))
