"""Finite words over a totally ordered alphabet.

Letters are the integers 1..l with 1 < 2 < ... < l; for l <= 26 they
print as 'a', 'b', ...  Two words are *comparable* when neither is a
prefix of the other (equal words are a degenerate prefix pair, hence
incomparable).  All values are immutable and every operation is pure.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Iterator, Sequence


class Cmp(Enum):
    LESS = -1
    INCOMPARABLE = 0
    GREATER = 1


@dataclass(frozen=True, order=True)
class Alphabet:
    """Ordered alphabet of letters 1..size."""

    size: int

    def __post_init__(self) -> None:
        if self.size < 1:
            raise ValueError("alphabet needs at least one letter")

    def letter_str(self, letter: int) -> str:
        if not 1 <= letter <= self.size:
            raise ValueError(f"letter {letter} outside alphabet of size {self.size}")
        if self.size <= 26:
            return chr(ord("a") + letter - 1)
        return str(letter)

    def letters(self) -> range:
        return range(1, self.size + 1)


@dataclass(frozen=True)
class Word:
    letters: tuple[int, ...]
    alphabet: Alphabet

    def __post_init__(self) -> None:
        for x in self.letters:
            if not 1 <= x <= self.alphabet.size:
                raise ValueError(f"letter {x} outside alphabet of size {self.alphabet.size}")

    def __len__(self) -> int:
        return len(self.letters)

    def __str__(self) -> str:
        return format_word(self)

    def __repr__(self) -> str:
        return f"Word({format_word(self)!r}, l={self.alphabet.size})"

    def __getitem__(self, item):
        if isinstance(item, slice):
            return Word(self.letters[item], self.alphabet)
        return self.letters[item]

    def __iter__(self) -> Iterator[int]:
        return iter(self.letters)

    def __add__(self, other: "Word") -> "Word":
        _require_same_alphabet(self, other)
        return Word(self.letters + other.letters, self.alphabet)

    def __mul__(self, k: int) -> "Word":
        return Word(self.letters * k, self.alphabet)

    def is_empty(self) -> bool:
        return not self.letters


class Theta:
    """Bottom element: lexicographically below every word, itself included."""

    _instance: "Theta | None" = None

    def __new__(cls) -> "Theta":
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "theta"


THETA = Theta()


def word(text: str, alphabet: Alphabet | None = None) -> Word:
    """Parse the word text format; see `parse_word`."""
    return parse_word(text, alphabet)


def parse_word(text: str, alphabet: Alphabet | None = None) -> Word:
    """Parse 'abc' (lowercase letters) or 'i:1,2,3' (explicit indices)."""
    if text.startswith("i:"):
        payload = text[2:]
        letters = tuple(int(part) for part in payload.split(",")) if payload else ()
    else:
        letters = tuple(ord(ch) - ord("a") + 1 for ch in text)
        if any(x < 1 or x > 26 for x in letters):
            raise ValueError(f"word text {text!r} is not lowercase a-z")
    if alphabet is None:
        alphabet = Alphabet(max(letters, default=1))
    return Word(letters, alphabet)


def format_word(w: Word) -> str:
    if w.alphabet.size <= 26:
        return "".join(chr(ord("a") + x - 1) for x in w.letters)
    return "i:" + ",".join(str(x) for x in w.letters)


def _require_same_alphabet(u: Word, v: Word) -> None:
    if u.alphabet != v.alphabet:
        raise ValueError("alphabet mismatch")


def lex_compare(u: Word, v: Word) -> Cmp:
    """Compare at the first differing position; prefix pairs are incomparable."""
    _require_same_alphabet(u, v)
    return lex_compare_letters(u.letters, v.letters)


def lex_compare_letters(a: Sequence[int], b: Sequence[int]) -> Cmp:
    for x, y in zip(a, b):
        if x != y:
            return Cmp.LESS if x < y else Cmp.GREATER
    return Cmp.INCOMPARABLE


def comparable(u: Word, v: Word) -> bool:
    return lex_compare(u, v) is not Cmp.INCOMPARABLE


def tails(w: Word) -> tuple[Word, ...]:
    """All |w| suffixes ordered by start position."""
    return tuple(Word(w.letters[i:], w.alphabet) for i in range(len(w)))


def k_tail(w: Word, start: int, k: int) -> Word:
    """First k letters of the tail starting at `start` (1-based).

    A tail shorter than k is returned whole.
    """
    if not 1 <= start <= len(w):
        raise ValueError(f"start {start} outside word of length {len(w)}")
    return Word(w.letters[start - 1 : start - 1 + k], w.alphabet)


@dataclass(frozen=True)
class PeriodOccurrence:
    period: Word
    start: int  # 1-based position of the occurrence of period**exponent
    exponent: int


def find_period_power(w: Word, d: int) -> PeriodOccurrence | None:
    """Leftmost occurrence of z**d with z primitive, shortest z first."""
    if d < 2:
        raise ValueError("power threshold d must be at least 2")
    ls = w.letters
    n = len(ls)
    for zlen in range(1, n // d + 1):
        block = zlen * d
        for start in range(0, n - block + 1):
            z = ls[start : start + zlen]
            if ls[start : start + block] == z * d and _is_primitive_letters(z):
                return PeriodOccurrence(Word(z, w.alphabet), start + 1, d)
    return None


def subword_count_period(w: Word, k: int, t: int) -> bool:
    """True iff w (of length k*t) has at most k distinct length-k factors.

    When true, w must contain z**t with |z| <= k; that consequence is
    re-checked here rather than trusted.
    """
    if len(w) != k * t:
        raise ValueError(f"need |w| = k*t, got {len(w)} != {k}*{t}")
    ls = w.letters
    factors = {ls[i : i + k] for i in range(len(ls) - k + 1)}
    if len(factors) > k:
        return False
    found = _find_power_with_short_period(ls, t, k)
    assert found, "at most k distinct k-factors must force a period of length t"
    return True


def _find_power_with_short_period(ls: tuple[int, ...], t: int, max_zlen: int) -> bool:
    for zlen in range(1, max_zlen + 1):
        block = zlen * t
        for start in range(0, len(ls) - block + 1):
            z = ls[start : start + zlen]
            if ls[start : start + block] == z * t:
                return True
    return False


def is_primitive(w: Word) -> bool:
    """True iff w is not a proper power v**k, k > 1."""
    if len(w) == 0:
        raise ValueError("the empty word has no primitivity")
    return _is_primitive_letters(w.letters)


def _is_primitive_letters(ls: tuple[int, ...]) -> bool:
    n = len(ls)
    for p in range(1, n):
        if n % p == 0 and ls == ls[:p] * (n // p):
            return False
    return True


def rotations(w: Word) -> tuple[Word, ...]:
    ls = w.letters
    return tuple(Word(ls[i:] + ls[:i], w.alphabet) for i in range(len(ls)))


def canonical_rotation(w: Word) -> Word:
    return Word(min(w.letters[i:] + w.letters[:i] for i in range(len(w))), w.alphabet)


def are_conjugate(u: Word, v: Word) -> bool:
    _require_same_alphabet(u, v)
    if len(u) != len(v):
        return False
    if len(u) == 0:
        return True
    return v.letters in {u.letters[i:] + u.letters[:i] for i in range(len(u))}


def strongly_comparable(u: Word, v: Word) -> bool:
    """True iff every rotation of u is comparable with every rotation of v."""
    _require_same_alphabet(u, v)
    for ru in rotations(u):
        for rv in rotations(v):
            if lex_compare(ru, rv) is Cmp.INCOMPARABLE:
                return False
    return True


@dataclass(frozen=True)
class WordCycle:
    """Conjugacy class of a word under rotation.

    `representative` is the lexicographically least rotation;
    `period_length` is the length of the primitive root.
    """

    representative: Word
    period_length: int

    @staticmethod
    def of(w: Word) -> "WordCycle":
        if len(w) == 0:
            raise ValueError("the empty word has no cycle")
        rep = canonical_rotation(w)
        root = len(w)
        for p in range(1, len(w)):
            if len(w) % p == 0 and rep.letters == rep.letters[:p] * (len(w) // p):
                root = p
                break
        return WordCycle(rep, root)

    def __len__(self) -> int:
        return len(self.representative)

    def rotations(self) -> tuple[Word, ...]:
        return rotations(self.representative)


def conjugate_classes(ws: Iterable[Word]) -> tuple[tuple[WordCycle, tuple[Word, ...]], ...]:
    """Partition primitive same-length words into rotation classes."""
    ws = tuple(ws)
    if not ws:
        return ()
    length = len(ws[0])
    for w in ws:
        if len(w) != length:
            raise ValueError("conjugate classes need words of one common length")
        if not is_primitive(w):
            raise ValueError(f"non-primitive word {format_word(w)!r}")
    buckets: dict[tuple[int, ...], list[Word]] = {}
    for w in ws:
        buckets.setdefault(canonical_rotation(w).letters, []).append(w)
    out = []
    for key in sorted(buckets):
        members = buckets[key]
        out.append((WordCycle.of(members[0]), tuple(members)))
    return tuple(out)


def is_regular(w: Word) -> bool:
    """True iff w is strictly greater than each of its proper rotations."""
    if len(w) == 0:
        raise ValueError("the empty word is not regular")
    ls = w.letters
    for i in range(1, len(ls)):
        rot = ls[i:] + ls[:i]
        if not rot < ls:  # same length: plain tuple order is the lex order
            return False
    return True


@dataclass(frozen=True)
class Leaf:
    letter: int

    def render(self, alphabet: Alphabet) -> str:
        return f"[{alphabet.letter_str(self.letter)}]"

    def frontier(self) -> tuple[int, ...]:
        return (self.letter,)


@dataclass(frozen=True)
class Pair:
    left: "Leaf | Pair"
    right: "Leaf | Pair"

    def render(self, alphabet: Alphabet) -> str:
        return f"[{self.left.render(alphabet)}{self.right.render(alphabet)}]"

    def frontier(self) -> tuple[int, ...]:
        return self.left.frontier() + self.right.frontier()


@dataclass(frozen=True)
class BracketedWord:
    tree: Leaf | Pair
    word: Word

    def __post_init__(self) -> None:
        if self.tree.frontier() != self.word.letters:
            raise ValueError("bracketing frontier does not spell the word")

    def __str__(self) -> str:
        return self.tree.render(self.word.alphabet)


def shirshov_bracketing(w: Word) -> BracketedWord:
    """The unique bracketing of a regular word that stays regular.

    Split recursively at the longest proper regular suffix (the
    Chen-Fox-Lyndon factorization step, mirrored for the greater-than-
    rotations convention).
    """
    if not is_regular(w):
        raise ValueError(f"word {format_word(w)!r} is not regular")
    return BracketedWord(_bracket(w.letters), w)


def _bracket(ls: tuple[int, ...]) -> Leaf | Pair:
    if len(ls) == 1:
        return Leaf(ls[0])
    for cut in range(1, len(ls)):
        suffix = ls[cut:]
        if _is_regular_letters(suffix):
            return Pair(_bracket(ls[:cut]), _bracket(suffix))
    raise AssertionError("a regular word always has a regular proper suffix")


def _is_regular_letters(ls: tuple[int, ...]) -> bool:
    return all(ls[i:] + ls[:i] < ls for i in range(1, len(ls)))


def zimin_word(n: int, alphabet: Alphabet | None = None) -> Word:
    """Z_1 = x_1, Z_{k+1} = Z_k x_{k+1} Z_k; length 2**n - 1."""
    if n < 1:
        raise ValueError("zimin index must be positive")
    if alphabet is None:
        alphabet = Alphabet(n)
    if alphabet.size < n:
        raise ValueError(f"alphabet of size {alphabet.size} too small for Z_{n}")
    ls: tuple[int, ...] = (1,)
    for k in range(2, n + 1):
        ls = ls + (k,) + ls
    return Word(ls, alphabet)


def pattern_occurs(pattern: Word, host: Word) -> bool:
    """True iff some substitution of nonempty words turns pattern into a factor of host."""
    return find_pattern_instance(pattern, host) is not None


def find_pattern_instance(pattern: Word, host: Word) -> dict[int, Word] | None:
    """A substitution letter -> nonempty word realizing pattern inside host."""
    if len(pattern) == 0:
        raise ValueError("patterns must be nonempty")
    pat = pattern.letters
    hls = host.letters

    def match(pi: int, hi: int, bound: dict[int, tuple[int, ...]]) -> dict[int, tuple[int, ...]] | None:
        if pi == len(pat):
            return bound
        remaining_min = sum(len(bound.get(x, (0,))) for x in pat[pi:])
        if hi + remaining_min > len(hls):
            return None
        letter = pat[pi]
        if letter in bound:
            img = bound[letter]
            if hls[hi : hi + len(img)] == img:
                return match(pi + 1, hi + len(img), bound)
            return None
        for end in range(hi + 1, len(hls) + 1):
            bound[letter] = hls[hi:end]
            got = match(pi + 1, end, bound)
            if got is not None:
                return got
            del bound[letter]
        return None

    for start in range(len(hls)):
        got = match(0, start, {})
        if got is not None:
            return {k: Word(v, host.alphabet) for k, v in got.items()}
    return None


def all_words(alphabet: Alphabet, length: int) -> Iterator[Word]:
    """Every word of exactly the given length, lexicographic order."""
    for ls in itertools.product(alphabet.letters(), repeat=length):
        yield Word(ls, alphabet)


def words_up_to(alphabet: Alphabet, max_len: int, min_len: int = 1) -> Iterator[Word]:
    for n in range(min_len, max_len + 1):
        yield from all_words(alphabet, n)
