"""Substitutions, square/cube detection, and the square-freeness test.

The classic substitutions live here as constructors: the two-letter
cube-free morphism (a -> ab, b -> ba), the three-letter square-free
morphism (a -> abcab, b -> acabcb, c -> acbcacb), and the golden-ratio
morphism (a -> ab, b -> a) used by the complexity checks.
"""

from __future__ import annotations

from dataclasses import dataclass

from .words import Alphabet, Word, format_word, parse_word

ITERATE_CAP = 10**6


@dataclass(frozen=True)
class Morphism:
    source: Alphabet
    target: Alphabet
    images: tuple[Word, ...]  # indexed by source letter - 1

    def __post_init__(self) -> None:
        if len(self.images) != self.source.size:
            raise ValueError("every source letter needs an image")
        for img in self.images:
            if len(img) == 0:
                raise ValueError("images must be nonempty")
            if img.alphabet != self.target:
                raise ValueError("image over the wrong alphabet")

    def image_of(self, letter: int) -> Word:
        if not 1 <= letter <= self.source.size:
            raise ValueError(f"letter {letter} outside the source alphabet")
        return self.images[letter - 1]

    @property
    def max_image(self) -> int:
        return max(len(img) for img in self.images)

    @property
    def min_image(self) -> int:
        return min(len(img) for img in self.images)


def apply(m: Morphism, w: Word) -> Word:
    if w.alphabet.size > m.source.size:
        raise ValueError("word letters outside the source alphabet")
    out: list[int] = []
    for x in w.letters:
        out.extend(m.image_of(x).letters)
    return Word(tuple(out), m.target)


def iterate(m: Morphism, letter: int | str, k: int, cap: int = ITERATE_CAP) -> Word:
    """k-fold application starting from a single letter."""
    if m.target.size > m.source.size:
        raise ValueError("iteration needs target letters inside the source alphabet")
    if isinstance(letter, str):
        letter = ord(letter) - ord("a") + 1
    w = Word((letter,), m.target)
    for _ in range(k):
        grow = sum(len(m.image_of(x)) for x in w.letters)
        if grow > cap:
            raise ValueError(f"iterate would exceed the {cap}-letter cap")
        w = apply(m, w)
    return w


@dataclass(frozen=True)
class RepetitionOccurrence:
    start: int  # 1-based
    root: Word


def has_square(w: Word) -> RepetitionOccurrence | None:
    """Leftmost square uu, shortest root at that start; None if square-free."""
    return _repetition(w, 2)


def has_cube(w: Word) -> RepetitionOccurrence | None:
    return _repetition(w, 3)


def _repetition(w: Word, e: int) -> RepetitionOccurrence | None:
    ls = w.letters
    n = len(ls)
    for start in range(n):
        for rlen in range(1, (n - start) // e + 1):
            root = ls[start : start + rlen]
            if ls[start : start + rlen * e] == root * e:
                return RepetitionOccurrence(start + 1, Word(root, w.alphabet))
    return None


def square_free_words(alphabet: Alphabet, max_len: int):
    """All square-free words of length 1..max_len, by pruned extension."""
    stack = [(x,) for x in reversed(list(alphabet.letters()))]
    while stack:
        ls = stack.pop()
        w = Word(ls, alphabet)
        yield w
        if len(ls) < max_len:
            for x in reversed(list(alphabet.letters())):
                cand = ls + (x,)
                if not _square_ending_at(cand):
                    stack.append(cand)


def _square_ending_at(ls: tuple[int, ...]) -> bool:
    n = len(ls)
    for rlen in range(1, n // 2 + 1):
        if ls[n - rlen :] == ls[n - 2 * rlen : n - rlen]:
            return True
    return False


@dataclass(frozen=True)
class CrochemoreReport:
    is_square_free: bool
    k_used: int
    counterexample: Word | None
    thue2_condition1: bool
    thue2_condition2: bool


def crochemore_test(m: Morphism) -> CrochemoreReport:
    """Square-freeness of a morphism via the finite test length.

    k = max(3, 1 + floor((M-3)/m)) with M and m the extreme image
    lengths; the morphism is square-free iff it preserves
    square-freeness on all square-free source words of length <= k.
    The report also carries the two classical sufficient conditions
    (images of short square-free words square-free; no image a factor
    of another).
    """
    k = max(3, 1 + (m.max_image - 3) // m.min_image)
    counterexample = None
    for w in square_free_words(m.source, k):
        if has_square(apply(m, w)) is not None:
            counterexample = w
            break
    cond1 = all(
        has_square(apply(m, w)) is None for w in square_free_words(m.source, 3)
    )
    cond2 = True
    for a in m.source.letters():
        for b in m.source.letters():
            if a == b:
                continue
            img_a, img_b = m.image_of(a).letters, m.image_of(b).letters
            if any(
                img_b[i : i + len(img_a)] == img_a
                for i in range(len(img_b) - len(img_a) + 1)
            ):
                cond2 = False
    return CrochemoreReport(counterexample is None, k, counterexample, cond1, cond2)


def parse_morphism(text: str) -> Morphism:
    """Lines 'letter -> image' in the word text format."""
    images: dict[int, Word] = {}
    letters: list[int] = []
    for ln in text.splitlines():
        ln = ln.strip()
        if not ln:
            continue
        left, arrow, right = ln.partition("->")
        if not arrow:
            raise ValueError(f"malformed morphism line {ln!r}")
        src = parse_word(left.strip())
        if len(src) != 1:
            raise ValueError(f"left side of {ln!r} must be a single letter")
        letters.append(src.letters[0])
        images[src.letters[0]] = parse_word(right.strip())
    if not images:
        raise ValueError("empty morphism text")
    source = Alphabet(max(letters))
    if sorted(images) != list(source.letters()):
        raise ValueError("images must cover letters 1..l without gaps")
    target = Alphabet(max(max(img.letters) for img in images.values()))
    fixed = tuple(
        Word(images[x].letters, target) for x in source.letters()
    )
    return Morphism(source, target, fixed)


def format_morphism(m: Morphism) -> str:
    lines = []
    for x in m.source.letters():
        lines.append(
            f"{m.source.letter_str(x)} -> {format_word(m.image_of(x))}"
        )
    return "\n".join(lines) + "\n"


def thue_morse_morphism() -> Morphism:
    a2 = Alphabet(2)
    return Morphism(a2, a2, (parse_word("ab", a2), parse_word("ba", a2)))


def thue_ternary_morphism() -> Morphism:
    a3 = Alphabet(3)
    return Morphism(
        a3,
        a3,
        (
            parse_word("abcab", a3),
            parse_word("acabcb", a3),
            parse_word("acbcacb", a3),
        ),
    )


def fibonacci_morphism() -> Morphism:
    a2 = Alphabet(2)
    return Morphism(a2, a2, (parse_word("ab", a2), parse_word("a", a2)))


def thue_morse(k: int) -> Word:
    """k-th iterate of the cube-free morphism from 'a'; length 2**k."""
    return iterate(thue_morse_morphism(), 1, k)


def thue_ternary(k: int) -> Word:
    """k-th iterate of the square-free ternary morphism from 'a'."""
    return iterate(thue_ternary_morphism(), 1, k)
