"""n-divisibility, reducibility oracles, colorings, fragments, heights.

Positions exposed by this module are 1-based, matching the word
conventions elsewhere.  Ordinary n-divisibility asks for a partition of
the whole word into n blocks in strictly decreasing lexicographic
order; tail-sense divisibility asks for n suffixes with increasing
start positions and strictly decreasing order; the strong sense asks
for blocks tiling a suffix, each opening with a power of a distinct
declared period.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Sequence

from .bounds import alpha_lower
from .posets import FinitePoset, max_antichain, min_chain_cover
from .words import (
    THETA,
    Alphabet,
    Cmp,
    Theta,
    Word,
    WordCycle,
    canonical_rotation,
    find_period_power,
    format_word,
    lex_compare_letters,
    rotations,
)


class Sense(Enum):
    ORDINARY = "ordinary"
    TAIL = "tail"
    STRONG = "strong"


class BudgetExceededError(RuntimeError):
    """An exhaustive search ran out of its node budget."""

    def __init__(self, message: str, nodes: int):
        super().__init__(message)
        self.nodes = nodes


@dataclass(frozen=True)
class DivisibilityWitness:
    kind: Sense
    blocks: tuple[tuple[int, int], ...]  # 1-based inclusive (start, end)
    periods: tuple[Word, ...] | None = None  # strong sense only

    def render(self, host: Word) -> str:
        return "|".join(format_word(host[s - 1 : e]) for s, e in self.blocks)


def validate_witness(host: Word, witness: DivisibilityWitness, min_power: int = 1) -> None:
    """Re-check a witness against the invariants of its sense."""
    blocks = witness.blocks
    n = len(blocks)
    if n == 0:
        raise ValueError("empty witness")
    for s, e in blocks:
        if not (1 <= s <= e <= len(host)):
            raise ValueError(f"block ({s},{e}) outside host")
    segs = [host.letters[s - 1 : e] for s, e in blocks]
    if witness.kind is Sense.TAIL:
        starts = [s for s, _ in blocks]
        if any(e != len(host) for _, e in blocks):
            raise ValueError("tail blocks must run to the end of the host")
        if any(starts[i] >= starts[i + 1] for i in range(n - 1)):
            raise ValueError("tail starts must strictly increase")
    else:
        for (s1, e1), (s2, e2) in zip(blocks, blocks[1:]):
            if s2 != e1 + 1:
                raise ValueError("blocks must be consecutive")
        if blocks[-1][1] != len(host):
            raise ValueError("blocks must tile a suffix of the host")
        if witness.kind is Sense.ORDINARY and blocks[0][0] != 1:
            raise ValueError("ordinary blocks must tile the whole host")
    for a, b in zip(segs, segs[1:]):
        if lex_compare_letters(a, b) is not Cmp.GREATER:
            raise ValueError("blocks are not strictly decreasing")
    if witness.kind is Sense.STRONG:
        periods = witness.periods
        if periods is None or len(periods) != n:
            raise ValueError("strong witness needs one period per block")
        if len({p.letters for p in periods}) != n:
            raise ValueError("strong periods must be pairwise distinct")
        for seg, z in zip(segs, periods):
            zz = z.letters * min_power
            if seg[: len(zz)] != zz:
                raise ValueError("block does not open with its period power")


def is_n_divisible(
    w: Word,
    n: int,
    sense: Sense | str = Sense.ORDINARY,
    Z: Iterable[Word] | None = None,
    d: int | None = None,
    min_power: int = 1,
) -> DivisibilityWitness | None:
    """Search for an n-division of w in the requested sense."""
    sense = Sense(sense) if not isinstance(sense, Sense) else sense
    if n < 1:
        raise ValueError("n must be positive")
    if sense is Sense.STRONG:
        if Z is None:
            raise ValueError("the strong sense needs the period set Z")
        witness = _strong_witness(w, n, tuple(Z), min_power)
    elif sense is Sense.TAIL:
        witness = _tail_witness(w, n, d)
    else:
        witness = _ordinary_witness(w, n)
    if witness is not None:
        validate_witness(w, witness, min_power)
    return witness


def _ordinary_witness(w: Word, n: int) -> DivisibilityWitness | None:
    ls = w.letters
    L = len(ls)
    if L < n:
        return None

    def extend(blocks: list[tuple[int, int]], start: int) -> list[tuple[int, int]] | None:
        depth = len(blocks)
        if depth == n:
            return blocks if start == L else None
        # leave room for the remaining blocks
        for end in range(start + 1, L - (n - depth - 1) + 1):
            if depth and lex_compare_letters(
                ls[blocks[-1][0] : blocks[-1][1]], ls[start:end]
            ) is not Cmp.GREATER:
                continue
            got = extend(blocks + [(start, end)], end)
            if got is not None:
                return got
        return None

    got = extend([], 0)
    if got is None:
        return None
    return DivisibilityWitness(Sense.ORDINARY, tuple((s + 1, e) for s, e in got))


def _tail_witness(w: Word, n: int, d: int | None) -> DivisibilityWitness | None:
    ls = w.letters
    L = len(ls)
    limit = L // d if d else L
    if limit < n:
        return None
    suffixes = [ls[i:] for i in range(limit)]
    chain: list[int] = []

    def grow(i: int) -> bool:
        chain.append(i)
        if len(chain) == n:
            return True
        for j in range(i + 1, limit):
            if lex_compare_letters(suffixes[i], suffixes[j]) is Cmp.GREATER:
                if grow(j):
                    return True
        chain.pop()
        return False

    for i0 in range(limit):
        chain.clear()
        if grow(i0):
            return DivisibilityWitness(Sense.TAIL, tuple((i + 1, L) for i in chain))
    return None


def _strong_witness(
    w: Word, n: int, Z: tuple[Word, ...], min_power: int
) -> DivisibilityWitness | None:
    ls = w.letters
    L = len(ls)
    heads = []
    for z in Z:
        if len(z) == 0:
            raise ValueError("periods in Z must be nonempty")
        heads.append(z.letters * min_power)
    if len({z.letters for z in Z}) < n:
        return None

    def search(
        blocks: list[tuple[int, int]], zs: list[int], start: int
    ) -> tuple[list[tuple[int, int]], list[int]] | None:
        depth = len(blocks)
        if depth == n:
            return (blocks, zs) if start == L else None
        for end in range(start + 1, L - (n - depth - 1) + 1):
            if depth and lex_compare_letters(
                ls[blocks[-1][0] : blocks[-1][1]], ls[start:end]
            ) is not Cmp.GREATER:
                continue
            for zi, head in enumerate(heads):
                if zi in zs or len(head) > end - start:
                    continue
                if ls[start : start + len(head)] != head:
                    continue
                got = search(blocks + [(start, end)], zs + [zi], end)
                if got is not None:
                    return got
        return None

    for w0_len in range(0, L - n + 1):
        got = search([], [], w0_len)
        if got is not None:
            blocks, zs = got
            return DivisibilityWitness(
                Sense.STRONG,
                tuple((s + 1, e) for s, e in blocks),
                tuple(Z[zi] for zi in zs),
            )
    return None


def is_nd_reducible(w: Word, n: int, d: int) -> bool:
    """Ordinary n-divisible, or containing a d-th power."""
    if n < 1 or d < 2:
        raise ValueError("need n >= 1 and d >= 2")
    if find_period_power(w, d) is not None:
        return True
    return _divisible_whole(w.letters, n)


def _divisible_whole(ls: tuple[int, ...], n: int) -> bool:
    """Partition of the whole letter tuple into n strictly decreasing blocks."""
    L = len(ls)
    if L < n:
        return False
    if n == 1:
        return True
    # last_starts[e] lists the starts s of possible last blocks ls[s:e]
    # among splits of ls[:e] into j blocks; grow j block by block.
    last_starts: dict[int, list[int]] = {e: [0] for e in range(1, L)}
    for _ in range(n - 2):
        nxt: dict[int, list[int]] = {}
        for e, starts in last_starts.items():
            for e2 in range(e + 1, L):
                for s in starts:
                    if lex_compare_letters(ls[s:e], ls[e:e2]) is Cmp.GREATER:
                        nxt.setdefault(e2, []).append(e)
                        break
        last_starts = nxt
    for e, starts in last_starts.items():
        for s in starts:
            if lex_compare_letters(ls[s:e], ls[e:]) is Cmp.GREATER:
                return True
    return False


@dataclass(frozen=True)
class OracleResult:
    n: int
    d: int
    l: int
    length: int
    witness: Word
    nodes: int


def max_nonreducible_length(
    n: int, d: int, l: int, budget: int = 2_000_000, max_len: int = 50
) -> OracleResult:
    """Exact maximum length of a word over l letters that is not (n,d)-reducible.

    Depth-first search over the word tree; reducibility is monotone
    under extension, so pruning at reducible nodes is complete.  Two
    loud guards instead of silent truncation: a node budget, and a
    length ceiling that catches configurations whose non-reducible
    language is infinite (they raise BudgetExceededError quickly).
    """
    if l < 1:
        raise ValueError("need at least one letter")
    alphabet = Alphabet(l)
    nodes = 0
    best_len = 0
    best_word: tuple[int, ...] = ()
    stack: list[tuple[tuple[int, ...], int]] = [((), 1)]
    while stack:
        ls, next_letter = stack.pop()
        if next_letter > l:
            continue
        stack.append((ls, next_letter + 1))
        cand = ls + (next_letter,)
        nodes += 1
        if nodes > budget:
            raise BudgetExceededError(
                f"oracle budget of {budget} nodes exhausted at depth {len(cand)}",
                nodes,
            )
        if _new_power_suffix(cand, d) or _divisible_whole(cand, n):
            continue
        if len(cand) > best_len:
            best_len, best_word = len(cand), cand
        if len(cand) >= max_len:
            raise BudgetExceededError(
                f"non-reducible words reach the length guard of {max_len};"
                " the language looks infinite",
                nodes,
            )
        stack.append((cand, 1))
    return OracleResult(n, d, l, best_len, Word(best_word, alphabet), nodes)


def _new_power_suffix(ls: tuple[int, ...], d: int) -> bool:
    # a d-th power created by the last letter must end at the last position
    L = len(ls)
    for zlen in range(1, L // d + 1):
        z = ls[L - zlen:]
        if ls[L - zlen * d :] == z * d:
            return True
    return False


# --- zero-one process sequences ---


@dataclass(frozen=True)
class ProcessResult:
    p: int
    k: int
    length: int
    witness: tuple[str, ...]
    states: int


def is_valid_process_sequence(seq: Sequence[str], p: int) -> bool:
    """Check the separation condition with per-position counters.

    Counter c_s counts words carrying their 1 at position s since the
    last word with a 1 strictly left of s; the condition fails exactly
    when some counter reaches p.
    """
    if not seq:
        return True
    k1 = len(seq[0])
    counts = [0] * (k1 + 1)
    for token in seq:
        if len(token) != k1 or token.count("1") != 1 or token.count("0") != k1 - 1:
            raise ValueError(f"malformed token {token!r}")
        s = token.index("1") + 1
        counts[s] += 1
        if counts[s] >= p:
            return False
        for t in range(s + 1, k1 + 1):
            counts[t] = 0
    return True


def max_process_sequence_length(p: int, k: int, budget: int = 2_000_000) -> ProcessResult:
    """Exact maximum sequence length, exhaustive over counter states."""
    if p < 2 or k < 2:
        raise ValueError("need p >= 2 and k >= 2")
    width = k - 1
    states = 0
    memo: dict[tuple[int, ...], tuple[int, int | None]] = {}

    def longest(state: tuple[int, ...]) -> tuple[int, int | None]:
        nonlocal states
        if state in memo:
            return memo[state]
        states += 1
        if states > budget:
            raise BudgetExceededError(f"process budget of {budget} states exhausted", states)
        best, move = 0, None
        for s in range(width, 0, -1):  # prefer the rightmost admissible position
            if state[s - 1] >= p - 1:
                continue
            nxt = state[: s - 1] + (state[s - 1] + 1,) + (0,) * (width - s)
            sub, _ = longest(nxt)
            if sub + 1 > best:
                best, move = sub + 1, s
        memo[state] = (best, move)
        return best, move

    start = (0,) * width
    length, _ = longest(start)
    witness = []
    state = start
    while True:
        _, move = memo[state]
        if move is None:
            break
        witness.append("0" * (move - 1) + "1" + "0" * (width - move))
        state = state[: move - 1] + (state[move - 1] + 1,) + (0,) * (width - move)
    assert len(witness) == length
    assert is_valid_process_sequence(witness, p)
    return ProcessResult(p, k, length, tuple(witness), states)


# --- Dilworth coloring of tails and snapshot stability ---


class IncomparableTailsError(ValueError):
    pass


class ChainCapExceededError(ValueError):
    pass


@dataclass(frozen=True)
class TailColoring:
    host: Word
    positions: tuple[int, ...]  # 1-based tail starts forming the colored set
    chains: tuple[tuple[int, ...], ...]  # positions per color, ascending

    def color_of(self, position: int) -> int:
        for color, chain in enumerate(self.chains, start=1):
            if position in chain:
                return color
        raise ValueError(f"position {position} is not colored")

    def snapshot(self, p: int, i: int) -> tuple[Word | Theta, ...]:
        """Per color, the p-truncated most recent tail at position <= i."""
        if i not in self.positions:
            raise ValueError(f"position {i} outside the colored range")
        out: list[Word | Theta] = []
        for chain in self.chains:
            latest = max((f for f in chain if f <= i), default=None)
            if latest is None:
                out.append(THETA)
            else:
                out.append(self.host[latest - 1 : latest - 1 + p])
        return tuple(out)


def dilworth_tail_coloring(
    w: Word, n_colors_cap: int, d: int | None = None
) -> TailColoring:
    """Minimum chain cover of the tail poset (lex order and left-to-right).

    With d given, only tails starting in the first floor(|w|/d)
    positions are colored; they must be pairwise comparable.
    """
    L = len(w)
    limit = L // d if d else L
    positions = tuple(range(1, limit + 1))
    suffixes = {i: w.letters[i - 1 :] for i in positions}
    pairs = []
    for a, b in itertools.combinations(positions, 2):
        cmp = lex_compare_letters(suffixes[a], suffixes[b])
        if cmp is Cmp.INCOMPARABLE:
            raise IncomparableTailsError(
                f"tails at positions {a} and {b} are prefix-incomparable"
            )
        if cmp is Cmp.LESS:
            pairs.append((a - 1, b - 1))
    poset = FinitePoset.from_relation(limit, pairs)
    chains = min_chain_cover(poset)
    if len(chains) > n_colors_cap:
        raise ChainCapExceededError(
            f"{len(chains)} chains exceed the cap of {n_colors_cap}"
        )
    return TailColoring(w, positions, tuple(tuple(i + 1 for i in c) for c in chains))


def snapshot_stability(tc: TailColoring, p: int) -> int:
    """Longest run of positions sharing one snapshot tuple.

    Larger p refines the snapshots, so runs can only shorten: the
    stability is nonincreasing in p.
    """
    if not tc.positions:
        return 0
    best, run = 1, 1
    prev = tc.snapshot(p, tc.positions[0])
    for i in tc.positions[1:]:
        cur = tc.snapshot(p, i)
        run = run + 1 if cur == prev else 1
        best = max(best, run)
        prev = cur
    return best


# --- periodic fragment extraction (the cut-and-recurse algorithm) ---


@dataclass(frozen=True)
class Fragment:
    period: Word
    exponent: int
    start: int  # 1-based start in the word it was cut from
    pieces: int  # maximal contiguous pieces inside the original word


@dataclass(frozen=True)
class FragmentDecomposition:
    original: Word
    power: int  # required exponent, 4n
    fragments: tuple[Fragment, ...]
    residues: tuple[Word, ...]  # word after each cut

    def piece_counts(self) -> tuple[int, ...]:
        return tuple(f.pieces for f in self.fragments)

    def tally(self, t: int) -> dict[int, int]:
        """s(k) over the first 4t fragments: how many split into k pieces."""
        if 4 * t > len(self.fragments):
            raise ValueError("not enough fragments for this t")
        out: dict[int, int] = {}
        for f in self.fragments[: 4 * t]:
            out[f.pieces] = out.get(f.pieces, 0) + 1
        return out

    def reconstruct(self) -> Word:
        """Reinsert fragments in reverse order; must reproduce the original."""
        current = list(self.residues[-1].letters) if self.fragments else list(self.original.letters)
        for frag in reversed(self.fragments):
            piece = list(frag.period.letters) * frag.exponent
            at = frag.start - 1
            current[at:at] = piece
        return Word(tuple(current), self.original.alphabet)


def extract_periodic_fragments(
    w: Word, n: int, max_steps: int | None = None
) -> FragmentDecomposition:
    """Repeatedly cut out maximal z**(4n+r1+r2) fragments until none remain."""
    if n < 2:
        raise ValueError("n must be at least 2")
    power = 4 * n
    current = list(w.letters)
    origin = list(range(len(w)))
    fragments: list[Fragment] = []
    residues: list[Word] = []
    while max_steps is None or len(fragments) < max_steps:
        hit = find_period_power(Word(tuple(current), w.alphabet), power)
        if hit is None:
            break
        z = hit.period.letters
        zlen = len(z)
        start = hit.start - 1
        end = start + zlen * power
        while start >= zlen and tuple(current[start - zlen : start]) == z:
            start -= zlen
        while end + zlen <= len(current) and tuple(current[end : end + zlen]) == z:
            end += zlen
        exponent = (end - start) // zlen
        span_origins = origin[start:end]
        pieces = 1 + sum(
            1 for a, b in zip(span_origins, span_origins[1:]) if b != a + 1
        )
        fragments.append(Fragment(hit.period, exponent, start + 1, pieces))
        del current[start:end]
        del origin[start:end]
        residues.append(Word(tuple(current), w.alphabet))
    decomposition = FragmentDecomposition(w, power, tuple(fragments), tuple(residues))
    assert decomposition.reconstruct().letters == w.letters
    return decomposition


# --- selective heights ---


def _candidate_runs(w: Word, period_len: int, boundary: int) -> list[tuple[int, int, tuple[int, ...]]]:
    """Minimal z**(boundary+1) occurrences as (start, end, class key), 0-based."""
    ls = w.letters
    t = period_len
    need = t * (boundary + 1)
    out = []
    for i in range(0, len(ls) - need + 1):
        z = ls[i : i + t]
        if not _primitive(z):
            continue
        if ls[i : i + need] == z * (boundary + 1):
            out.append((i, i + need, min(z[r:] + z[:r] for r in range(t))))
    return out


def _primitive(z: tuple[int, ...]) -> bool:
    for p in range(1, len(z)):
        if len(z) % p == 0 and z == z[:p] * (len(z) // p):
            return False
    return True


def small_selective_height(w: Word, period_len: int, boundary: int) -> int:
    """Most disjoint z**m fragments, m > boundary, with pairwise distinct
    period conjugacy classes."""
    if period_len < 1 or boundary < 1:
        raise ValueError("need period_len >= 1 and boundary >= 1")
    cands = _candidate_runs(w, period_len, boundary)
    best = 0

    def grow(idx: int, last_end: int, used: frozenset, count: int) -> None:
        nonlocal best
        best = max(best, count)
        remaining_classes = {c for _, _, c in cands[idx:] if c not in used}
        if count + len(remaining_classes) <= best:
            return
        for j in range(idx, len(cands)):
            s, e, cls = cands[j]
            if s >= last_end and cls not in used:
                grow(j + 1, e, used | {cls}, count + 1)

    grow(0, 0, frozenset(), 0)
    return best


def _maximal_runs(w: Word, period_len: int, boundary: int) -> list[tuple[int, int, tuple[int, ...]]]:
    ls = w.letters
    t = period_len
    out = []
    for i in range(0, len(ls) - t + 1):
        z = ls[i : i + t]
        if not _primitive(z):
            continue
        if i >= t and ls[i - t : i] == z:
            continue  # not maximal on the left
        m = 1
        while ls[i + m * t : i + (m + 1) * t] == z:
            m += 1
        if m > boundary:
            out.append((i, i + m * t, z))
    return out


def large_selective_height(
    w: Word, period_len: int, boundary: int, gap_len: int | None = None
) -> int:
    """Most disjoint maximal z**m fragments, m > boundary, where each
    consecutive pair is separated by a gap longer than gap_len that is
    comparable with the earlier fragment's period."""
    if gap_len is None:
        gap_len = boundary // 2
    runs = _maximal_runs(w, period_len, boundary)
    runs.sort()
    ls = w.letters
    best = 0

    def grow(idx: int, last_end: int, last_z: tuple[int, ...] | None, count: int) -> None:
        nonlocal best
        best = max(best, count)
        for j in range(idx, len(runs)):
            s, e, z = runs[j]
            if s < last_end:
                continue
            if last_z is not None:
                gap = ls[last_end:s]
                if len(gap) <= gap_len:
                    continue
                if lex_compare_letters(gap, last_z) is Cmp.INCOMPARABLE:
                    continue
            grow(j + 1, e, z, count + 1)

    grow(0, 0, None, 0)
    return best


# --- coding classes (word-cycles with the two-coordinate order) ---


@dataclass(frozen=True)
class CodingClass:
    length: int  # common cycle length t
    alphabet: Alphabet
    cycles: tuple[WordCycle, ...]

    def __post_init__(self) -> None:
        reps = set()
        for c in self.cycles:
            if len(c.representative) != self.length:
                raise ValueError("cycles must share the common length")
            if c.representative.alphabet != self.alphabet:
                raise ValueError("cycles must share the alphabet")
            if c.representative.letters in reps:
                raise ValueError("cycles must be pairwise non-conjugate")
            reps.add(c.representative.letters)

    @staticmethod
    def of(words: Sequence[Word]) -> "CodingClass":
        if not words:
            raise ValueError("use CodingClass(length, alphabet, ()) for an empty class")
        cycles = tuple(WordCycle.of(w) for w in words)
        return CodingClass(len(words[0]), words[0].alphabet, cycles)

    def word(self, i: int, j: int) -> Word:
        """The length-t word starting at the j-th position of cycle i (1-based)."""
        rep = self.cycles[i - 1].representative.letters
        return Word(rep[j - 1 :] + rep[: j - 1], self.alphabet)


def coding_poset(c: CodingClass) -> FinitePoset:
    items = [
        (i, j, c.word(i, j).letters)
        for i in range(1, len(c.cycles) + 1)
        for j in range(1, c.length + 1)
    ]
    pairs = []
    for a in range(len(items)):
        for b in range(len(items)):
            ia, _, wa = items[a]
            ib, _, wb = items[b]
            if ia < ib and wa < wb:
                pairs.append((a, b))
    return FinitePoset.from_relation(len(items), pairs)


def is_n_light(c: CodingClass, n: int) -> bool:
    """True iff the two-coordinate order on the class has no antichain of size n."""
    if n < 1:
        raise ValueError("n must be positive")
    if not c.cycles:
        return True
    return max_antichain(coding_poset(c))[0] < n


def recode_pairs(c: CodingClass) -> CodingClass:
    """Merge adjacent letter pairs (1,2),(3,4),... into product letters.

    The product alphabet has size l**2 with b(x,y) ranked by x*l + y, so
    the recoded order mirrors the original on aligned rotations.
    """
    if c.length % 2 != 0:
        raise ValueError("recoding needs an even cycle length")
    l = c.alphabet.size
    target = Alphabet(l * l)
    new_cycles = []
    for cyc in c.cycles:
        rep = cyc.representative.letters
        merged = tuple(
            (rep[i] - 1) * l + rep[i + 1] for i in range(0, len(rep), 2)
        )
        new_cycles.append(WordCycle.of(Word(merged, target)))
    return CodingClass(c.length // 2, target, tuple(new_cycles))


def pad_to_power_of_two(c: CodingClass, s: int) -> CodingClass:
    """Pad every cycle with a new minimal letter up to length 2**s."""
    size = 1 << s
    if size < c.length:
        raise ValueError(f"2**{s} is shorter than the cycle length {c.length}")
    if size == c.length:
        return c
    target = Alphabet(c.alphabet.size + 1)
    new_cycles = []
    for cyc in c.cycles:
        shifted = tuple(x + 1 for x in cyc.representative.letters)
        padded = shifted + (1,) * (size - c.length)
        new_cycles.append(WordCycle.of(Word(padded, target)))
    return CodingClass(size, target, tuple(new_cycles))


# --- heights over a base set of words ---


def word_height(w: Word, Y: Iterable[Word]) -> int | None:
    """Least r with w = y_1**k_1 ... y_r**k_r over Y, or None."""
    ys = {y.letters for y in Y if len(y) > 0}
    if not ys:
        raise ValueError("Y must contain a nonempty word")
    ls = w.letters
    L = len(ls)
    INF = L + 1
    best = [INF] * (L + 1)
    best[0] = 0
    for i in range(L):
        if best[i] >= INF:
            continue
        for y in ys:
            e = 0
            pos = i
            while ls[pos : pos + len(y)] == y:
                e += 1
                pos += len(y)
                if best[i] + 1 < best[pos]:
                    best[pos] = best[i] + 1
    return best[L] if best[L] < INF else None


def essential_height(
    w: Word, Y: Iterable[Word], pad: int, min_power: int = 2
) -> int | None:
    """Least h with w = c_0 y_1**k_1 c_1 ... y_h**k_h c_h, every k_i >=
    min_power and every |c_j| <= pad; None when no such parse exists."""
    ys = {y.letters for y in Y if len(y) > 0}
    if not ys:
        raise ValueError("Y must contain a nonempty word")
    ls = w.letters
    L = len(ls)
    INF = L + 2
    if L <= pad:
        return 0
    after_power = [INF] * (L + 1)
    for i in range(0, min(pad, L) + 1):
        _mark_powers(ls, i, ys, min_power, 1, after_power)
    changed = True
    while changed:
        changed = False
        for i in range(L + 1):
            h = after_power[i]
            if h >= INF:
                continue
            for g in range(0, pad + 1):
                start = i + g
                if start > L:
                    break
                if _mark_powers(ls, start, ys, min_power, h + 1, after_power):
                    changed = True
    candidates = [
        after_power[i] for i in range(L + 1) if L - i <= pad and after_power[i] < INF
    ]
    return min(candidates) if candidates else None


def _mark_powers(
    ls: tuple[int, ...],
    start: int,
    ys: set[tuple[int, ...]],
    min_power: int,
    level: int,
    after_power: list[int],
) -> bool:
    changed = False
    for y in ys:
        e = 0
        pos = start
        while ls[pos : pos + len(y)] == y:
            e += 1
            pos += len(y)
            if e >= min_power and level < after_power[pos]:
                after_power[pos] = level
                changed = True
    return changed


# --- explicit lower-bound construction (edge generator) ---


def lower_bound_witness_edges(n: int, l: int) -> tuple[tuple[int, int], ...]:
    """Big-step edge sequence on vertices 1..l realizing the alpha count.

    Big step i grows a clique on the vertices i + 2**(n-1) - 2**(n-1-j)
    (j = 0..n-3); increments are distinct dyadic sums, so no edge ever
    repeats, and each big step contributes (n-2)(n-3)/2 edges.
    """
    if n < 4:
        raise ValueError("the construction needs n >= 4")
    if l <= 2 ** (n - 1):
        raise ValueError("the construction needs l > 2**(n-1)")
    edges: list[tuple[int, int]] = []
    for i in range(2, l - 2 ** (n - 1) + 2):
        verts = [i + 2 ** (n - 1) - 2 ** (n - 1 - j) for j in range(0, n - 2)]
        for j in range(1, n - 2):
            for j2 in range(j):
                edges.append((verts[j2], verts[j]))
    assert all(1 <= a < b <= l for a, b in edges)
    assert len(set(edges)) == len(edges), "duplicate edge emitted"
    assert len(edges) == alpha_lower(n, l)
    return tuple(edges)


# --- corpus sweeps shared by the CLI and the acceptance suite ---


def primitive_cycle_classes(t: int, alphabet: Alphabet) -> tuple[WordCycle, ...]:
    """All conjugacy classes of primitive length-t words, canonical order."""
    seen: set[tuple[int, ...]] = set()
    out = []
    for ls in itertools.product(alphabet.letters(), repeat=t):
        w = Word(ls, alphabet)
        if not _primitive(ls):
            continue
        key = canonical_rotation(w).letters
        if key not in seen:
            seen.add(key)
            out.append(WordCycle.of(w))
    return tuple(out)


def selective_corpus_check(
    l: int, n: int, max_len: int, period_len: int, bound: int
) -> dict:
    """Scan all non-strongly-n-divisible words up to max_len over l letters
    and report the largest small selective height against the bound.

    The declared period set is every primitive word of the given length.
    """
    alphabet = Alphabet(l)
    Z = [
        Word(ls, alphabet)
        for ls in itertools.product(alphabet.letters(), repeat=period_len)
        if _primitive(ls)
    ]
    boundary = 2 * n
    scanned = 0
    excluded = 0
    worst = 0
    min_span = n * period_len
    for length in range(1, max_len + 1):
        for ls in itertools.product(alphabet.letters(), repeat=length):
            w = Word(ls, alphabet)
            if (
                length >= min_span
                and len(Z) >= n
                and is_n_divisible(w, n, Sense.STRONG, Z=Z) is not None
            ):
                excluded += 1
                continue
            scanned += 1
            worst = max(worst, small_selective_height(w, period_len, boundary))
    return {
        "l": l,
        "n": n,
        "max_len": max_len,
        "period_len": period_len,
        "boundary": boundary,
        "scanned": scanned,
        "excluded": excluded,
        "max_height": worst,
        "bound": bound,
        "ok": worst <= bound,
    }


def coding_corpus_check(t_max: int, l: int, n_max: int) -> dict:
    """Brute-force the recoding and padding lemmas over every ordered class
    with cycle length <= t_max over l letters, both directions."""
    alphabet = Alphabet(l)
    recode_checked = recode_light = 0
    pad_checked = pad_light = 0
    ok = True

    def classes(t: int):
        cycles = primitive_cycle_classes(t, alphabet)
        for r in range(1, len(cycles) + 1):
            for combo in itertools.permutations(cycles, r):
                yield CodingClass(t, alphabet, tuple(combo))

    for t in range(1, t_max + 1):
        for c in classes(t):
            for n in range(2, n_max + 1):
                light = is_n_light(c, n)
                if t % 2 == 0:
                    recoded = recode_pairs(c)
                    recode_checked += 1
                    if light:
                        recode_light += 1
                        ok = ok and is_n_light(recoded, n)
                    if not is_n_light(recoded, n):
                        ok = ok and not light
                s = 0
                while (1 << s) < t:
                    s += 1
                padded = pad_to_power_of_two(c, s)
                pad_checked += 1
                m = (1 << s) * (n - 1) + 1
                if light:
                    pad_light += 1
                    ok = ok and is_n_light(padded, m)
                if not is_n_light(padded, m):
                    ok = ok and not light
    return {
        "t_max": t_max,
        "l": l,
        "n_max": n_max,
        "recode_checked": recode_checked,
        "recode_light_cases": recode_light,
        "pad_checked": pad_checked,
        "pad_light_cases": pad_light,
        "ok": ok,
    }
