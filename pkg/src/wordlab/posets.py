"""Finite posets, Dilworth machinery, and permutation-ordered posets.

Relations are kept as strict-order bitmasks: bit j of `above[i]` says
i < j.  Chain covers come from a maximum bipartite matching on the
split graph; maximum antichains from the matching's vertex cover, so
the Dilworth equality |min chain cover| = |max antichain| is asserted
on every call.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Sequence


@dataclass(frozen=True)
class FinitePoset:
    size: int
    above: tuple[int, ...]  # bit j of above[i] set iff i < j (strict)

    def __post_init__(self) -> None:
        n, rel = self.size, self.above
        if len(rel) != n:
            raise ValueError("relation size mismatch")
        for i in range(n):
            if rel[i] >> n:
                raise ValueError("relation bits outside range")
            if rel[i] & (1 << i):
                raise ValueError("relation not irreflexive")
        for i in range(n):
            for j in range(n):
                if rel[i] & (1 << j):
                    if rel[j] & (1 << i):
                        raise ValueError("relation not antisymmetric")
                    if rel[j] & ~rel[i]:
                        raise ValueError("relation not transitive")

    def less(self, i: int, j: int) -> bool:
        return bool(self.above[i] & (1 << j))

    def comparable(self, i: int, j: int) -> bool:
        return i != j and (self.less(i, j) or self.less(j, i))

    @staticmethod
    def from_relation(n: int, pairs: Iterable[tuple[int, int]]) -> "FinitePoset":
        """Build from strict relations i < j (0-based), transitively closed."""
        rel = [0] * n
        for i, j in pairs:
            rel[i] |= 1 << j
        changed = True
        while changed:
            changed = False
            for i in range(n):
                extra = 0
                m = rel[i]
                while m:
                    j = (m & -m).bit_length() - 1
                    m &= m - 1
                    extra |= rel[j]
                if extra & ~rel[i]:
                    rel[i] |= extra
                    changed = True
        return FinitePoset(n, tuple(rel))

    def covering_pairs(self) -> tuple[tuple[int, int], ...]:
        out = []
        for i in range(self.size):
            for j in range(self.size):
                if not self.less(i, j):
                    continue
                if any(self.less(i, k) and self.less(k, j) for k in range(self.size)):
                    continue
                out.append((i, j))
        return tuple(out)


def parse_poset(text: str) -> FinitePoset:
    """Exchange format: first line n, then one covering pair 'i j' per line (1-based)."""
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise ValueError("empty poset text")
    n = int(lines[0])
    pairs = []
    for ln in lines[1:]:
        a, b = ln.split()
        pairs.append((int(a) - 1, int(b) - 1))
    return FinitePoset.from_relation(n, pairs)


def format_poset(p: FinitePoset) -> str:
    lines = [str(p.size)]
    lines += [f"{i + 1} {j + 1}" for i, j in p.covering_pairs()]
    return "\n".join(lines) + "\n"


def _max_matching(p: FinitePoset) -> tuple[int, list[int]]:
    """Kuhn's algorithm on the split graph; deterministic by index order."""
    n = p.size
    match_right = [-1] * n  # right j -> left i

    def augment(i: int, seen: list[bool]) -> bool:
        for j in range(n):
            if p.less(i, j) and not seen[j]:
                seen[j] = True
                if match_right[j] < 0 or augment(match_right[j], seen):
                    match_right[j] = i
                    return True
        return False

    size = 0
    for i in range(n):
        if augment(i, [False] * n):
            size += 1
    return size, match_right


def min_chain_cover(p: FinitePoset) -> tuple[tuple[int, ...], ...]:
    """Partition into the minimum number of chains (Dilworth)."""
    size, match_right = _max_matching(p)
    succ = {match_right[j]: j for j in range(p.size) if match_right[j] >= 0}
    has_pred = set(succ.values())
    chains = []
    for start in range(p.size):
        if start in has_pred:
            continue
        chain = [start]
        while chain[-1] in succ:
            chain.append(succ[chain[-1]])
        chains.append(tuple(chain))
    assert len(chains) == p.size - size
    anti, _ = max_antichain(p)
    assert len(chains) == anti, "Dilworth equality violated"
    return tuple(chains)


def max_antichain(p: FinitePoset) -> tuple[int, frozenset[int]]:
    """Maximum antichain size with a witness, via the matching's vertex cover."""
    n = p.size
    size, match_right = _max_matching(p)
    match_left = [-1] * n
    for j in range(n):
        if match_right[j] >= 0:
            match_left[match_right[j]] = j
    # Alternating reachability from unmatched left vertices.
    seen_left = [False] * n
    seen_right = [False] * n
    stack = [i for i in range(n) if match_left[i] < 0]
    for i in stack:
        seen_left[i] = True
    while stack:
        i = stack.pop()
        for j in range(n):
            if p.less(i, j) and not seen_right[j]:
                seen_right[j] = True
                k = match_right[j]
                if k >= 0 and not seen_left[k]:
                    seen_left[k] = True
                    stack.append(k)
    # Cover = unreached left + reached right; antichain = fully uncovered elements.
    witness = frozenset(
        x for x in range(n) if seen_left[x] and not seen_right[x]
    )
    assert len(witness) == n - size
    for a, b in itertools.combinations(sorted(witness), 2):
        assert not p.comparable(a, b)
    return n - size, witness


def max_antichain_bruteforce(p: FinitePoset) -> int:
    """Independent oracle: grow antichains element by element."""
    n = p.size
    incomp = [0] * n
    for i in range(n):
        for j in range(n):
            if i != j and not p.comparable(i, j):
                incomp[i] |= 1 << j
    best = 0

    def grow(start: int, chosen: int, count: int, allowed: int) -> None:
        nonlocal best
        best = max(best, count)
        m = allowed & ~((1 << start) - 1)
        while m:
            j = (m & -m).bit_length() - 1
            m &= m - 1
            grow(j + 1, chosen | (1 << j), count + 1, allowed & incomp[j])
        return

    grow(0, 0, 0, (1 << n) - 1)
    return best


def permutation_poset(pi: Sequence[int]) -> FinitePoset:
    """Intersection of the natural order with the order induced by pi (1-based values)."""
    n = len(pi)
    if sorted(pi) != list(range(1, n + 1)):
        raise ValueError("not a permutation of 1..n")
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n) if pi[i] < pi[j]]
    return FinitePoset.from_relation(n, pairs)


def canonical_key(p: FinitePoset) -> tuple[int, ...]:
    """Isomorphism-invariant canonical form.

    Elements are profiled by (down-set size, up-set size); the key is
    the minimum relabeled relation over all profile-respecting
    bijections.
    """
    n = p.size
    up = [bin(p.above[i]).count("1") for i in range(n)]
    down = [sum(1 for j in range(n) if p.less(j, i)) for i in range(n)]
    profile = [(down[i], up[i]) for i in range(n)]
    groups: dict[tuple[int, int], list[int]] = {}
    for i, prof in enumerate(profile):
        groups.setdefault(prof, []).append(i)
    slots: dict[tuple[int, int], list[int]] = {}
    offset = 0
    for prof in sorted(groups):
        slots[prof] = list(range(offset, offset + len(groups[prof])))
        offset += len(groups[prof])
    best: tuple[int, ...] | None = None
    group_keys = sorted(groups)
    for assignment in itertools.product(
        *(itertools.permutations(slots[prof]) for prof in group_keys)
    ):
        relabel = [0] * n
        for prof, slot_perm in zip(group_keys, assignment):
            for elem, slot in zip(groups[prof], slot_perm):
                relabel[elem] = slot
        rel = [0] * n
        for i in range(n):
            m = p.above[i]
            while m:
                j = (m & -m).bit_length() - 1
                m &= m - 1
                rel[relabel[i]] |= 1 << relabel[j]
        key = tuple(rel)
        if best is None or key < best:
            best = key
    assert best is not None
    return best


def epsilon_table(n: int) -> dict[int, int]:
    """epsilon_k(n): isomorphism classes of permutation posets by max antichain k."""
    if n > 7:
        raise ValueError("epsilon enumeration capped at n = 7")
    seen: dict[tuple[int, ...], int] = {}
    for pi in itertools.permutations(range(1, n + 1)):
        p = permutation_poset(pi)
        key = canonical_key(p)
        if key not in seen:
            seen[key] = max_antichain(p)[0]
    table = {k: 0 for k in range(1, n + 1)}
    for anti in seen.values():
        table[anti] += 1
    return table


def count_permutation_posets(n: int, k: int) -> int:
    return epsilon_table(n).get(k, 0)


def epsilon_bound(n: int, k: int) -> int:
    """min(k**2n/(k!)**2, (n-k+1)**2n/((n-k)!)**2), floored to an integer."""
    import math

    a = k ** (2 * n) // math.factorial(k) ** 2
    b = (n - k + 1) ** (2 * n) // math.factorial(n - k) ** 2
    return min(a, b)


# The 15-point remark poset: three disjoint chains of sizes 3, 5 and 7.
_CHAINS = (tuple(range(0, 3)), tuple(range(3, 8)), tuple(range(8, 15)))


def _linear_order(chain_order: tuple[int, int, int]) -> tuple[int, ...]:
    """A linear order on 15 points listing elements from top to bottom."""
    seq: list[int] = []
    for c in chain_order:
        seq.extend(_CHAINS[c])
    return tuple(seq)


def _intersection_poset(order_a: tuple[int, ...], order_b: tuple[int, ...]) -> FinitePoset:
    n = len(order_a)
    pos_a = {x: i for i, x in enumerate(order_a)}
    pos_b = {x: i for i, x in enumerate(order_b)}
    pairs = [
        (j, i)
        for i in range(n)
        for j in range(n)
        if i != j and pos_a[i] < pos_a[j] and pos_b[i] < pos_b[j]
    ]  # earlier in the listing = greater; store strict 'less' pairs
    return FinitePoset.from_relation(n, pairs)


@dataclass(frozen=True)
class TwoPairsDemo:
    poset: FinitePoset
    pair_one: tuple[tuple[int, ...], tuple[int, ...]]
    pair_two: tuple[tuple[int, ...], tuple[int, ...]]


def non_injectivity_demo() -> TwoPairsDemo:
    """Two non-isomorphic pairs of linear orders with one common intersection.

    The intersection is the disjoint union of chains of sizes 3, 5, 7;
    pair one stacks the chains as 1-2-3 and 3-2-1, pair two as 2-1-3
    and 3-1-2.  Distinct chain sizes force any pair isomorphism to fix
    every point, so the pairs cannot be isomorphic.
    """
    pair_one = (_linear_order((0, 1, 2)), _linear_order((2, 1, 0)))
    pair_two = (_linear_order((1, 0, 2)), _linear_order((2, 0, 1)))
    poset = _intersection_poset(*pair_one)
    assert _intersection_poset(*pair_two).above == poset.above
    assert not pairs_isomorphic(pair_one, pair_two)
    return TwoPairsDemo(poset, pair_one, pair_two)


def pairs_isomorphic(
    pair_a: tuple[tuple[int, ...], tuple[int, ...]],
    pair_b: tuple[tuple[int, ...], tuple[int, ...]],
) -> bool:
    """Pair isomorphism for pairs of linear orders.

    A bijection carrying one linear order onto another is determined by
    matching the listings position by position, so only two candidate
    maps exist (order-preserving and order-swapping).
    """
    a1, a2 = pair_a
    for b1, b2 in (pair_b, pair_b[::-1]):
        phi = {x: y for x, y in zip(a1, b1)}
        if tuple(phi[x] for x in a2) == b2:
            return True
    return False
