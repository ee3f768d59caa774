import itertools

import pytest
from hypothesis import given, strategies as st

from wordlab.words import (
    Alphabet,
    Cmp,
    Leaf,
    Pair,
    Word,
    all_words,
    canonical_rotation,
    conjugate_classes,
    find_period_power,
    format_word,
    is_primitive,
    is_regular,
    k_tail,
    lex_compare,
    lex_compare_letters,
    parse_word,
    pattern_occurs,
    shirshov_bracketing,
    strongly_comparable,
    subword_count_period,
    tails,
    word,
    zimin_word,
)

A2 = Alphabet(2)
A3 = Alphabet(3)


def letters_strategy(max_l=3, max_len=8):
    return st.integers(2, max_l).flatmap(
        lambda l: st.tuples(
            st.just(l), st.lists(st.integers(1, l), min_size=0, max_size=max_len)
        )
    )


class TestLexCompare:
    def test_prefix_of_self_is_incomparable(self):
        assert lex_compare(word("ab"), word("ab")) is Cmp.INCOMPARABLE

    def test_proper_prefix_is_incomparable(self):
        assert lex_compare(word("ab", A3), word("aba", A3)) is Cmp.INCOMPARABLE

    def test_first_letter_decides(self):
        assert lex_compare(word("ba"), word("ab")) is Cmp.GREATER

    def test_alphabet_mismatch(self):
        with pytest.raises(ValueError):
            lex_compare(word("ab", A2), word("ab", A3))

    @given(letters_strategy(), letters_strategy())
    def test_trichotomy(self, uv, wv):
        l = max(uv[0], wv[0])
        u = Word(tuple(uv[1]), Alphabet(l))
        v = Word(tuple(wv[1]), Alphabet(l))
        cmp = lex_compare(u, v)
        prefix_pair = u.letters[: len(v)] == v.letters or v.letters[: len(u)] == u.letters
        assert (cmp is Cmp.INCOMPARABLE) == prefix_pair
        if cmp is Cmp.GREATER:
            assert lex_compare(v, u) is Cmp.LESS

    @given(st.lists(st.integers(1, 3), min_size=1, max_size=7), st.lists(st.integers(1, 3), min_size=1, max_size=7))
    def test_equal_length_distinct_always_comparable(self, a, b):
        if len(a) == len(b) and a != b:
            assert lex_compare_letters(tuple(a), tuple(b)) is not Cmp.INCOMPARABLE


class TestTails:
    def test_all_suffixes(self):
        assert [format_word(t) for t in tails(word("abc"))] == ["abc", "bc", "c"]

    def test_k_tail_truncates(self):
        assert format_word(k_tail(word("abc"), 1, 2)) == "ab"

    def test_k_tail_short_tail_returned_whole(self):
        assert format_word(k_tail(word("abc"), 3, 5)) == "c"


class TestPeriodPower:
    def test_shortest_then_leftmost(self):
        occ = find_period_power(word("ababab"), 3)
        assert (format_word(occ.period), occ.start) == ("ab", 1)

    def test_absent(self):
        assert find_period_power(word("abc"), 2) is None

    def test_single_letter_wins(self):
        occ = find_period_power(word("aabaab"), 2)
        assert (format_word(occ.period), occ.start) == ("a", 1)

    def test_root_is_primitive(self):
        occ = find_period_power(word("abababab"), 2)
        assert is_primitive(occ.period)


class TestFactorCountPeriod:
    def test_few_factors_forces_period(self):
        assert subword_count_period(word("ababab"), 2, 3) is True

    def test_many_factors(self):
        assert subword_count_period(word("abcabc", A3), 2, 3) is False

    def test_single_factor(self):
        assert subword_count_period(word("aaaa"), 2, 2) is True

    def test_length_mismatch(self):
        with pytest.raises(ValueError):
            subword_count_period(word("abc"), 2, 2)

    @pytest.mark.parametrize("k,t", [(k, t) for k in range(1, 5) for t in range(1, 5)])
    def test_exhaustive_consequence(self, k, t):
        # every word with at most k distinct k-factors contains z**t, |z| <= k;
        # enumeration prunes as soon as the factor count exceeds k
        for l in (2, 3):
            alphabet = Alphabet(l)
            stack = [()]
            while stack:
                ls = stack.pop()
                if len(ls) == k * t:
                    subword_count_period(Word(ls, alphabet), k, t)  # internal assert
                    continue
                for x in range(1, l + 1):
                    cand = ls + (x,)
                    factors = {cand[i : i + k] for i in range(len(cand) - k + 1)}
                    if len(factors) <= k:
                        stack.append(cand)


class TestPrimitivity:
    @pytest.mark.parametrize(
        "text,expected", [("abab", False), ("aba", True), ("aabaab", False), ("a", True)]
    )
    def test_examples(self, text, expected):
        assert is_primitive(word(text)) is expected

    def test_empty_rejected(self):
        with pytest.raises(ValueError):
            is_primitive(Word((), A2))


class TestStrongComparability:
    def test_distinct_letters(self):
        assert strongly_comparable(word("ab", A3), word("ac", A3)) is True

    def test_rotation_equality_fails(self):
        assert strongly_comparable(word("ab"), word("ba")) is False

    def test_prefix_pair_fails(self):
        assert strongly_comparable(word("a", A2), word("ab", A2)) is False

    def test_equals_nonconjugacy_for_primitive_equal_length(self):
        for length in (2, 3, 4):
            prim = [w for w in all_words(A2, length) if is_primitive(w)]
            for u, v in itertools.product(prim, prim):
                conj = canonical_rotation(u) == canonical_rotation(v)
                assert strongly_comparable(u, v) == (not conj)


class TestConjugateClasses:
    def test_rotations_merge(self):
        classes = conjugate_classes([word("ab"), word("ba")])
        assert len(classes) == 1
        assert format_word(classes[0][0].representative) == "ab"

    def test_distinct_classes(self):
        assert len(conjugate_classes([word("ab", A3), word("ac", A3)])) == 2

    def test_three_rotations(self):
        assert len(conjugate_classes([word("abc"), word("bca"), word("cab")])) == 1

    def test_non_primitive_rejected(self):
        with pytest.raises(ValueError):
            conjugate_classes([word("abab")])


def _brute_force_bracketings(ls):
    if len(ls) == 1:
        yield Leaf(ls[0])
        return
    for cut in range(1, len(ls)):
        for left in _brute_force_bracketings(ls[:cut]):
            for right in _brute_force_bracketings(ls[cut:]):
                yield Pair(left, right)


def _le_anti_lyndon(a, b):
    # total order of the greater-than-rotations convention: a proper prefix
    # is the larger word
    cmp = lex_compare_letters(a, b)
    if cmp is Cmp.LESS:
        return True
    if cmp is Cmp.GREATER:
        return False
    return len(a) >= len(b)


def _regular_letters(ls):
    return all(ls[i:] + ls[:i] < ls for i in range(1, len(ls)))


def _regular_nonassoc(tree):
    if isinstance(tree, Leaf):
        return True
    if not _regular_letters(tree.frontier()):
        return False
    if not (_regular_nonassoc(tree.left) and _regular_nonassoc(tree.right)):
        return False
    if isinstance(tree.left, Pair):
        return _le_anti_lyndon(tree.left.right.frontier(), tree.right.frontier())
    return True


class TestRegularAndBracketing:
    @pytest.mark.parametrize("text,expected", [("ba", True), ("ab", False), ("aa", False)])
    def test_is_regular(self, text, expected):
        assert is_regular(word(text)) is expected

    def test_bracketing_examples(self):
        assert str(shirshov_bracketing(word("ba"))) == "[[b][a]]"
        assert str(shirshov_bracketing(word("b", A2))) == "[b]"
        assert str(shirshov_bracketing(word("bba"))) == "[[b][[b][a]]]"

    def test_non_regular_rejected(self):
        with pytest.raises(ValueError):
            shirshov_bracketing(word("ab"))

    @pytest.mark.parametrize("l", [2, 3])
    def test_unique_against_brute_force(self, l):
        alphabet = Alphabet(l)
        for n in range(1, 8):
            for ls in itertools.product(range(1, l + 1), repeat=n):
                if not _regular_letters(ls):
                    continue
                valid = [
                    b for b in _brute_force_bracketings(ls) if _regular_nonassoc(b)
                ]
                assert len(valid) == 1
                assert shirshov_bracketing(Word(ls, alphabet)).tree == valid[0]


# Avoidability of every pattern on <= 3 letters up to length 4, decided by
# occurrence inside the nesting words; squares and their extensions are the
# avoidable ones.
PATTERN_TABLE = {
    "x": True,
    "xx": False,
    "xy": True,
    "xxx": False,
    "xxy": False,
    "xyx": True,
    "xyy": False,
    "xyz": True,
    "xxxx": False,
    "xxxy": False,
    "xxyx": False,
    "xxyy": False,
    "xxyz": False,
    "xyxx": False,
    "xyxy": False,
    "xyxz": True,
    "xyyx": False,
    "xyyy": False,
    "xyyz": False,
    "xyzx": True,
    "xyzy": True,
    "xyzz": False,
}


class TestZiminAndPatterns:
    def test_recursion(self):
        assert format_word(zimin_word(1)) == "a"
        assert format_word(zimin_word(2)) == "aba"
        z3 = zimin_word(3)
        assert format_word(z3) == "abacaba" and len(z3) == 2**3 - 1

    def test_alphabet_too_small(self):
        with pytest.raises(ValueError):
            zimin_word(3, Alphabet(2))

    def test_pattern_examples(self):
        assert pattern_occurs(word("aa", Alphabet(1)), word("abab")) is True
        assert pattern_occurs(word("aa", Alphabet(1)), word("abc")) is False
        assert pattern_occurs(word("aba", A2), zimin_word(2)) is True

    @pytest.mark.parametrize("name,unavoidable", sorted(PATTERN_TABLE.items()))
    def test_occurrence_in_nesting_word(self, name, unavoidable):
        letters = tuple("xyz".index(ch) + 1 for ch in name)
        n = max(letters)
        pattern = Word(letters, Alphabet(n))
        assert pattern_occurs(pattern, zimin_word(n)) is unavoidable


class TestTextFormat:
    @given(letters_strategy(max_l=3, max_len=9))
    def test_round_trip_letters(self, lv):
        w = Word(tuple(lv[1]), Alphabet(lv[0]))
        assert parse_word(format_word(w), w.alphabet) == w

    def test_integer_format(self):
        a30 = Alphabet(30)
        w = Word((1, 27, 5), a30)
        assert format_word(w) == "i:1,27,5"
        assert parse_word("i:1,27,5", a30) == w


class TestTailComparability:
    @pytest.mark.parametrize("l,d", [(2, 2), (2, 3), (3, 2), (3, 3)])
    def test_power_free_words_have_comparable_tails(self, l, d):
        # words without z**d: the first floor(|w|/d) tails must be pairwise
        # comparable; enumeration prunes at the first power suffix
        alphabet = Alphabet(l)
        max_len = 12
        stack = [(x,) for x in range(1, l + 1)]
        while stack:
            ls = stack.pop()
            limit = len(ls) // d
            suffixes = [ls[i:] for i in range(limit)]
            for a, b in itertools.combinations(suffixes, 2):
                assert lex_compare_letters(a, b) is not Cmp.INCOMPARABLE, (ls, d)
            if len(ls) == max_len:
                continue
            for x in range(1, l + 1):
                cand = ls + (x,)
                if not _power_suffix(cand, d):
                    stack.append(cand)


def _power_suffix(ls, d):
    n = len(ls)
    for zlen in range(1, n // d + 1):
        if ls[n - zlen * d :] == ls[n - zlen :] * d:
            return True
    return False
