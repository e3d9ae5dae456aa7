import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from superstring import (
    EmptyInstanceError,
    Instance,
    InvalidInputError,
    count_occurrences,
    merge,
    normalize,
    parse_instance_text,
    serialize_instance_text,
    split,
    superstring_of_permutation,
)
from superstring.strings import parse_instance_lines

from conftest import brute_overlap

words = st.text(alphabet="abc", min_size=1, max_size=12)
short_words = st.text(alphabet="ab", min_size=1, max_size=8)


class TestSplit:
    def test_figure_pair(self):
        sp = split("baacabbcaacb", "bcaacbacaaabca")
        assert (sp.pref, sp.ov, sp.suff) == ("baacab", "bcaacb", "acaaabca")
        assert sp.distance == 6

    def test_no_proper_border(self):
        sp = split("abc", "abc")
        assert sp.ov == "" and sp.pref == "abc" and sp.suff == "abc"

    def test_basic(self):
        sp = split("aab", "aba")
        assert (sp.pref, sp.ov, sp.suff) == ("a", "ab", "a")

    def test_self_split_border(self):
        assert split("aab", "aab").ov == ""
        assert split("aba", "aba").ov == "a"

    def test_empty_rejected(self):
        with pytest.raises(InvalidInputError):
            split("", "a")
        with pytest.raises(InvalidInputError):
            split("a", "")

    @given(words, words)
    def test_maximality_matches_brute_force(self, s, t):
        sp = split(s, t)
        assert sp.ov == brute_overlap(s, t)
        assert sp.pref + sp.ov == s
        assert sp.ov + sp.suff == t
        assert sp.pref and sp.suff

    @given(words, words, words)
    def test_distance_triangle(self, u, v, w):
        assert split(u, w).distance <= split(u, v).distance + split(v, w).distance

    @given(words, words, words, words)
    def test_monge_on_lengths(self, s, t, s2, t2):
        ov = lambda a, b: len(split(a, b).ov)
        if ov(s, t) >= max(ov(s, t2), ov(s2, t)):
            assert ov(s, t) + ov(s2, t2) >= ov(s, t2) + ov(s2, t)

    @given(words, words, words, words, st.sampled_from("abc"))
    def test_per_symbol_monge_length_premise(self, s, t, s2, t2, sym):
        ov = lambda a, b: split(a, b).ov
        if len(ov(s, t)) >= max(len(ov(s, t2)), len(ov(s2, t))):
            assert ov(s, t).count(sym) + ov(s2, t2).count(sym) >= ov(s, t2).count(
                sym
            ) + ov(s2, t).count(sym)


class TestMerge:
    def test_examples(self):
        assert merge("aab", "aba") == "aaba"
        assert merge("abc", "xyz") == "abcxyz"
        assert len(merge("baacabbcaacb", "bcaacbacaaabca")) == 20

    @given(words, words)
    def test_merge_length_identity(self, s, t):
        m = merge(s, t)
        assert len(m) == len(s) + len(t) - len(split(s, t).ov)
        assert m.startswith(s) and m.endswith(t)


class TestCounting:
    def test_paper_counts(self):
        assert count_occurrences("baabaabaaabaaaab", "b") == 5
        assert count_occurrences("aaaabaabaaaa", "b") == 2
        assert count_occurrences("aaaa", "b") == 0

    def test_single_symbol_only(self):
        with pytest.raises(InvalidInputError):
            count_occurrences("ab", "ab")

    @given(words, words, st.sampled_from("abc"))
    def test_additive_across_split_boundary(self, s, t, sym):
        sp = split(s, t)
        assert count_occurrences(s, sym) == count_occurrences(
            sp.pref, sym
        ) + count_occurrences(sp.ov, sym)


class TestNormalize:
    def test_containment_removed(self):
        assert normalize(["ab", "abc", "b"]).strings == ("abc",)

    def test_substring_free_unchanged(self):
        assert normalize(["abbb", "bbbb", "bbbc"]).strings == ("abbb", "bbbb", "bbbc")

    def test_dedup(self):
        assert normalize(["aa", "aa", "ab"]).strings == ("aa", "ab")

    def test_errors(self):
        with pytest.raises(InvalidInputError):
            normalize(["", "a"])
        with pytest.raises(EmptyInstanceError):
            normalize([])

    def test_sentinel_rejected_without_flag(self):
        with pytest.raises(InvalidInputError):
            normalize(["a$b"])
        assert normalize(["a$b"], allow_sentinel=True).strings == ("a$b",)

    def test_instance_invariants(self):
        with pytest.raises(InvalidInputError):
            Instance(("ab", "abc"))
        with pytest.raises(InvalidInputError):
            Instance(("ab", "ab"))

    @given(st.lists(short_words, min_size=1, max_size=6))
    def test_result_substring_free(self, raw):
        inst = normalize(raw)
        for i, s in enumerate(inst.strings):
            for j, t in enumerate(inst.strings):
                assert i == j or s not in t


class TestSuperstringOfPermutation:
    def test_figure_instance(self, fig2):
        order = [fig2.strings.index(x) for x in ("DAB", "ABE", "ECA", "ACB", "CBD", "DFA")]
        s = superstring_of_permutation(fig2, order)
        assert s == "DABECACBDFA" and len(s) == 11

    def test_singleton(self):
        inst = Instance(("abc",))
        assert superstring_of_permutation(inst, (0,)) == "abc"

    def test_fold(self, tiny):
        assert superstring_of_permutation(tiny, (0, 1, 2)) == "abbbbc"

    def test_bad_perm(self, tiny):
        with pytest.raises(InvalidInputError):
            superstring_of_permutation(tiny, (0, 1, 1))

    @given(st.lists(short_words, min_size=1, max_size=5), st.randoms())
    def test_contains_all_inputs_and_length_identity(self, raw, rnd):
        inst = normalize(raw)
        perm = list(range(inst.n))
        rnd.shuffle(perm)
        s = superstring_of_permutation(inst, perm)
        assert all(x in s for x in inst.strings)
        overlaps = sum(
            len(split(inst.strings[a], inst.strings[b]).ov)
            for a, b in zip(perm, perm[1:])
        )
        assert len(s) == inst.total_length() - overlaps


class TestTextFormat:
    def test_parse_with_comments(self):
        inst = parse_instance_text("# header\n\nabc\n  \nxy\n")
        assert inst.strings == ("abc", "xy")

    def test_round_trip(self, fig2):
        assert parse_instance_text(serialize_instance_text(fig2)) == fig2

    def test_parse_empty(self):
        with pytest.raises(EmptyInstanceError):
            parse_instance_lines("# nothing\n\n")

    def test_hash_start_not_serializable(self):
        inst = Instance(("#a",))
        with pytest.raises(InvalidInputError):
            serialize_instance_text(inst)

    @given(st.lists(short_words, min_size=1, max_size=5))
    def test_round_trip_random(self, raw):
        inst = normalize(raw)
        assert parse_instance_text(serialize_instance_text(inst)) == inst
