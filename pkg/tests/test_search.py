import io
import json
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from superstring import (
    Instance,
    SearchSpace,
    gen_family,
    normalize,
    random_instance,
    verify_bound,
    worst_ratio,
)
from superstring.search import instance_worst, reachable_outcomes
from superstring.solvers import (
    ALGO_GREEDY,
    ALGO_LOCALLY_GREEDY,
    enumerate_instantiations,
    exact_scs,
    exact_sigma,
)

from conftest import brute_exact_scs_length


class TestSearchSpace:
    def test_exhaustive_universe_order(self):
        space = SearchSpace.exhaustive(2, 2, 2)
        assert space.universe() == ["a", "b", "aa", "ab", "ba", "bb"]

    def test_exhaustive_instances_unique_and_substring_free(self):
        space = SearchSpace.exhaustive(2, 3, 3)
        insts = space.instances()
        assert len({tuple(i.strings) for i in insts}) == len(insts)
        for inst in insts:
            assert inst.n <= 3
            for i, s in enumerate(inst.strings):
                for j, t in enumerate(inst.strings):
                    assert i == j or s not in t

    def test_random_mode_deterministic(self):
        a = SearchSpace.random(2, 3, 3, seed=5, samples=10).instances()
        b = SearchSpace.random(2, 3, 3, seed=5, samples=10).instances()
        assert a == b

    def test_explicit(self, uniform25):
        space = SearchSpace.of_instances([uniform25])
        assert space.instances() == [uniform25]


class TestReachableOutcomes:
    @given(st.integers(0, 200))
    @settings(max_examples=50)
    def test_matches_full_enumeration(self, seed):
        inst = random_instance(seed, count=2 + seed % 4, max_len=4, alphabet_size=2)
        for algo in (ALGO_GREEDY, ALGO_LOCALLY_GREEDY):
            collapsed = reachable_outcomes(inst, algo)
            full = enumerate_instantiations(inst, algo)
            assert full.complete
            expected = {
                (s.length, tuple(s.per_symbol[c] for c in inst.alphabet))
                for s in full.solutions
            }
            assert collapsed == expected


class TestWorstRatio:
    def test_uniform25_exact_ratio(self, uniform25):
        report = worst_ratio(SearchSpace.of_instances([uniform25]), ALGO_GREEDY, "uniform")
        assert report.best_ratio == Fraction(5, 2)
        assert report.symbol == "b"
        assert report.algorithm_value == 5 and report.optimum == 2
        assert report.witness_solution.per_symbol["b"] == 5

    def test_lga3_n50_length_ratio(self):
        inst = gen_family("lga3", 50)
        report = worst_ratio(SearchSpace.of_instances([inst]), ALGO_LOCALLY_GREEDY, "length")
        assert report.best_ratio == Fraction(154, 54)
        assert report.best_ratio > Fraction(285, 100)

    def test_exhaustive_alphabet2_len3(self):
        report = worst_ratio(SearchSpace.exhaustive(2, 3, 3), ALGO_GREEDY, "length")
        assert report.best_ratio == Fraction(7, 5)
        # the witness re-verifies: its worst instantiation and the exact
        # optimum reproduce the ratio
        inst = report.witness_instance
        lengths = [s.length for s in enumerate_instantiations(inst, ALGO_GREEDY).solutions]
        assert Fraction(max(lengths), exact_scs(inst).length) == Fraction(7, 5)
        assert report.witness_solution.length == max(lengths)
        assert report.exhausted

    def test_parallel_matches_sequential(self):
        space = SearchSpace.exhaustive(2, 3, 3)
        seq = worst_ratio(space, ALGO_GREEDY, "length", jobs=1)
        par = worst_ratio(space, ALGO_GREEDY, "length", jobs=2)
        assert seq.best_ratio == par.best_ratio
        assert seq.witness_instance == par.witness_instance
        assert seq.to_json() == par.to_json()

    def test_monotone_in_caps(self):
        small = worst_ratio(SearchSpace.exhaustive(2, 2, 2), ALGO_GREEDY, "length")
        wider = worst_ratio(SearchSpace.exhaustive(2, 3, 2), ALGO_GREEDY, "length")
        longer = worst_ratio(SearchSpace.exhaustive(2, 2, 3), ALGO_GREEDY, "length")
        assert wider.best_ratio >= small.best_ratio
        assert longer.best_ratio >= small.best_ratio

    def test_tsv_stream(self):
        buf = io.StringIO()
        worst_ratio(SearchSpace.exhaustive(2, 2, 2), ALGO_GREEDY, "length", tsv=buf)
        rows = [line.split("\t") for line in buf.getvalue().splitlines()]
        space = SearchSpace.exhaustive(2, 2, 2)
        assert len(rows) == len(space.instances())
        assert [int(r[0]) for r in rows] == list(range(len(rows)))

    def test_checkpoint_resume(self, tmp_path):
        space = SearchSpace.exhaustive(2, 3, 3)
        ck = str(tmp_path / "scan.ckpt")
        full = worst_ratio(space, ALGO_GREEDY, "length")
        first = worst_ratio(space, ALGO_GREEDY, "length", checkpoint_path=ck, checkpoint_every=20)
        assert first.best_ratio == full.best_ratio
        saved = json.loads((tmp_path / "scan.ckpt").read_text())
        assert saved["next_index"] == len(space.instances())
        # resuming a finished checkpoint rescans nothing and reports the same
        again = worst_ratio(space, ALGO_GREEDY, "length", checkpoint_path=ck)
        assert again.best_ratio == full.best_ratio
        assert again.witness_instance == full.witness_instance

    def test_checkpoint_mismatch_rejected(self, tmp_path):
        from superstring.errors import InvalidInputError

        ck = str(tmp_path / "scan.ckpt")
        worst_ratio(SearchSpace.exhaustive(2, 2, 2), ALGO_GREEDY, "length", checkpoint_path=ck)
        with pytest.raises(InvalidInputError):
            worst_ratio(SearchSpace.exhaustive(2, 2, 2), ALGO_GREEDY, "uniform", checkpoint_path=ck)


class TestVerifyBound:
    def test_small_uniform_bound_passes(self):
        check = verify_bound(SearchSpace.exhaustive(2, 3, 3), ALGO_LOCALLY_GREEDY, "uniform", 4)
        assert check.passed
        assert check.instances_scanned == len(SearchSpace.exhaustive(2, 3, 3).instances())

    def test_fails_with_witness(self):
        inst = normalize(["abb", "bbb", "bbc"])
        check = verify_bound(SearchSpace.of_instances([inst]), ALGO_GREEDY, "length", 1)
        assert not check.passed
        assert check.counterexample["ratio"] == "7/5"
        assert check.counterexample["instance"] == ["abb", "bbb", "bbc"]

    def test_single_string_any_bound(self):
        space = SearchSpace.of_instances([Instance(("abc",))])
        for metric in ("length", "uniform"):
            assert verify_bound(space, ALGO_GREEDY, metric, 1).passed

    def test_parallel_fail_finds_first(self):
        insts = SearchSpace.exhaustive(2, 3, 3).instances()
        seq = verify_bound(SearchSpace.exhaustive(2, 3, 3), ALGO_GREEDY, "length", Fraction(6, 5))
        par = verify_bound(
            SearchSpace.exhaustive(2, 3, 3), ALGO_GREEDY, "length", Fraction(6, 5), jobs=2
        )
        assert not seq.passed and not par.passed
        assert seq.counterexample["index"] == par.counterexample["index"]
        assert seq.counterexample["instance"] == par.counterexample["instance"]

    def test_greedy_conjecture_at_desk_scale(self):
        # length ratio of every greedy instantiation stays within 2 on the
        # full binary space with up to 4 strings of length up to 3
        check = verify_bound(SearchSpace.exhaustive(2, 4, 3), ALGO_GREEDY, "length", 2)
        assert check.passed


class TestInstanceWorst:
    def test_zero_optimum_flag(self):
        # no instance can have a positive count with zero optimum; the flag
        # mechanism is exercised through the report field staying None
        inst = normalize(["ab", "ba"])
        worst = instance_worst(inst, ALGO_GREEDY, "uniform")
        assert worst.infinity is None

    @given(st.integers(0, 150))
    @settings(max_examples=40)
    def test_uniform_ratio_recomputes(self, seed):
        inst = random_instance(seed, count=2 + seed % 3, max_len=4, alphabet_size=2)
        worst = instance_worst(inst, ALGO_GREEDY, "uniform")
        if worst.symbol is None:
            return
        outs = reachable_outcomes(inst, ALGO_GREEDY)
        pos = inst.alphabet.index(worst.symbol)
        assert worst.algorithm_value == max(c[pos] for _, c in outs)
        assert worst.optimum == exact_sigma(inst, worst.symbol)[0]
        assert worst.ratio == Fraction(worst.algorithm_value, worst.optimum)

    @given(st.integers(0, 150))
    @settings(max_examples=30)
    def test_length_ratio_against_brute_force(self, seed):
        inst = random_instance(seed, count=2 + seed % 3, max_len=4, alphabet_size=2)
        worst = instance_worst(inst, ALGO_GREEDY, "length")
        assert worst.optimum == brute_exact_scs_length(inst)
