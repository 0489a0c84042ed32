"""Compressor unit and property tests."""

from __future__ import annotations

import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from rpim import _kernel
from rpim.errors import MalformedGrammarError
from rpim.repair import (
    NONTERMINAL_BASE,
    CompressorConfig,
    Grammar,
    Rule,
    build_sequence_array,
    compress,
    count_pairs,
    expand,
    is_terminal,
    replace_step,
)

from conftest import full_state_check, greedy_pair_counts, run_pair_counts


class TestCountPairs:
    def test_alternating(self):
        assert count_pairs([7, 8, 7, 8]) == {(7, 8): 2, (8, 7): 1}

    def test_too_short(self):
        assert count_pairs([]) == {}
        assert count_pairs([5]) == {}

    def test_runs_count_without_overlap(self):
        assert count_pairs([1, 1, 1]) == {(1, 1): 1}
        assert count_pairs([1, 1, 1, 1]) == {(1, 1): 2}

    def test_exhaustive_small_alphabet(self):
        for n in range(9):
            for seq in itertools.product(range(3), repeat=n):
                assert count_pairs(list(seq)) == greedy_pair_counts(seq)


class TestBuildSequenceArray:
    def test_alternating_threads(self):
        array, table = build_sequence_array([7, 8, 7, 8])
        rec = table.records[(7, 8)]
        assert rec.count == 2
        assert rec.thread_head == 0
        assert array.next_occurrence[0] == 2
        assert (8, 7) in table.seen_once

    def test_empty(self):
        array, table = build_sequence_array([])
        assert array.working_sequence() == []
        assert not table.records
        assert not table.seen_once

    def test_run_of_three_is_seen_once(self):
        array, table = build_sequence_array([1, 1, 1])
        assert (1, 1) in table.seen_once
        assert (1, 1) not in table.records


class TestReplaceStep:
    def test_replaces_most_frequent(self):
        array, table = build_sequence_array([7, 8, 7, 8])
        grammar = Grammar()
        assert replace_step(array, table, grammar) is True
        assert array.working_sequence() == [256, 256]
        assert grammar.rules == [(7, 8)]

    def test_nothing_repeats(self):
        array, table = build_sequence_array([1, 2, 3, 4])
        grammar = Grammar()
        assert replace_step(array, table, grammar) is False
        assert grammar.rules == []

    def test_tie_broken_lexicographically(self):
        # (1,1) and (1,2) both count 2; (1,1) is smaller
        array, table = build_sequence_array([1, 1, 2, 1, 1, 2])
        grammar = Grammar()
        assert replace_step(array, table, grammar) is True
        assert grammar.rules == [(1, 1)]
        assert array.working_sequence() == [256, 2, 256, 2]
        full_state_check(array, table, "after tie-break step")

    def test_run_head_erosion(self):
        # replacing (0,1) consumes the head of the 1-run; the (1,1)
        # credits must be recounted from the new run start
        seq = [0, 1, 1, 1, 1, 1, 0, 1]
        array, table = build_sequence_array(seq)
        grammar = Grammar()
        assert replace_step(array, table, grammar) is True
        assert grammar.rules == [(0, 1)]
        full_state_check(array, table, "after erosion step")

    def test_min_frequency_respected(self):
        array, table = build_sequence_array([7, 8, 7, 8])
        grammar = Grammar()
        assert replace_step(array, table, grammar, min_frequency=3) is False
        assert array.working_sequence() == [7, 8, 7, 8]


class TestCompress:
    def test_empty(self):
        grammar, final = compress(b"")
        assert grammar.rules == []
        assert final == []

    def test_nested_rules(self):
        grammar, final = compress(bytes([1, 2] * 4))
        assert grammar.rules == [(1, 2), (256, 256)]
        assert final == [257, 257]

    def test_abracadabra(self):
        grammar, final = compress(b"abracadabra")
        assert bytes(expand(grammar, final)) == b"abracadabra"
        assert all(c < 2 for c in count_pairs(final).values())

    def test_max_rules_caps_grammar(self):
        config = CompressorConfig(max_rules=1)
        grammar, final = compress(bytes([1, 2] * 4), config)
        assert grammar.rules == [(1, 2)]
        assert final == [256, 256, 256, 256]

    def test_min_frequency_three(self):
        config = CompressorConfig(min_frequency=3)
        grammar, final = compress(bytes([1, 2] * 2), config)
        assert grammar.rules == []
        assert final == [1, 2, 1, 2]

    def test_list_input_equals_bytes_input(self):
        data = b"mississippi"
        assert compress(list(data)) == compress(data)

    def test_rejects_nonterminal_input(self):
        with pytest.raises(ValueError):
            compress([1, 2, 300])
        with pytest.raises(ValueError):
            compress([-1, 2])

    def test_rejects_unknown_engine(self):
        with pytest.raises(ValueError):
            compress(b"abab", engine="turbo")

    def test_config_validation(self):
        with pytest.raises(ValueError):
            CompressorConfig(min_frequency=1)
        with pytest.raises(ValueError):
            CompressorConfig(max_rules=-1)


class TestExpand:
    def test_identity_on_terminals(self):
        assert expand(Grammar(), [4, 9]) == [4, 9]

    def test_single_rule(self):
        assert expand(Grammar([Rule(97, 98)]), [256, 256]) == [97, 98, 97, 98]

    def test_two_levels(self):
        grammar = Grammar([Rule(97, 98), Rule(256, 256)])
        assert expand(grammar, [257]) == [97, 98, 97, 98]

    def test_undefined_symbol_rejected(self):
        with pytest.raises(MalformedGrammarError):
            expand(Grammar(), [256])

    def test_forward_rule_reference_rejected(self):
        # rule 0 references ordinal 257 which is not below it
        with pytest.raises(MalformedGrammarError):
            expand(Grammar([Rule(257, 0)]), [256])

    def test_self_reference_rejected(self):
        with pytest.raises(MalformedGrammarError):
            expand(Grammar([Rule(256, 0)]), [256])


def test_is_terminal_boundary():
    assert is_terminal(0)
    assert is_terminal(255)
    assert not is_terminal(NONTERMINAL_BASE)


byte_strings = st.binary(max_size=4096)
small_seqs = st.lists(st.integers(0, 3), max_size=64)


@given(byte_strings)
@settings(max_examples=150, deadline=None)
def test_round_trip_property(data):
    grammar, final = compress(data)
    assert bytes(expand(grammar, final)) == data


@given(byte_strings)
@settings(max_examples=100, deadline=None)
def test_termination_residue_property(data):
    _, final = compress(data)
    assert all(c < 2 for c in greedy_pair_counts(final).values())


@given(st.lists(st.integers(0, 255), max_size=200))
@settings(max_examples=200, deadline=None)
def test_count_pairs_matches_both_oracles(seq):
    got = count_pairs(seq)
    assert got == greedy_pair_counts(seq)
    assert got == run_pair_counts(seq)


@given(small_seqs)
@settings(max_examples=150, deadline=None)
def test_table_state_sound_through_all_steps(seq):
    array, table = build_sequence_array(seq)
    full_state_check(array, table, "after build")
    grammar = Grammar()
    while True:
        counts = greedy_pair_counts(array.working_sequence())
        if not replace_step(array, table, grammar):
            break
        # the chosen pair must have been maximal, ties broken toward
        # the smallest (left, right)
        chosen = tuple(grammar.rules[-1])
        top = max(counts.values())
        assert counts[chosen] == top
        assert chosen == min(p for p, c in counts.items() if c == top)
        full_state_check(array, table, f"after step {len(grammar.rules)}")
    assert expand(grammar, array.working_sequence()) == seq


@given(byte_strings)
@settings(max_examples=100, deadline=None)
def test_grammar_is_acyclic(data):
    grammar, _ = compress(data)
    for ordinal, rule in enumerate(grammar.rules):
        assert rule.left < NONTERMINAL_BASE + ordinal
        assert rule.right < NONTERMINAL_BASE + ordinal


@pytest.mark.skipif(not _kernel.HAVE_JIT, reason="numba not installed")
@given(st.lists(st.integers(0, 255), max_size=2000),
       st.sampled_from([2, 3]), st.sampled_from([None, 0, 1, 7]))
@settings(max_examples=120, deadline=None)
def test_engines_agree(seq, min_frequency, max_rules):
    config = CompressorConfig(min_frequency=min_frequency,
                              max_rules=max_rules)
    py_grammar, py_final = compress(seq, config, engine="python")
    jit_grammar, jit_final = compress(seq, config, engine="jit")
    assert py_grammar.rules == jit_grammar.rules
    assert py_final == jit_final
