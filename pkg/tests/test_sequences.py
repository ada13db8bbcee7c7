import pytest
from hypothesis import given, strategies as st

from spincorr.errors import BudgetExceededError
from spincorr.sequences import (
    BitSeq,
    CorrSeq,
    apply_map,
    correlate,
    count_symbols,
    enumerate_sequences,
    parse,
    render,
)

A, B, C, D = (0, 0), (1, 1), (1, 0), (0, 1)


def bitseq(text):
    return BitSeq.from_string(text)


def corr4(text):
    return parse(text)


bits = st.integers(min_value=0, max_value=1)
bitseqs = st.builds(
    BitSeq, st.lists(bits, min_size=1, max_size=32).map(tuple)
)
bitseq_pairs = st.lists(
    st.tuples(bits, bits), min_size=1, max_size=32
).map(
    lambda rows: (
        BitSeq(tuple(r[0] for r in rows)),
        BitSeq(tuple(r[1] for r in rows)),
    )
)


class TestCorrelate:
    def test_worked_base4_example(self):
        c = correlate([bitseq("100101"), bitseq("001100")])
        assert render(c) == "CADBAC"

    def test_self_correlation_has_no_mismatched_rows(self):
        s = bitseq("1011001")
        counts = count_symbols(correlate([s, s]))
        assert counts[C] == 0 and counts[D] == 0

    def test_single_row(self):
        c = correlate([bitseq("1"), bitseq("0")])
        assert c.symbols == ((1, 0),)
        assert render(c) == "C"

    def test_length_mismatch(self):
        with pytest.raises(ValueError):
            correlate([bitseq("10"), bitseq("100")])

    def test_needs_two_inputs(self):
        with pytest.raises(ValueError):
            correlate([bitseq("10")])

    def test_order_three(self):
        c = correlate([bitseq("10"), bitseq("01"), bitseq("11")])
        assert c.order == 3
        assert c.symbols == ((1, 0, 1), (0, 1, 1))


class TestCountSymbols:
    def test_worked_example(self):
        counts = count_symbols(corr4("CADBAC"))
        assert counts == {A: 2, B: 1, C: 2, D: 1}

    def test_all_one_symbol(self):
        counts = count_symbols(corr4("AAAAA"))
        assert counts == {A: 5, B: 0, C: 0, D: 0}

    def test_base8_triple(self):
        c = parse("110,111,100,011")
        counts = count_symbols(c)
        assert counts[(1, 1, 0)] == 1
        assert counts[(1, 1, 1)] == 1
        assert counts[(1, 0, 0)] == 1
        assert counts[(0, 1, 1)] == 1
        assert sum(counts.values()) == 4

    @given(pair=bitseq_pairs)
    def test_exchange_swaps_c_and_d(self, pair):
        a, b = pair
        ab = count_symbols(correlate([a, b]))
        ba = count_symbols(correlate([b, a]))
        assert ab[C] == ba[D] and ab[D] == ba[C]
        assert ab[A] == ba[A] and ab[B] == ba[B]

    @given(pair=bitseq_pairs)
    def test_totals_equal_n(self, pair):
        a, b = pair
        assert sum(count_symbols(correlate([a, b])).values()) == len(a)


class TestApplyMap:
    def test_worked_map_example(self):
        out = apply_map(corr4("AACBBA"), corr4("BACAAD"))
        assert render(out) == "BAABBD"

    def test_identity_map(self):
        x = corr4("CADBAC")
        assert apply_map(x, corr4("AAAAAA")) == x

    def test_self_inverse(self):
        x = corr4("CADBAC")
        assert render(apply_map(x, x)) == "AAAAAA"

    def test_mismatch_errors(self):
        with pytest.raises(ValueError):
            apply_map(corr4("AB"), corr4("ABA"))
        with pytest.raises(ValueError):
            apply_map(corr4("AB"), parse("110,111"))

    @given(
        data=st.lists(
            st.tuples(bits, bits, bits, bits), min_size=1, max_size=24
        )
    )
    def test_involution(self, data):
        x = CorrSeq(2, tuple((a, b) for a, b, _, _ in data))
        m = CorrSeq(2, tuple((c, d) for _, _, c, d in data))
        assert apply_map(apply_map(x, m), m) == x


class TestEnumerate:
    @pytest.mark.parametrize("n,d,expected", [(3, 1, 8), (1, 3, 8), (2, 2, 16)])
    def test_counts(self, n, d, expected):
        seqs = list(enumerate_sequences(n, d))
        assert len(seqs) == expected
        assert len(set(seqs)) == expected

    def test_lexicographic_and_deterministic(self):
        first = [render(c) for c in enumerate_sequences(2, 1)]
        second = [render(c) for c in enumerate_sequences(2, 1)]
        assert first == second == ["00", "01", "10", "11"]

    @pytest.mark.parametrize("n,d", [(4, 1), (3, 2), (2, 3), (12, 1)])
    def test_no_duplicates(self, n, d):
        seqs = list(enumerate_sequences(n, d))
        assert len(set(seqs)) == len(seqs) == 2 ** (d * n)

    def test_budget(self):
        with pytest.raises(BudgetExceededError, match="budget"):
            next(enumerate_sequences(30, 1, budget=1000))

    def test_budget_env_override(self, monkeypatch):
        monkeypatch.setenv("SPINCORR_ENUM_BUDGET", "4")
        with pytest.raises(BudgetExceededError):
            next(enumerate_sequences(3, 1))
        assert len(list(enumerate_sequences(2, 1))) == 4


class TestTextForms:
    @pytest.mark.parametrize(
        "text", ["100101", "CADBAC", "110,111,100,011"]
    )
    def test_round_trip(self, text):
        assert render(parse(text)) == text

    def test_bitseq_round_trip(self):
        assert str(bitseq("100101")) == "100101"
