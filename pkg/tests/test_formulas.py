import itertools
import random
from fractions import Fraction
from math import comb

import pytest
from hypothesis import given, settings, strategies as st

from nmds.errors import DimensionOutOfRange, NegativeCount, SingularTailBlock
from nmds.formulas import (
    Prediction,
    SubsetSumQuery,
    a_min_weight_closed,
    binom,
    listed_vanishing_case,
    nmds_full_distribution,
    nmds_range,
    predict,
    subset_sum_count_bruteforce,
    subset_sum_count_closed,
    unified_min_weight_count,
    v_of_b,
)
from nmds.gf import make_field
from nmds.grl import swap_tail
from nmds.matrix import Matrix

GF9 = make_field(3, 2)
GF8 = make_field(2, 3)
EXAMPLE_TAIL = [[1, 1], [2, 1]]


def N(F, k, b, domain):
    return subset_sum_count_closed(SubsetSumQuery(F, k, b, domain))


# -- subset sums ------------------------------------------------------------------------


def test_v_of_b():
    assert v_of_b(GF9, 0) == 8
    assert v_of_b(GF9, GF9.omega) == -1
    assert v_of_b(GF8, 1) == -1


def test_closed_form_examples():
    assert N(GF8, 2, 0, "units") == 0
    assert N(GF9, 4, 2, "units") == 8
    assert N(GF9, 3, 0, "full") == 12


def test_bruteforce_examples():
    F5 = make_field(5)
    assert subset_sum_count_bruteforce(SubsetSumQuery(F5, 2, 0, "units")) == 2
    for domain in ("units", "full"):
        for b in range(5):
            expect = int(b in (F5.units() if domain == "units" else F5.full()))
            assert subset_sum_count_bruteforce(SubsetSumQuery(F5, 1, b, domain)) == expect
    assert subset_sum_count_bruteforce(SubsetSumQuery(F5, 5, 0, "units")) == 0
    assert N(F5, 5, 0, "units") == 0
    assert N(F5, 7, 0, "full") == 0


def test_query_rejects_negative_size():
    with pytest.raises(ValueError):
        SubsetSumQuery(GF9, -1, 0)
    with pytest.raises(ValueError):
        SubsetSumQuery(GF9, 2, 9)


@pytest.mark.parametrize("pm", [(2, 2), (5, 1), (7, 1), (2, 3), (3, 2)])
def test_closed_form_matches_bruteforce(pm):
    F = make_field(*pm)
    for domain in ("units", "full"):
        size = F.q - 1 if domain == "units" else F.q
        for k in range(size + 1):
            row = [N(F, k, b, domain) for b in range(F.q)]
            assert sum(row) == comb(size, k)
            for b in range(F.q):
                assert row[b] == subset_sum_count_bruteforce(SubsetSumQuery(F, k, b, domain))


def true_zero_set(q, p, k, b, domain):
    """Zero cases for k >= 2 found by exhaustive search over q <= 11."""
    size = q - 1 if domain == "units" else q
    if k == size:
        return b != 0  # the whole domain sums to 0
    if p == 2 and b == 0 and k in (2, size - 2):
        return True
    return domain == "units" and k == q - 2 and b == 0


@pytest.mark.parametrize("pm", [(2, 2), (5, 1), (7, 1), (2, 3), (3, 2), (11, 1)])
def test_zero_set_characterization(pm):
    F = make_field(*pm)
    for domain in ("units", "full"):
        size = F.q - 1 if domain == "units" else F.q
        for k in range(2, size + 1):
            for b in range(F.q):
                assert (N(F, k, b, domain) == 0) == true_zero_set(F.q, F.p, k, b, domain)


def test_listed_vanishing_cases_do_vanish():
    for pm in [(2, 2), (2, 3), (2, 4)]:
        F = make_field(*pm)
        for domain in ("units", "full"):
            for k in range(2, F.q):
                if listed_vanishing_case(F.q, k, 0):
                    assert N(F, k, 0, domain) == 0


def test_vanishing_for_shifted_size():
    # N(k-1, 0, units) = 0 exactly for k in {3, q-2, q-1} (p = 2) or {2, q-1} (p odd);
    # k = 2 with p = 2 also vanishes trivially, so the family range k >= 3 is checked
    for pm in [(2, 2), (2, 3), (2, 4), (3, 1), (5, 1), (7, 1), (3, 2), (11, 1)]:
        F = make_field(*pm)
        listed = {3, F.q - 2, F.q - 1} if F.p == 2 else {2, F.q - 1}
        for k in range(3, F.q + 1):
            assert (N(F, k - 1, 0, "units") == 0) == (k in listed)


@settings(max_examples=100, deadline=None)
@given(
    st.sampled_from([(2, 2), (3, 1), (5, 1), (7, 1), (2, 3), (3, 2), (2, 4)]),
    st.sampled_from(["units", "full"]),
    st.data(),
)
def test_closed_form_property(pm, domain, data):
    F = make_field(*pm)
    size = F.q - 1 if domain == "units" else F.q
    k = data.draw(st.integers(0, min(size, 6)))
    b = data.draw(st.integers(0, F.q - 1))
    q = SubsetSumQuery(F, k, b, domain)
    assert subset_sum_count_closed(q) == subset_sum_count_bruteforce(q)


def test_complement_symmetry():
    F = make_field(7)
    for k in range(7):
        for b in range(7):
            assert N(F, k, b, "units") == N(F, 6 - k, F.neg(b), "units")


def test_binom_boundaries():
    assert binom(3, 5) == 0 and binom(3, -1) == 0 and binom(5, 2) == 10


# -- NMDS weight distributions ------------------------------------------------------------


def test_full_distribution_examples():
    primal, dual = nmds_full_distribution(10, 5, 9, 128)
    assert primal[6] == 1040 and primal[10] == 18160
    assert dual[6] == 1040
    assert list(primal) == [1, 0, 0, 0, 0, 128, 1040, 4160, 12760, 22800, 18160]


def test_full_distribution_totals():
    for n, k, q, a in [(10, 5, 9, 128), (11, 4, 9, 144), (11, 6, 9, 224), (10, 7, 8, 70)]:
        try:
            primal, dual = nmds_full_distribution(n, k, q, a)
        except NegativeCount:
            continue
        assert primal.total == q**k and dual.total == q ** (n - k)
        assert primal[n - k] == dual[k] == a


def test_full_distribution_rejects_impossible_seed():
    with pytest.raises(NegativeCount):
        nmds_full_distribution(10, 5, 9, 10**9)


def q_poly_units_k5(q):
    return {
        q - 4: Fraction((q - 1) * (q - 3) * (q * q - 7 * q + 14), 12),
        q - 3: Fraction((q - 1) * (q**4 - 12 * q**3 + 99 * q * q - 348 * q + 420), 24),
        q - 2: Fraction((q - 1) * (16 * q**3 - 100 * q * q + 344 * q - 420), 12),
        q - 1: Fraction((q - 1) * (3 * q**4 - 10 * q**3 + 115 * q * q - 332 * q + 420), 12),
        q: Fraction((q - 1) * (4 * q**4 + 15 * q**3 - 54 * q * q + 177 * q - 198), 12),
        q + 1: Fraction((q - 1) * (9 * q**4 - 8 * q**3 + 23 * q * q - 76 * q + 84), 24),
    }


def q_poly_full_k4(q):
    return {
        q - 2: Fraction(q * (q - 1) * (q - 3), 3),
        q - 1: Fraction(q * (q - 1) * (q * q - 5 * q + 26), 6),
        q: Fraction((q - 1) * (5 * q * q - 9 * q + 2), 2),
        q + 1: Fraction(q * (q - 1) * (3 * q * q - 5 * q + 18), 6),
        q + 2: Fraction(q * (q - 1) * (2 * q * q - q - 5), 6),
    }


def q_poly_full_k6(q):
    return {
        q - 4: Fraction((q - 1) ** 2 * (q - 2) * (q - 3) * (q - 4), 60),
        q - 3: Fraction((q - 1) ** 2 * (q - 2) * (q**3 - 9 * q * q + 86 * q - 144), 120),
        q - 2: Fraction((q - 1) ** 2 * (3 * q**3 - 15 * q * q + 54 * q - 48), 8),
        q - 1: Fraction((q - 1) * (q**5 - 2 * q**4 + 45 * q**3 - 124 * q * q + 212 * q - 96), 12),
        q: Fraction((q - 1) * (q**5 + 6 * q**4 - 11 * q**3 + 51 * q * q - 71 * q + 42), 6),
        q + 1: Fraction((q - 1) * (15 * q**5 + 16 * q**4 + 25 * q**3 - 140 * q * q + 180 * q - 96), 40),
        q + 2: Fraction((q - 1) * (44 * q**5 - 63 * q**4 - 10 * q**3 + 75 * q * q - 94 * q + 48), 120),
    }


@pytest.mark.parametrize("m", [2, 3, 4])
@pytest.mark.parametrize(
    "alphabet,k,poly",
    [("units", 5, q_poly_units_k5), ("full", 4, q_poly_full_k4), ("full", 6, q_poly_full_k6)],
    ids=["units-k5", "full-k4", "full-k6"],
)
def test_enumerators_polynomial_in_q(m, alphabet, k, poly):
    F = make_field(3, m)
    q = F.q
    n = q + 1 if alphabet == "units" else q + 2
    a_min = a_min_weight_closed(F, alphabet, k, EXAMPLE_TAIL)
    primal, _ = nmds_full_distribution(n, k, q, a_min)
    expect = poly(q)
    assert {i: Fraction(primal[i]) for i in expect} == expect
    assert primal.support() == {0: 1, **{i: int(v) for i, v in expect.items()}}


def test_example_min_weight_as_subset_sums():
    for m in (2, 3):
        F = make_field(3, m)
        q = F.q
        assert a_min_weight_closed(F, "units", 5, EXAMPLE_TAIL) == (q - 1) * (
            N(F, 4, 2, "units") + N(F, 4, 1, "units")
        )
        assert a_min_weight_closed(F, "full", 4, EXAMPLE_TAIL) == (q - 1) * (
            N(F, 3, 2, "full") + N(F, 3, 1, "full")
        )


# -- minimum-weight counts ----------------------------------------------------------------


def test_a_min_examples():
    assert a_min_weight_closed(GF9, "units", 5, EXAMPLE_TAIL) == 128
    assert a_min_weight_closed(GF9, "full", 4, EXAMPLE_TAIL) == 144
    assert a_min_weight_closed(GF9, "units", 5, [[1, 0], [0, 1]]) == 48
    assert N(GF9, 4, 0, "units") == 6


def test_a_min_errors():
    with pytest.raises(DimensionOutOfRange):
        a_min_weight_closed(GF8, "units", 3, EXAMPLE_TAIL)
    with pytest.raises(DimensionOutOfRange):
        a_min_weight_closed(GF9, "units", 8, EXAMPLE_TAIL)
    with pytest.raises(SingularTailBlock):
        a_min_weight_closed(GF9, "full", 4, [[1, 1], [1, 1]])


def zero_pattern(M):
    return tuple(int(M[i, j] != 0) for i in (0, 1) for j in (0, 1))


def displayed_units_count(F, k, M):
    """The seven displayed case formulas for the unit alphabet."""
    q, p = F.q, F.p
    t = (k - 1) // p
    base = comb(q - 1, k - 1)
    B = binom(q // p - 1, t)
    s = (-1) ** (k + t)
    pattern = zero_pattern(M)  # (a11, a12, a21, a22)
    if pattern == (1, 1, 1, 1):
        val = Fraction(2 * (q - 1), q) * base + s * Fraction(2 * (q - 1), q) * B
    elif pattern in ((1, 1, 1, 0), (1, 1, 0, 1)):
        val = Fraction(2 * (q - 1), q) * base - s * Fraction(q * q - 3 * q + 2, q) * B
    elif pattern in ((1, 0, 1, 1), (0, 1, 1, 1)):
        val = Fraction(q - 1, q) * base + s * Fraction(q - 1, q) * B
    elif pattern in ((0, 1, 1, 0), (1, 0, 0, 1)):
        val = Fraction(q - 1, q) * base - s * Fraction((q - 1) ** 2, q) * B
    else:
        raise AssertionError(f"pattern {pattern} is singular")
    assert val.denominator == 1
    return int(val)


def displayed_full_count(F, k, M):
    """The displayed case formulas for the full alphabet (both divisibility branches)."""
    q, p = F.q, F.p
    base = comb(q, k - 1)
    pattern = zero_pattern(M)
    if (k - 1) % p:
        if pattern in ((1, 1, 1, 1), (1, 1, 1, 0), (1, 1, 0, 1)):
            val = Fraction(2 * (q - 1), q) * base
        else:
            val = Fraction(q - 1, q) * base
    else:
        t = (k - 1) // p
        B = binom(q // p, t)
        s = (-1) ** (k + t)
        if pattern == (1, 1, 1, 1):
            val = Fraction(2 * (q - 1), q) * base + s * Fraction(2 * (q - 1), q) * B
        elif pattern in ((1, 1, 1, 0), (1, 1, 0, 1)):
            val = Fraction(2 * (q - 1), q) * base - s * Fraction(q * q - 3 * q + 2, q) * B
        elif pattern in ((1, 0, 1, 1), (0, 1, 1, 1)):
            val = Fraction(q - 1, q) * base + s * Fraction(q - 1, q) * B
        else:
            val = Fraction(q - 1, q) * base - s * Fraction((q - 1) ** 2, q) * B
    assert val.denominator == 1
    return int(val)


def tails_by_pattern(F, per_pattern, rng):
    groups = {}
    for entries in itertools.product(range(F.q), repeat=4):
        M = Matrix(F, [entries[:2], entries[2:]])
        if M.det():
            groups.setdefault(zero_pattern(M), []).append(M)
    assert len(groups) == 7
    return {pat: rng.sample(ms, min(per_pattern, len(ms))) for pat, ms in groups.items()}


@pytest.mark.parametrize("pm", [(2, 2), (5, 1), (7, 1), (2, 3), (3, 2)])
def test_displayed_case_branches_match_unified_form(pm):
    F = make_field(*pm)
    rng = random.Random(f"branches:{F.q}")
    groups = tails_by_pattern(F, 6, rng)
    for alphabet, oracle in (("units", displayed_units_count), ("full", displayed_full_count)):
        lo, hi = nmds_range(F, alphabet)
        for k in range(lo, hi + 1):
            for tails in groups.values():
                for M in tails:
                    assert unified_min_weight_count(F, alphabet, k, M) == oracle(F, k, M)


# -- predictor -----------------------------------------------------------------------------


def test_predict_examples():
    p = predict(GF9, "units", 5, EXAMPLE_TAIL)
    assert (p.klass, p.n, p.k, p.d, p.a_min) == ("NMDS", 10, 5, 5, 128)
    for M in ([[1, 0], [0, 1]], [[0, 1], [1, 0]], [[1, 2], [3, 4]]):
        p = predict(GF8, "units", 3, M)
        assert (p.klass, p.n, p.k, p.d) == ("MDS", 9, 3, 7)
    assert predict(GF8, "full", 3, [[0, 3], [2, 0]]).klass == "undetermined"
    assert predict(GF8, "full", 3, swap_tail()).klass == "MDS"
    assert predict(GF8, "full", 7, swap_tail()).d == 4


def test_predict_dispatch_table():
    F5 = make_field(5)
    assert predict(F5, "units", 4, EXAMPLE_TAIL).source == "units-mds"
    assert predict(F5, "units", 3, EXAMPLE_TAIL).source == "units-nmds"
    assert predict(F5, "full", 5, EXAMPLE_TAIL).source == "full-nmds"
    assert predict(GF8, "full", 7, [[1, 1], [0, 1]]).klass == "undetermined"
    assert predict(GF8, "full", 8, swap_tail()).klass == "undetermined"
    with pytest.raises(DimensionOutOfRange):
        predict(GF8, "units", 8, swap_tail())
    with pytest.raises(SingularTailBlock):
        predict(GF8, "full", 4, [[0, 0], [1, 1]])


def test_prediction_invariants():
    for pm in [(2, 2), (5, 1), (2, 3), (3, 2)]:
        F = make_field(*pm)
        for alphabet, hi in (("units", F.q - 1), ("full", F.q)):
            for k in range(3, hi + 1):
                for M in (swap_tail(), [[1, 0], [0, 1]], [[1, 1], [F.q - 1, 1]]):
                    if Matrix(F, M).det() == 0:
                        continue
                    p = predict(F, alphabet, k, M)
                    assert isinstance(p, Prediction)
                    if p.klass == "NMDS":
                        assert p.a_min > 0 and p.d == p.n - p.k
                    if p.klass == "MDS":
                        assert p.d == p.n - p.k + 1 and p.a_min is None
                    assert set(p.as_dict()) == {"n", "k", "d", "klass", "a_min", "source"}
