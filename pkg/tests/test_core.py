import itertools
import logging
import random
import threading
from fractions import Fraction

import mpmath
import pytest

from verlinde import closed_forms as cf
from verlinde.core import (
    GroupId,
    VerlindeQuery,
    clear_memo,
    count_weights,
    cyclotomic_order,
    enumerate_weights,
    sine_arguments,
    term_sum,
    term_value,
    verlinde_float,
    verlinde_number,
    verlinde_split,
)
from verlinde.errors import ResourceBoundError


def Q(group, level, genus):
    return VerlindeQuery(group, level, genus)


def sl_oracle(r, level, g, dps=60):
    """N_l(SL_r) from the sine form, at high precision, rounded."""
    n = r - 1
    k = level + r
    with mpmath.workdps(dps):
        total = mpmath.mpf(0)
        for t in itertools.product(range(1, k), repeat=n):
            if sum(t) > level + n:
                continue
            prod = mpmath.mpf(1)
            for i in range(n + 1):
                for j in range(i + 1, n + 1):
                    prod *= 2 * mpmath.sin(mpmath.pi * sum(t[i:j]) / k)
            total += prod ** (-2 * (g - 1))
        value = total * mpmath.mpf(r * k**n) ** (g - 1)
        nearest = int(mpmath.nint(value))
        assert abs(value - nearest) < mpmath.mpf(10) ** (-dps // 2)
        return nearest


# group ids and queries


def test_group_id_validation():
    with pytest.raises(ValueError):
        GroupId.sl(1)
    with pytest.raises(ValueError):
        GroupId.spin(2)
    with pytest.raises(ValueError):
        GroupId("E8", 8)
    assert GroupId.spin(7).family == "SpinOdd" and GroupId.spin(7).n == 3
    assert GroupId.spin(10).family == "SpinEven" and GroupId.spin(10).n == 5
    assert GroupId.sl(4).n == 3
    assert GroupId.spin(3).evaluation_group() == GroupId.sl(2)
    assert GroupId.spin(9).tag == "spin:9" and str(GroupId.sl(3)) == "SL_3"


def test_query_validation():
    with pytest.raises(ValueError):
        Q(GroupId.sl(2), 0, 2)
    with pytest.raises(ValueError):
        Q(GroupId.sl(2), 1, 0)


# summation domains


def test_enumerate_examples():
    assert enumerate_weights(GroupId.sl(2), 4) == [(1,), (2,), (3,), (4,), (5,)]
    assert enumerate_weights(GroupId.spin(5), 2) == [(1, 1), (1, 2), (1, 3), (2, 1), (2, 2), (3, 1)]


def test_spin7_level2_domain():
    # the three families of the level-2 classification at n = 3:
    # (1,1,1), (3,1,1) ; (1,1,2), (2,1,2) ; n = 3 others
    got = enumerate_weights(GroupId.spin(7), 2)
    assert got == [(1, 1, 1), (1, 1, 2), (1, 1, 3), (1, 2, 1), (2, 1, 1), (2, 1, 2), (3, 1, 1)]


@pytest.mark.parametrize("m", range(5, 12, 2))
def test_level2_family_sizes(m):
    n = (m - 1) // 2
    assert len(enumerate_weights(GroupId.spin(m), 2)) == 4 + n


def test_enumeration_is_lexicographic_and_unique():
    for group in (GroupId.sl(4), GroupId.spin(9), GroupId.spin(10)):
        w = enumerate_weights(group, 4)
        assert w == sorted(set(w))


@pytest.mark.parametrize("group", [GroupId.sl(r) for r in (2, 3, 4, 5)]
                         + [GroupId.spin(m) for m in range(3, 12)])
@pytest.mark.parametrize("level", [1, 2, 3, 5])
def test_count_matches_enumeration(group, level):
    assert count_weights(group, level) == len(enumerate_weights(group, level))


def test_spin4_is_product_of_sl2_domains():
    for l in range(1, 6):
        sl2 = enumerate_weights(GroupId.sl(2), l)
        assert enumerate_weights(GroupId.spin(4), l) == [a + b for a in sl2 for b in sl2]


@pytest.mark.parametrize("level", range(1, 9))
def test_sine_arguments_never_vanish(level):
    groups = [GroupId.sl(r) for r in range(2, 12)]
    groups += [GroupId.spin(m) for m in range(3, 12)]
    for group in groups:
        k = cyclotomic_order(group, level)
        for t in enumerate_weights(group, level):
            for a in sine_arguments(group, t):
                assert 0 < a < k, (group, level, t, a)


def test_sine_arguments_length_check():
    with pytest.raises(ValueError):
        sine_arguments(GroupId.spin(7), (1, 1))


# exact values


@pytest.mark.parametrize(
    "group, level, genus, value",
    [
        (GroupId.sl(2), 1, 2, 4),
        (GroupId.spin(7), 2, 2, 85),
        (GroupId.sl(2), 4, 2, 35),
        (GroupId.spin(8), 2, 2, 184),
        (GroupId.spin(5), 2, 2, 58),
        (GroupId.sl(4), 2, 2, 140),
    ],
)
def test_verlinde_examples(group, level, genus, value):
    assert verlinde_number(Q(group, level, genus)) == value


def test_spin3_agrees_with_sl2():
    for l in range(1, 7):
        for g in (2, 3, 4):
            assert verlinde_number(Q(GroupId.spin(3), l, g)) == verlinde_number(Q(GroupId.sl(2), l, g))


def test_genus_one_counts_weights():
    for group in (GroupId.sl(3), GroupId.spin(7), GroupId.spin(8)):
        for l in (1, 2, 3):
            assert verlinde_number(Q(group, l, 1)) == count_weights(group, l)


@pytest.mark.parametrize("r", [2, 3, 4])
@pytest.mark.parametrize("level", [1, 2, 3])
@pytest.mark.parametrize("g", [2, 3, 5])
def test_sl_against_high_precision_oracle(r, level, g):
    assert verlinde_number(Q(GroupId.sl(r), level, g)) == sl_oracle(r, level, g)


def test_integrality_scan():
    # every evaluation passes the exact integrality check (no exception)
    groups = [GroupId.sl(r) for r in range(2, 6)] + [GroupId.spin(m) for m in range(3, 12)]
    for group in groups:
        for l in range(1, 7):
            if count_weights(group, l) > 3000:
                continue
            for g in range(1, 6):
                assert verlinde_number(Q(group, l, g)) > 0


@pytest.mark.slow
def test_integrality_scan_large_domains():
    groups = [GroupId.sl(r) for r in range(2, 6)] + [GroupId.spin(m) for m in range(3, 12)]
    for group in groups:
        for l in range(1, 7):
            if count_weights(group, l) <= 3000:
                continue
            for g in (2, 5):
                assert verlinde_number(Q(group, l, g)) > 0


def test_float_oracle_examples():
    assert verlinde_float(Q(GroupId.sl(2), 1, 2)) == pytest.approx(4.0, rel=1e-9)
    assert verlinde_float(Q(GroupId.spin(5), 2, 2)) == pytest.approx(58.0, rel=1e-9)
    assert verlinde_float(Q(GroupId.sl(2), 4, 2)) == pytest.approx(35.0, rel=1e-9)


def test_float_oracle_agreement():
    groups = [GroupId.sl(r) for r in (2, 3, 4)] + [GroupId.spin(m) for m in range(3, 10)]
    for group in groups:
        for l in range(1, 5):
            for g in (1, 2, 3):
                exact = verlinde_number(Q(group, l, g))
                assert verlinde_float(Q(group, l, g)) == pytest.approx(exact, rel=1e-6)


# split


def test_split_examples():
    assert verlinde_split(Q(GroupId.spin(3), 4, 2)) == (8, 27)
    assert verlinde_split(Q(GroupId.spin(5), 2, 2)) == (8, 50)


def test_split_partition():
    for m in (3, 5, 7, 9):
        for l in (1, 2, 3, 4):
            for g in (1, 2, 3):
                q = Q(GroupId.spin(m), l, g)
                plus, minus = verlinde_split(q)
                assert plus + minus == verlinde_number(q)


def test_split_closed_form():
    # the orthogonal representation has level 2, except for Spin_3 where it is 4
    for n in (1, 2, 3, 4):
        level = 4 if n == 1 else 2
        for g in (2, 3, 4):
            minus = verlinde_split(Q(GroupId.spin(2 * n + 1), level, g))[1]
            assert 2 * minus == cf.closed_form("twice_N2_minus_spin_odd", g=g, n=n)


def test_split_rejects_other_families():
    with pytest.raises(ValueError):
        verlinde_split(Q(GroupId.spin(8), 2, 2))
    with pytest.raises(ValueError):
        verlinde_split(Q(GroupId.sl(3), 2, 2))


# term table


def test_term_value_examples():
    g5 = GroupId.spin(5)
    assert term_value(g5, (1, 1)) == 5
    assert term_value(g5, (1, 2)) == 25
    assert term_value(g5, (2, 1)) == 20
    assert term_value(GroupId.spin(7), (1, 1, 1)) == 49
    assert term_value(GroupId.spin(7), (1, 1, 2)) == 343


def test_term_value_errors():
    with pytest.raises(ValueError):
        term_value(GroupId.spin(5), (4, 1))
    with pytest.raises(ValueError):
        term_value(GroupId.sl(3), (1, 1))
    with pytest.raises(ValueError):
        term_value(GroupId.spin(3), (1,))


def test_term_value_matches_sine_product():
    from verlinde.core import term

    for m in (5, 7, 9):
        group = GroupId.spin(m)
        for t in enumerate_weights(group, 2):
            assert term(group, 2, t) == term_value(group, t)


# order invariance, memo, concurrency


def test_order_invariance():
    rng = random.Random(3)
    for group, level in ((GroupId.spin(9), 3), (GroupId.sl(4), 3), (GroupId.spin(10), 2)):
        size = count_weights(group, level)
        want = verlinde_number(Q(group, level, 3))
        forward = list(range(size))
        assert term_sum(group, level, 3, forward[::-1]) == want
        rng.shuffle(forward)
        assert term_sum(group, level, 3, forward) == want


def test_memo_bypass(fresh_memo):
    q = Q(GroupId.spin(9), 2, 3)
    a = verlinde_number(q)
    b = verlinde_number(q, memo=False)
    clear_memo()
    c = verlinde_number(q)
    assert a == b == c == cf.closed_form("N2_spin_odd", g=3, n=4)


def test_concurrent_evaluation(fresh_memo):
    queries = [Q(GroupId.spin(m), l, g) for m in (5, 7, 9) for l in (1, 2, 3) for g in (2, 3)]
    expected = {q: verlinde_number(q, memo=False) for q in queries}
    clear_memo()
    results = {}

    def work(qs):
        for q in qs:
            results.setdefault(q, set()).add(verlinde_number(q))

    threads = [threading.Thread(target=work, args=(queries[i::-1] if i % 2 else queries,))
               for i in range(4)]
    for th in threads:
        th.start()
    for th in threads:
        th.join()
    assert all(results[q] == {expected[q]} for q in queries)


def test_resource_bound():
    with pytest.raises(ResourceBoundError):
        verlinde_number(Q(GroupId.sl(6), 30, 2), max_terms=1000)


def test_low_rank_notice(caplog):
    with caplog.at_level(logging.INFO, logger="verlinde.core"):
        verlinde_number(Q(GroupId.spin(6), 1, 2), memo=False)
    assert any("Spin_6" in rec.getMessage() for rec in caplog.records)


def test_low_rank_consistency():
    for l in (1, 2, 3):
        for g in (2, 3):
            assert verlinde_number(Q(GroupId.spin(4), l, g)) == verlinde_number(Q(GroupId.sl(2), l, g)) ** 2
            assert verlinde_number(Q(GroupId.spin(6), l, g)) == verlinde_number(Q(GroupId.sl(4), l, g))


def test_backends_agree():
    import os
    import subprocess
    import sys

    code = ("from verlinde.core import *; from verlinde.exact import BACKEND; "
            "print(BACKEND, [verlinde_number(VerlindeQuery(GroupId.spin(m), 3, 3)) for m in (5, 7, 8, 9)])")
    outs = []
    for pure in ("1", "0"):
        env = dict(os.environ, VERLINDE_PURE_PYTHON=pure)
        outs.append(subprocess.run([sys.executable, "-c", code], env=env, check=True,
                                   capture_output=True, text=True).stdout.split(" ", 1))
    assert outs[0][0] == "python"
    assert outs[0][1] == outs[1][1]
