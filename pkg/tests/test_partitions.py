"""Oracle tests for the partition families.

The brute-force generators and condition checkers here are written
independently of the package (straight from the defining inequalities)
so they can act as oracles for the optimized enumerators and DP counts.
"""

import pytest

from qgordon import partitions


def gen_partitions(n, max_part=None):
    """Every partition of n, largest part first."""
    if max_part is None:
        max_part = n
    if n == 0:
        yield ()
        return
    for first in range(min(n, max_part), 0, -1):
        for rest in gen_partitions(n - first, first):
            yield (first,) + rest


def window_ok(parts, k, a):
    """Direct restatement of the family-B conditions."""
    for i in range(len(parts) - k + 1):
        if parts[i] - parts[i + k - 1] < 2:
            return False
    return sum(1 for p in parts if p == 1) <= a - 1


def parity_ok(parts, which):
    for v in set(parts):
        if v % 2 == which and parts.count(v) % 2 == 1:
            return False
    return True


def brute_family(family, k, a, n):
    out = []
    for p in gen_partitions(n):
        if not window_ok(p, k, a):
            continue
        if family == "W" and not parity_ok(p, 0):
            continue
        if family == "Wbar" and not parity_ok(p, 1):
            continue
        out.append(p)
    return out


def brute_count_a(k, a, n):
    modulus = 2 * k + 1
    banned = {0, a % modulus, (modulus - a) % modulus}
    total = 0
    for p in gen_partitions(n):
        if all(x % modulus not in banned for x in p):
            total += 1
    return total


def test_is_gordon_fixed_cases():
    assert partitions.is_gordon((3, 1, 1), 3, 3)
    assert not partitions.is_gordon((2, 2, 1), 3, 3)
    assert partitions.is_gordon((), 2, 1)
    assert partitions.is_gordon((), 5, 5)
    # too many ones
    assert not partitions.is_gordon((3, 1, 1, 1), 3, 3)
    # not weakly decreasing
    assert not partitions.is_gordon((1, 2), 3, 3)
    # nonpositive part
    assert not partitions.is_gordon((2, 0), 3, 3)


def test_is_gordon_matches_bruteforce():
    for k in (2, 3, 4):
        for a in range(1, k + 1):
            for n in range(11):
                for p in gen_partitions(n):
                    assert partitions.is_gordon(p, k, a) == window_ok(p, k, a)


def test_satisfies_parity():
    assert partitions.satisfies_parity((4, 4, 3), "even")
    assert not partitions.satisfies_parity((4, 3), "even")
    assert partitions.satisfies_parity((5, 5, 4), "odd")
    assert partitions.satisfies_parity((7, 2), "none")
    assert partitions.satisfies_parity((), "even")
    with pytest.raises(partitions.ParameterError):
        partitions.satisfies_parity((1,), "both")


def test_enumerate_family_fixed_cases():
    assert partitions.enumerate_family("B", 3, 3, 5) == [
        (5,), (4, 1), (3, 2), (3, 1, 1)]
    assert partitions.enumerate_family("W", 3, 3, 5) == [(5,), (3, 1, 1)]
    assert partitions.enumerate_family("Wbar", 3, 2, 4) == [(4,), (2, 2)]
    assert partitions.enumerate_family("B", 2, 2, 0) == [()]


def test_enumerate_family_matches_bruteforce():
    for k in (2, 3, 4, 5):
        for a in range(1, k + 1):
            for n in range(13):
                for family in ("B", "W", "Wbar"):
                    got = partitions.enumerate_family(family, k, a, n)
                    want = brute_family(family, k, a, n)
                    assert got == want, (family, k, a, n)


def test_enumeration_order_is_descending_lex():
    out = partitions.enumerate_family("B", 4, 4, 9)
    assert out == sorted(out, reverse=True)
    assert len(set(out)) == len(out)


def test_counts_match_enumeration_and_dp():
    for k in (2, 3, 4):
        for a in range(1, k + 1):
            for family in ("B", "W", "Wbar"):
                counts = partitions.family_counts(family, k, a, 14)
                for n in range(15):
                    assert counts[n] == len(brute_family(family, k, a, n))
                    assert partitions.count_family(family, k, a, n) == counts[n]


def test_count_a_against_bruteforce():
    for k in (2, 3, 4):
        for a in range(1, k + 1):
            counts = partitions.family_counts("A", k, a, 12)
            for n in range(13):
                assert counts[n] == brute_count_a(k, a, n)
                assert partitions.count_family("A", k, a, n) == counts[n]


def test_count_fixed_cases():
    assert partitions.count_family("A", 2, 2, 4) == 2
    assert partitions.count_family("B", 2, 2, 4) == 2
    assert partitions.count_family("B", 4, 2, 0) == 1


def test_families_a_and_b_agree():
    for k in (2, 3, 4):
        for a in range(1, k + 1):
            b = partitions.family_counts("B", k, a, 18)
            av = partitions.family_counts("A", k, a, 18)
            assert av == b, (k, a)


def test_count_monotone_in_a():
    for k in (2, 3, 4):
        for n in range(12):
            row = [partitions.count_family("B", k, a, n) for a in range(1, k + 1)]
            assert row == sorted(row)


def test_w_with_k2_has_only_odd_parts():
    # distinctness from the k=2 window rule plus the parity filter leaves
    # no room for even parts at all
    for n in range(16):
        for p in partitions.enumerate_family("W", 2, 2, n):
            assert all(x % 2 == 1 for x in p)


def test_enumerate_distinct():
    assert partitions.enumerate_distinct(0) == [()]
    assert partitions.enumerate_distinct(5) == [(5,), (4, 1), (3, 2)]
    assert partitions.enumerate_distinct(6, part_parity="even") == [(6,), (4, 2)]
    assert partitions.enumerate_distinct(6, part_parity="odd") == [(5, 1)]
    for n in range(12):
        got = partitions.enumerate_distinct(n)
        want = [p for p in gen_partitions(n) if len(set(p)) == len(p)]
        assert got == want


def test_parameter_errors():
    with pytest.raises(partitions.ParameterError):
        partitions.is_gordon((1,), 1, 1)
    with pytest.raises(partitions.ParameterError):
        partitions.enumerate_family("B", 3, 0, 4)
    with pytest.raises(partitions.ParameterError):
        partitions.enumerate_family("B", 3, 4, 4)
    with pytest.raises(partitions.ParameterError):
        partitions.enumerate_family("A", 3, 3, 4)
    with pytest.raises(partitions.ParameterError):
        partitions.count_family("X", 3, 3, 4)
    with pytest.raises(partitions.ParameterError):
        partitions.count_family("B", 3, 3, -1)
