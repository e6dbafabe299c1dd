import qgap


def pentagonal_partition_counts(n_max):
    """p(0..n_max) via Euler's pentagonal-number recurrence (pure python)."""
    p = [0] * (n_max + 1)
    p[0] = 1
    for n in range(1, n_max + 1):
        total = 0
        k = 1
        while True:
            g1 = k * (3 * k - 1) // 2
            g2 = k * (3 * k + 1) // 2
            if g1 > n and g2 > n:
                break
            sign = -1 if k % 2 == 0 else 1
            if g1 <= n:
                total += sign * p[n - g1]
            if g2 <= n:
                total += sign * p[n - g2]
            k += 1
        p[n] = total
    return p


def test_partition_counts_match_pentagonal_recurrence():
    # n = 500 crosses the 64-bit boundary, so this also checks that
    # big values arrive as exact python ints
    n = 500
    assert qgap.partition_count(n) == pentagonal_partition_counts(n)


def test_overpartition_counts_even():
    vals = qgap.overpartition_count(12)
    assert vals[0] == 1
    assert all(v % 2 == 0 for v in vals[1:])


def test_enumerate_partitions_order():
    assert qgap.enumerate_partitions(4) == [[4], [3, 1], [2, 2], [2, 1, 1], [1, 1, 1, 1]]
    assert qgap.enumerate_partitions(0) == [[]]


def test_enumerate_overpartitions():
    over = qgap.enumerate_overpartitions(3)
    assert len(over) == 8
    assert over[0] == [(3, 1, False)]
    assert over[1] == [(3, 1, True)]


def test_missing_statistics():
    parts = [9, 9, 7, 5, 2]
    assert qgap.missing_count(parts) == 5
    assert qgap.missing_values(parts) == [1, 3, 4, 6, 8]
    assert qgap.mex(parts) == 1
    assert qgap.maex(parts) == 8
    assert qgap.maex([2, 1]) is None

    record = qgap.stats(parts, j=1, k=2)
    assert record["largest"] == 9
    assert record["missing_count"] == 5
    assert record["maex"] == 8
    assert record["nu_d_geq_k"] == 1
    assert qgap.stats([2, 1])["maex"] is None


def test_missing_table_rows():
    rows = qgap.missing_table("partitions", 1, 7)
    assert (5, 1, 2) in rows
    assert (7, 1, 4) in rows
    assert (0, 0, 1) in rows


def test_series_values():
    assert qgap.gapfree("overpartitions", 5)[5] == 10
    assert qgap.one_missing("overpartitions", 4)[4] == 6
    assert qgap.nu_d_lt_k(2, 4)[4] == 9
    assert qgap.parity_diff("partitions", 2) == [1, 1, 0]


def test_checks_pass():
    assert qgap.verify_mod3(100)["passed"]
    assert qgap.verify_mod4(100)["passed"]
    assert qgap.crosscheck_missing_tables("partitions", 2, 12)["passed"]
    assert qgap.scan_bias("partitions", 100)["passed"]
    assert qgap.check_preliminaries(60)["passed"]


def test_bad_family_raises():
    try:
        qgap.gapfree("nope", 3)
    except ValueError:
        pass
    else:
        raise AssertionError("expected ValueError")
