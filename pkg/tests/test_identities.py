"""The three identity families and their principal specializations."""

from fractions import Fraction
from math import comb

import pytest

from dynkindex.identities import instance, lhs, rhs_sl, rhs_so, rhs_sp, sweep
from dynkindex.orbits import enumerate_orbits, partitions_of
from dynkindex.sl2 import index_via_adjoint


def c3(m):
    return comb(m, 3) if m >= 3 else 0


def test_lhs():
    assert lhs((4,)) == 10
    assert lhs((2, 1, 1)) == 1
    assert lhs((3, 2, 2, 1)) == 6


def test_rhs_sl_examples():
    assert rhs_sl((4,)) == Fraction(c3(8) + c3(6) + c3(4) + c3(2), 8) == 10
    assert rhs_sl((1,)) == 0
    assert rhs_sl((2, 2)) == 2


def test_rhs_sp_examples():
    # single-row case reduces to the even-part principal specialization
    assert rhs_sp((4,)) == Fraction(c3(8) + c3(4), 6) == 10
    assert rhs_sp((1, 1)) == 0


def test_rhs_so_examples():
    assert rhs_so((5, 1)) == lhs((5, 1)) == c3(6)
    with pytest.raises(ValueError):
        rhs_so((2,))
    with pytest.raises(ValueError):
        rhs_so((1, 1))


def test_principal_specializations():
    # single block of size N inside sl_N
    for n in range(1, 31):
        assert Fraction(sum(c3(2 * n - 2 * k) for k in range(n)), 2 * n) == c3(n + 1)
    # single block of size 2n inside sp_2n
    for n in range(1, 16):
        assert Fraction(
            sum(c3(4 * n - 4 * k) for k in range(n)), 2 * n + 2
        ) == c3(2 * n + 1)
    # blocks (2n-1, 1) inside so_2n
    for n in range(2, 16):
        total = c3(2 * n) + sum(c3(4 * n - 4 * k) for k in range(1, n))
        assert Fraction(total, 2 * n - 2) == c3(2 * n)


@pytest.mark.parametrize("family", ["sl", "sp", "so"])
def test_sweeps_have_no_counterexamples(family):
    instances = sweep(family, 12)
    assert all(inst.holds for inst in instances)
    # every partition present except the so degenerations at n = 2
    expected = sum(
        len(list(partitions_of(n)))
        for n in range(1, 13)
        if not (family == "so" and n == 2)
    )
    assert len(instances) == expected


def test_sweep_is_deterministic():
    first = sweep("sp", 8)
    second = sweep("sp", 8)
    assert first == second


def test_identities_agree_with_adjoint_route_on_admissible_partitions():
    rhs = {"sl": rhs_sl, "sp": rhs_sp, "so": rhs_so}
    for kind in ("sl", "sp", "so"):
        for n in range(3, 11):
            if kind == "sp" and n % 2:
                continue
            for p in enumerate_orbits(kind, n):
                if p[0] < 2:
                    continue
                # the expanded right side equals the adjoint-route value up
                # to the kind factor (1 for sl/sp, 1/2 for so)
                factor = Fraction(1, 2) if kind == "so" else Fraction(1)
                assert factor * rhs[kind](p) == index_via_adjoint(kind, p), (kind, p)


def test_instance_record():
    inst = instance("sl", (3, 1))
    assert inst.family == "sl" and inst.partition == (3, 1)
    assert inst.lhs == 4 and inst.rhs == 4 and inst.holds


def test_json_lines_export():
    import json

    from dynkindex.identities import to_json_lines

    text = to_json_lines(sweep("so", 4))
    rows = [json.loads(line) for line in text.strip().splitlines()]
    assert all(set(r) == {"family", "partition", "lhs", "rhs", "holds"} for r in rows)
    assert rows[0] == {
        "family": "so", "partition": [1], "lhs": "0", "rhs": "0", "holds": True,
    }
    assert all(r["holds"] for r in rows)
    assert to_json_lines([]) == ""
