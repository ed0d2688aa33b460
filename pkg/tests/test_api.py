"""The package root re-exports the working surface."""

import dynkindex


def test_root_level_api():
    rs = dynkindex.build("E8")
    assert dynkindex.principal_index(rs).value == 1240
    assert dynkindex.dynkin_index(rs, (0,) * 7 + (1,)).index == 60
    assert dynkindex.classical_index("so", (7, 1)) == 28
    assert dynkindex.classical_index("so", (7, 1)) == dynkindex.index_via_adjoint(
        "so", (7, 1)
    )
    assert dynkindex.mckay_data(dynkindex.LieType("E", 8)).group_order == 120
    assert dynkindex.__version__


def test_all_names_resolve():
    for name in dynkindex.__all__:
        assert getattr(dynkindex, name) is not None
