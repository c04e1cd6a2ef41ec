import pytest

import magiccones as mc


def test_magic3_basis_and_series():
    sys3 = mc.build_system("magic", n=3)
    hb = mc.hilbert_basis(sys3)
    assert len(hb["elements"]) == 5
    series = mc.hilbert_series(hb)
    assert mc.expand_series(series, 9) == [1, 0, 0, 5, 0, 0, 13, 0, 0, 25]


def test_count_and_formula_agree():
    sys3 = mc.build_system("magic", n=3)
    assert mc.quasi_period(sys3) == 3
    qp = mc.formula_from_oracle(sys3, 3, 2)
    for s in range(0, 13):
        assert mc.evaluate(qp, s) == mc.count_points(sys3, s)


def test_interpolate_round_trip():
    samples = {s: (s + 1) * (s + 2) // 2 for s in range(3)}
    qp = mc.interpolate(samples, 1, 2)
    assert mc.evaluate(qp, 10) == 66
    assert "s" in mc.format_formula(qp)


def test_graph_labelings():
    cone = mc.labeling_cone(mc.graph("petersen"))
    assert mc.count_points(cone, 0) == 1
    assert mc.count_points(cone, 1) == 6


def test_membership():
    sys3 = mc.build_system("magic", n=3)
    assert mc.verify_member(sys3, [[2, 7, 6], [9, 5, 1], [4, 3, 8]]) == (True, 15)
    member, _ = mc.verify_member(sys3, [[1, 2, 3], [4, 5, 6], [7, 8, 9]])
    assert not member


def test_group_order():
    assert mc.group_order("G8") == 256
    assert mc.group_order("H16") == 110075314176


def test_errors_map_to_python_exceptions():
    with pytest.raises(mc.InvalidArgument):
        mc.build_system("no-such-family", n=3)
    with pytest.raises(mc.MagicError):
        mc.interpolate({0: 1}, 1, 3)
