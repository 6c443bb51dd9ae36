import math

import pytest

import dirichlet_ap as da


def test_character_group_mod_5():
    chars = da.enumerate_characters(5)
    assert [c.character_class for c in chars].count("principal") == 1
    assert len(chars) == 4
    assert chars[0].label == "chi[k=5;c=0]"
    assert da.parse_character(chars[2].label) == chars[2]


def test_index_system_round_trip():
    f = da.factorize_modulus(24)
    assert f.group_order == 8
    assert da.index_system(7, 24) == da.index_system(7 + 24, 24)


def test_l_one_mod_4_is_pi_over_4():
    chi = da.parse_character("chi[k=4;a=1]")
    integral = da.l_one_integral(chi)
    assert abs(integral["value"] - math.pi / 4) < 1e-10
    series = da.dirichlet_series(chi, 1.0, 100000)
    assert abs(series["value"] - math.pi / 4) <= series["error_bound"]


def test_principal_series_diverges_at_one():
    chi = da.enumerate_characters(3)[0]
    with pytest.raises(da.DirichletError) as info:
        da.dirichlet_series(chi, 1.0)
    assert info.value.kind == "divergent-series"


def test_quadratic_and_pell():
    assert da.pell_minus4(5) == (5, 1, 1)
    assert abs(da.l_one_quadratic(7) - math.pi / math.sqrt(7)) < 1e-12
    assert abs(abs(da.gauss_sum(13)) ** 2 - 13) < 1e-9


def test_census_and_identity():
    report = da.census(100, 3)
    assert report["counts"] == {1: 11, 2: 13}
    check = da.identity_check(8, 3, 0.5, 10000, 10000)
    assert check["passed"]
