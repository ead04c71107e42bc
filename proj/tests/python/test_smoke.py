import json
from fractions import Fraction

import pytest

import matchfield as mf


def test_poset_and_filters():
    p = mf.GrassmannPoset(2, 4)
    assert len(p) == 4
    assert len(p.filters()) == 6
    assert len(p.antichains()) == 6


def test_diagonal_field_is_induced():
    w = mf.diagonal_weight_matrix(3, 6)
    assert mf.is_generic(w)
    assert mf.induce_field(w) == mf.diagonal(3, 6)
    assert mf.diagonal(3, 6).tuple([1, 2, 3]) == [1, 2, 3]
    assert len(mf.diagonal(3, 6)) == 20


def test_weights_accept_strings_and_fractions():
    w = [[0, 0, 0, 0], ["3/2", Fraction(1, 2), 0, -1]]
    assert mf.is_generic(w)


def test_polytope_counts_match_ssyt():
    poly = mf.polytope_of_field(mf.block_diagonal(3, 6))
    assert poly.lattice_points(2) == 175
    with pytest.raises(mf.ResourceError):
        poly.lattice_points(2, max_candidates=10)


def test_ehrhart_gr25():
    e = mf.polytope_of_field(mf.fflv(2, 5)).ehrhart()
    assert e["dimension"] == 6
    assert e["counts"][:3] == [1, 10, 50]


def test_tropical_map_fraction_output():
    out = mf.tropical_map([1, 0], [[0, 0], [0, 1]], [Fraction(1, 2), Fraction(-1, 3)])
    assert out == [Fraction(1, 2) - Fraction(-1, 3), Fraction(-1, 3)]


def test_chain_gr24():
    report = mf.verify_chain(2, 4, ehrhart_depth=2)
    assert report["passed"]
    assert len(report["steps"]) == 2
    assert mf.intermediate_field(2, 4, 2) == mf.fflv(2, 4)


def test_plucker_relation_text():
    assert mf.gp_relations(2, 4) == ["P12*P34 - P13*P24 + P14*P23"]


def test_nongeneric_raises():
    with pytest.raises(mf.NonGenericError):
        mf.initial_term([[0, 0, 0], [0, 0, 0]], [1, 2])


def test_cli_roundtrip():
    code, out, err = mf.run_cli(["verify", "--k", "2", "--n", "4"])
    assert code == 0, err
    assert json.loads(out)["passed"]
    code, _, _ = mf.run_cli(["nonsense"])
    assert code == 2
