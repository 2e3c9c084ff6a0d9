from fractions import Fraction

import pytest

import liecartan as lc


def test_sl2_bracket_and_killing():
    g = lc.fixture("sl2")
    assert g.dim == 3
    assert g.labels == ["h", "e", "f"]
    assert g.bracket([0, 1, 1], [1, 0, 0]) == [0, -2, 2]
    k = g.killing_form()
    assert k == [[8, 0, 0], [0, 0, 4], [0, 4, 0]]
    assert all(isinstance(x, Fraction) for row in k for x in row)


def test_radicals_and_levi():
    g = lc.fixture("e2")
    assert lc.radical(g) == [[1, 0, 0], [0, 1, 0], [0, 0, 1]]
    assert lc.nilradical(g) == [[0, 1, 0], [0, 0, 1]]
    assert lc.is_solvable(g) and not lc.is_semisimple(g)
    d = lc.levi_decomposition(lc.fixture("sl2xh3_twisted"))
    assert len(d["levi"]) == 3 and len(d["radical"]) == 3


def test_cartan_methods():
    g = lc.fixture("sl2xR2R")
    h = lc.cartan_subalgebra(g, "composite")
    assert h["basis"] == [[1, 0, 0, 0, 0, 0], [0, 0, 0, 0, 0, 1]]
    assert h["labels"] == ["h", "w"]
    assert lc.is_cartan_subalgebra(g, h["basis"])
    assert lc.cartan_subalgebra(g)["dim"] == 2
    chain = lc.cartan_subalgebra(lc.fixture("e2"), "chain", start=[["1", "0", "0"]])
    assert chain["dim"] == 1


def test_quotient_roundtrip():
    g = lc.fixture("sl2xR2")
    q = lc.quotient(g, [[0, 0, 0, 1, 0], [0, 0, 0, 0, 1]])
    assert q["algebra"].dim == 3
    assert lc.is_semisimple(q["algebra"])
    assert len(q["pushed_csa"]) == 1
    assert q["roundtrip"]


def test_powermap():
    assert not lc.pk_surjective(1, 0, [2], 2)
    assert lc.pk_surjective(1, 0, [2], 3)
    sl2r = str(lc.data_dir() / "models" / "sl2r.json")
    assert [lc.power_map_dense(sl2r, k) for k in range(1, 7)] == [True, False, True, False, True, False]


def test_errors_carry_codes():
    with pytest.raises(lc.LieCartanError) as info:
        lc.quotient(lc.fixture("sl2"), [[1, 0, 0]])
    assert info.value.code == "NotIdeal"
    with pytest.raises(lc.LieCartanError):
        lc.LieAlgebra.from_json('{"dim":2,"basis":["x","y"],"brackets":{"0,1":{"1":0.5}}}')


def test_verify_and_cli():
    report = lc.verify([lc.data_dir() / "algebras" / "aff1.json"])
    assert report["summary"]["failed"] == 0
    assert report["summary"]["checks"] > 0
    code, out, err = lc.run_cli(["powermap", str(lc.data_dir() / "models" / "sl2r.json"), "--k", "2"])
    assert code == 0
    assert "dense: false (class 2 fails: order 2)" in out
