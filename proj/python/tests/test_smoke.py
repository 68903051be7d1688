import math

import pytest

import qrep


def test_certify_odd_level():
    cert = qrep.certify(7)
    assert cert["route"] == "odd_burau"
    assert cert["boundary_color"] == 2


def test_certify_even_level():
    cert = qrep.certify(40)
    assert cert["route"] == "even_coxeter"
    assert cert["signature"] == [4, 1]
    assert any("120" in n for n in cert["notes"])


def test_uncertified_levels():
    bad = [p for p in range(1, 61) if qrep.certify(p)["route"] == "uncertified"]
    assert bad == [1, 2, 3, 4, 5, 6, 8, 10, 12, 20]


def test_blocks():
    assert qrep.tadpole_basis(2, 16) == [1, 2, 3, 4, 5]
    assert qrep.block_dimension("vertices=1; edges=0-0; tails=0:4", 9) == 2


def test_roots_and_gram():
    assert qrep.quantum_integer_sign(1, 7) == 1
    order, exponent = qrep.twist_eigenvalue(2, 7)
    assert order == 14
    assert qrep.gram_signs(16, 3) == "(+,+,-,+,+)"
    assert qrep.find_indefinite_ell(16) == 3
    assert qrep.find_indefinite_ell(20) is None


def test_burau():
    assert qrep.burau_closure(5) == (True, 600)
    finite, _ = qrep.burau_closure(7)
    assert not finite


def test_veech():
    r = qrep.veech("A:3")
    assert math.isclose(r["perron"]["mu"], math.sqrt(2), abs_tol=1e-9)
    assert r["class"] == "recessive"


def test_orbits():
    assert qrep.count_orbits(4, 0) == 3
    r = qrep.orbits(4, 0)
    assert r["h2_bounds"]["lower_rank"] == 3
    assert r["h2_bounds"]["upper_bound"] == 4


def test_errors():
    with pytest.raises(qrep.NonHyperbolic):
        qrep.count_orbits(0, 2)
    with pytest.raises(qrep.ParseError):
        qrep.block_dimension("vertices=1; edges=0-0; tails=0:x", 5)
    with pytest.raises(qrep.QrepError):
        qrep.tadpole_basis(3, 7)


def test_cli():
    code, out, _ = qrep.run_cli(["orbits", "3", "1"])
    assert code == 0
    assert "N: 3" in out
    code, _, _ = qrep.run_cli(["orbits", "0", "2"])
    assert code == 2
