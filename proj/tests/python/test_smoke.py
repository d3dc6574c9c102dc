import pytest

import curvemoduli as cm

X0 = {"degree": 1, "terms": {"1,0,0": "1"}}
X1 = {"degree": 1, "terms": {"0,1,0": "1"}}
X2 = {"degree": 1, "terms": {"0,0,1": "1"}}
ZERO1 = {"degree": 1, "terms": {}}
ZERO2 = {"degree": 2, "terms": {}}

WORKED = {
    "d": 3,
    "z1": X1,
    "z2": X2,
    "q1": {"degree": 2, "terms": {"1,1,0": "1"}},
    "q2": {"degree": 2, "terms": {"0,0,2": "1"}},
}

DIR_XI0 = {"d": 3, "z1": X0, "z2": ZERO1, "q1": ZERO2, "q2": ZERO2}
DIR_XI00 = {
    "d": 3,
    "z1": ZERO1,
    "z2": ZERO1,
    "q1": {"degree": 2, "terms": {"2,0,0": "1"}},
    "q2": ZERO2,
}


def test_hilbert_table():
    assert cm.hilbert(3) == {"a": 3, "b": 1}
    assert cm.hilbert(4) == {"a": 4, "b": -1}


def test_dims_table():
    assert cm.dims(4) == {
        "dim_X": 26,
        "N": 14,
        "dim_M": 15,
        "codim_simpson": 2,
        "codim_Xprime": 2,
        "codim_Mprime": 2,
    }


def test_det_nu_singular_pipeline():
    det = cm.det(WORKED)
    assert det["degree"] == 3
    assert det["terms"] == {"0,1,2": "1", "1,1,1": "-1"}

    pair = cm.nu(WORKED)
    assert pair["point"] == ["1", "0", "0"]
    assert pair["curve"]["terms"] == {"1,1,1": "1", "0,1,2": "-1"}

    assert cm.is_singular(WORKED)

    again = cm.section(pair["curve"], pair["point"])
    back = cm.nu(again)
    assert back == pair


def test_tangency_and_presentations():
    assert not cm.tangent_contains(WORKED, DIR_XI0)
    assert cm.is_r_bundle(WORKED, DIR_XI0)

    m = cm.phi(WORKED, DIR_XI0)
    assert m["entries"][0][0]["terms"] == {"0,0,0|0,1,0": "1", "0,0,0|1,0,0": "1"}

    aut = cm.r_bundle_equivalent(WORKED, DIR_XI0, DIR_XI00)
    assert aut == {"alpha": "-1", "beta": "1", "gamma": "0"}

    eta00 = dict(DIR_XI00, q1=ZERO2, q2=DIR_XI00["q1"])
    assert cm.r_bundle_equivalent(WORKED, DIR_XI0, eta00) is None


def test_normalize_round_trip():
    skew = {
        "d": 3,
        "z1": X2,
        "z2": X1,
        "q1": {"degree": 2, "terms": {"2,0,0": "1"}},
        "q2": {"degree": 2, "terms": {"0,0,2": "1"}},
    }
    n = cm.normalize(skew)
    assert n["result"]["z1"] == X1
    assert n["result"]["z2"] == X2


def test_suite_runner_and_sampling():
    report = cm.run_suite("hilbert", degree=3, seed=1, trials=5)
    assert report["failures"] == []
    assert report["suite"] == "hilbert"

    assert "blowup" in cm.suite_names()

    a = cm.random_instances("X", 3, 42, 4)
    b = cm.random_instances("X", 3, 42, 4)
    assert a == b
    assert len(a) == 4


def test_errors_surface_as_python_exceptions():
    with pytest.raises(cm.DomainError):
        cm.hilbert(2)
    with pytest.raises(cm.ParseError):
        cm.det({"d": 3})
    with pytest.raises(cm.ParseError):
        cm.run_suite("nonsense")
