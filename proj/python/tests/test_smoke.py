from pathlib import Path

import pytest

import toroidal

CONFIGS = Path(__file__).resolve().parents[2] / "configs"


def test_sl3_twisted_algebra_passes():
    r = toroidal.verify_algebra(CONFIGS / "sl3-twisted.json")
    assert r.ok
    facts = r.summary["facts"]
    assert facts["dim_g00"] == 3
    assert facts["m0"] == 2


def test_chevalley_involution_rejected():
    r = toroidal.verify_algebra(CONFIGS / "sl2-chevalley.json")
    assert r.exit_code == 1
    entries = {e["clause"]: e["status"] for e in r.report("algebra_report.json")["report"]}
    assert entries["assumptions.assumption.1"] == "fail"


def test_check_jacobi_each_cocycle():
    for co in ["0,0", "1,0", "0,1", "1,1"]:
        assert toroidal.check_jacobi(CONFIGS / "sl3-twisted.json", cocycle=co).ok


def test_small_window_modules_and_determinism():
    a = toroidal.verify_modules(CONFIGS / "sl2-untwisted.json", window="k=1,depth=1,height=1")
    b = toroidal.verify_modules(CONFIGS / "sl2-untwisted.json", window="k=1,depth=1,height=1")
    assert a.ok
    assert set(a.summary["verdicts"].values()) == {"pass"}
    assert a.files == b.files


def test_psi_gate():
    r = toroidal.verify_modules(CONFIGS / "sl3-twisted-psi-k1.json")
    assert r.exit_code == 1
    assert r.summary["verdicts"]["params"] == "rejected"


def test_config_error():
    with pytest.raises(toroidal.ConfigError):
        toroidal.verify_algebra(CONFIGS / "sl2-untwisted.json", window="k=x")
