import itertools
import json

import jsonschema
import pytest

from maxgenus.fields import GF, QQ
from maxgenus.poly import WT, XYZ, PolyRing
from maxgenus.verify import (REPORT_SCHEMA, MethodDisagreement, VerifyConfig, exit_code,
                             g_support, random_g, report_csv, report_json, run_trial,
                             run_verify, strip_timings)
import maxgenus.verify as verify_mod

M3_SUPPORT = {(0, 0, 3), (3, 0, 2), (1, 1, 2), (6, 0, 1), (4, 1, 1),
              (2, 2, 1), (0, 3, 1), (3, 3, 0), (1, 4, 0)}


def test_random_g_support():
    g = random_g(2, GF(32003), 0)
    assert set(g.terms) <= {(0, 0, 2), (3, 0, 1), (1, 1, 1), (0, 3, 0)}
    assert g.coeff((0, 0, 2)) == 1
    assert set(random_g(3, GF(32003), 0).terms) <= M3_SUPPORT
    assert set(g_support(3)) | {(0, 0, 3)} == M3_SUPPORT


@pytest.mark.parametrize("m", range(2, 10))
def test_random_g_contract(m):
    for field in (GF(2), GF(32003), QQ):
        g = random_g(m, field, [m, 1])
        assert g == random_g(m, field, [m, 1])
        assert g.is_homogeneous(WT, 3 * m)
        assert g.coeff((0, 0, m)) == 1
        assert not field.is_zero(g.coeff((3 * (m - 1), 0, 1)))
        assert all(c < m or mono == (0, 0, m) for mono in g.terms for c in [mono[2]])
        assert all(a + b <= 3 * (m - 1) for a, b, _ in g.terms)


def test_rational_coefficients_are_bounded():
    g = random_g(5, QQ, 3)
    assert all(abs(c) <= QQ.sample_bound for c in g.terms.values())


def test_config_validation():
    with pytest.raises(ValueError):
        VerifyConfig(methods=())
    with pytest.raises(ValueError):
        VerifyConfig(methods=("magic",))
    with pytest.raises(ValueError):
        VerifyConfig(trials=0)
    with pytest.raises(ValueError):
        VerifyConfig(m_min=1)
    cfg = VerifyConfig(methods=("groebner", "phi"))
    assert cfg.methods == ("phi", "groebner")
    assert cfg.methods_for(5) == ("phi", "direct", "groebner")
    assert cfg.methods_for(6) == ("phi", "groebner")


def test_sweep_report():
    rep = run_verify(VerifyConfig(m_min=2, m_max=5, trials=2))
    jsonschema.validate(rep, REPORT_SCHEMA)
    assert rep["summary"] == {"verified_m": [2, 3, 4, 5], "inconclusive_m": []}
    assert exit_code(rep) == 0
    assert [(r["m"], r["trial"]) for r in rep["records"]] == \
        [(m, t) for m in range(2, 6) for t in range(2)]
    for r in rep["records"]:
        assert r["verdicts"] == {"phi": True, "direct": True}
        assert r["prime"] == 32003


def test_all_methods_agree_small_field():
    rep = run_verify(VerifyConfig(m_min=2, m_max=4, prime=3, trials=6,
                                  methods=("phi", "direct", "groebner")))
    jsonschema.validate(rep, REPORT_SCHEMA)
    statuses = {r["status"] for r in rep["records"]}
    assert statuses <= {"good", "bad"} and "bad" in statuses
    for r in rep["records"]:
        if r["status"] == "bad":
            assert r["witness_certified"] is True
            assert r["singular_weights"]


def test_all_zero_coefficient_tuples_are_bad():
    F = GF(5)
    monos = [(3, 0, 1), (1, 1, 1), (0, 3, 0)]
    ring = PolyRing(XYZ, F)
    for coeffs in itertools.product(range(5), repeat=3):
        if all(coeffs):
            continue
        g = ring.from_terms([((0, 0, 2), 1)] + list(zip(monos, coeffs)))
        out = run_trial(g, 2, ("phi", "direct", "groebner"))
        assert out["verdicts"] == {"phi": False, "direct": False, "groebner": False}


def test_inconclusive_exit_code():
    rep = run_verify(VerifyConfig(m_min=2, m_max=3, prime=2, trials=1, seed=4))
    bad = [r["m"] for r in rep["records"] if r["status"] == "bad"]
    assert rep["summary"]["inconclusive_m"] == sorted(set(bad))
    assert exit_code(rep) == (1 if bad else 0)


def test_determinism_and_parallel_independence():
    cfg = VerifyConfig(m_min=2, m_max=6, trials=2, seed=11)
    a = strip_timings(run_verify(cfg))
    b = strip_timings(run_verify(cfg))
    c = strip_timings(run_verify(VerifyConfig(m_min=2, m_max=6, trials=2, seed=11, jobs=2)))
    assert report_json(a) == report_json(b) == report_json(c)


def test_rationals():
    rep = run_verify(VerifyConfig(m_min=2, m_max=3, prime=None, trials=1,
                                  methods=("phi", "groebner")))
    assert rep["records"][0]["prime"] is None and rep["records"][0]["field"] == "QQ"
    assert exit_code(rep) == 0


def test_disagreement_is_a_hard_error(monkeypatch):
    real = verify_mod.run_trial

    def lying(g, m, methods):
        out = real(g, m, methods)
        out["verdicts"]["phi"] = not out["verdicts"]["phi"]
        return out

    monkeypatch.setattr(verify_mod, "run_trial", lying)
    with pytest.raises(MethodDisagreement) as exc:
        run_verify(VerifyConfig(m_min=2, m_max=2, trials=1))
    assert exc.value.record["g"] and exc.value.record["m"] == 2


def test_timeout_marks_trials_inconclusive():
    rep = run_verify(VerifyConfig(m_min=14, m_max=14, trials=1, timeout=0.01))
    assert rep["records"][0]["status"] == "timeout"
    assert rep["summary"]["inconclusive_m"] == [14]
    jsonschema.validate(rep, REPORT_SCHEMA)


def test_csv_report():
    rep = run_verify(VerifyConfig(m_min=2, m_max=3, trials=1))
    lines = report_csv(rep).splitlines()
    assert lines[0].startswith("m,trial,seed,prime,status,phi,direct,groebner")
    assert len(lines) == 3 and lines[1].startswith("2,0,0,32003,good,True,True,")
    json.loads(report_json(rep))
