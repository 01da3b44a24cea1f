import pytest

from grassmod.checks import (
    PROFILES,
    REGISTRY,
    coerce_params,
    derive_seed,
    get_check,
    list_checks,
    run_check,
    run_suite,
    suite_plan,
)
from grassmod.errors import BadParams, UnknownCheck
from grassmod.reports import CheckReport


def test_every_check_has_one_anchor():
    rows = list_checks()
    assert [cid for cid, _ in rows] == sorted(REGISTRY)
    assert all(anchor and "\n" not in anchor for _, anchor in rows)
    assert len({cid for cid, _ in rows}) == len(rows)


def test_unknown_check_and_params():
    with pytest.raises(UnknownCheck):
        get_check("nope")
    with pytest.raises(BadParams):
        run_check("lemma6.delta", {"bogus": 1})
    with pytest.raises(BadParams):
        run_check("lemma6.delta", {"Nmax": "ten"})
    with pytest.raises(BadParams):
        suite_plan("medium")


def test_coerce_params_types():
    p = coerce_params(get_check("lemma6.delta"), {"p": "3,5", "Nmax": "4"})
    assert p == {"p": [3, 5], "Nmax": 4}


def test_derive_seed_depends_on_inputs():
    a = derive_seed(1, "x", {"p": [2]})
    assert a == derive_seed(1, "x", {"p": [2]})
    assert a != derive_seed(2, "x", {"p": [2]}) != derive_seed(1, "y", {"p": [2]})


@pytest.mark.parametrize("check_id,params", [
    ("lemma6.delta", {"p": "3", "Nmax": "10"}),
    ("remark1.duality", {"q": "2", "n": "4"}),
    ("lemma2.hom", {"grid": "2x3"}),
    ("prop1.decompose", {"grid": "2x3"}),
    ("lemma5.rank_one", {"q": "2,3", "n": "1,2"}),
])
def test_run_check_pass(check_id, params):
    rep = run_check(check_id, params, seed=7)
    assert rep.status == "pass", rep.reason
    assert rep.details["derived_seed"] == str(derive_seed(7, check_id, coerce_params(get_check(check_id), params)))
    assert CheckReport.from_json(rep.to_json()).to_json() == rep.to_json()


def test_simplicity_check_attaches_witness():
    rep = run_check("prop4.simple", {"q": "2", "dimV": "3"}, seed=1)
    assert rep.status == "pass" and rep.witness


def test_cap_gives_skipped():
    from grassmod.config import load_config, set_config
    set_config(load_config({"max_grassmannian": 10}))
    rep = run_check("remark1.duality", {"q": "2", "n": "4"}, seed=1)
    assert rep.status == "pass" and rep.details["skipped"] != "0"
    rep = run_check("prop1.decompose", {"grid": "3x4"}, seed=1)
    assert rep.status == "pass"
    assert rep.details["decompositions"]["3:4:2"] == "skipped: too large"
    set_config(load_config({"max_grassmannian": 0}))
    assert run_check("remark1.duality", {"q": "2", "n": "4"}, seed=1).status == "skipped"


def test_suite_plan_covers_registry():
    for profile in PROFILES:
        assert [cid for cid, _ in suite_plan(profile)] == sorted(REGISTRY)


def test_suite_workers_match_serial():
    serial = run_suite("quick", seed=5, workers=1)
    parallel = run_suite("quick", seed=5, workers=2)
    assert serial.to_json() == parallel.to_json()
    assert serial.status == "pass"


@pytest.mark.slow
def test_full_suite_passes():
    rep = run_suite("full", seed=11)
    assert rep.status == "pass", [r.summary() for r in rep.reports if r.status != "pass"]
