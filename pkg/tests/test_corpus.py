import json
import time

import pytest
from gmpy2 import mpq

from tuaxioms import unanimity_game
from tuaxioms.corpus import bundle_ids, export_bundle, run_all_witnesses, witness, witness_instances
from tuaxioms.gamefile import read_game
from tuaxioms.solutions import shapley_oracle


def test_every_fact_holds():
    t = time.perf_counter()
    report = run_all_witnesses()
    assert report.all_passed, "\n".join(report.lines())
    assert time.perf_counter() - t < 5
    assert report.lines()[-1].endswith("facts hold")


def test_bundles_have_instances():
    assert bundle_ids() == ("W1", "W2", "W3", "W4", "W5")
    for bid in bundle_ids():
        assert witness(bid).facts


def test_unknown_bundle():
    with pytest.raises(KeyError):
        witness("W99")


def test_shapley_pays_nullifying_player_minus_one_sixth():
    e2 = witness("W5").games["e2"]
    assert shapley_oracle(e2)[0] == mpq(-1, 6)


def test_witness_instances_filter_by_axiom():
    npp = witness_instances("npp")
    assert npp and all(i.axiom == "null_player_property" for i in npp)
    assert npp[0].games[0] == unanimity_game(3, [1])


def test_export_round_trips(tmp_path):
    paths = export_bundle("W1", tmp_path)
    assert paths
    for p in paths:
        name = p.stem.split("_", 1)[1]
        assert read_game(p) == witness("W1").games[name]
        assert json.loads(p.read_text())["n"] == 3


def test_failed_fact_is_reported(monkeypatch):
    import tuaxioms.corpus as corpus

    real = corpus.check_fact
    monkeypatch.setattr(corpus, "check_fact", lambda b, f: (False, "forced") if b.id == "W2" else real(b, f))
    report = corpus.run_all_witnesses()
    assert not report.all_passed
    assert {r.bundle for r in report.failures()} == {"W2"}
