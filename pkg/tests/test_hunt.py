import json

import pytest

from domhad.catalog import catalog
from domhad.graph import complement
from domhad.graph6 import to_graph6
from domhad.hunt import (
    HuntConfig,
    HuntError,
    HuntInterrupted,
    IngestError,
    enumerate_alpha2,
    ingest,
    run_hunt,
    strip_run,
)
from domhad.invariants import alpha_le_2


def test_enumerate_counts():
    assert sum(1 for _ in enumerate_alpha2(4)) == 7
    assert sum(1 for _ in enumerate_alpha2(5)) == 14
    with pytest.raises(ValueError):
        next(enumerate_alpha2(13))


def test_ingest(tmp_path):
    p = tmp_path / "g.g6"
    p.write_text("".join(to_graph6(catalog(x)) + "\n" for x in ("C_5", "K_4", "W_5")))
    assert len(list(ingest(p))) == 3
    bad = tmp_path / "bad.g6"
    bad.write_text("D?{\nDx\n")
    with pytest.raises(IngestError) as err:
        list(ingest(bad))
    assert err.value.line == 2 and ":2:" in str(err.value)


def test_ingest_complement_and_rejections(tmp_path):
    p = tmp_path / "tf.g6"
    p.write_text("".join(to_graph6(g) + "\n" for g in (catalog("C_5"), catalog("petersen"), catalog("K_3"))))
    src = ingest(p, require_alpha2=True, complement=True)
    out = list(src)
    assert len(out) == 2 and all(alpha_le_2(g) for g in out) and src.rejected == 1


def test_config_hash_ignores_run_settings():
    a = HuntConfig(n_max=5, workers=1, output="a")
    b = HuntConfig(n_max=5, workers=8, output="b", checkpoint_every=3)
    assert a.hash() == b.hash()
    assert a.hash() != HuntConfig(n_max=6).hash()


def test_config_validation():
    with pytest.raises(HuntError):
        HuntConfig(predicate="bogus").validate()
    with pytest.raises(HuntError):
        HuntConfig(n_max=14).validate()
    with pytest.raises(HuntError):
        HuntConfig.from_json({"n_max": 3, "colour": "red"})


def test_counts_and_filters(tmp_path):
    r = run_hunt(HuntConfig(n_max=6, predicate="ddm"))
    assert r.total("fail") == 0
    assert [r.counts[str(n)]["enumerated"] for n in range(1, 7)] == [1, 2, 3, 7, 14, 38]
    f = run_hunt(HuntConfig(n_min=5, n_max=6, free_of=["C_4"], omega_range=[2, 3]))
    assert f.total("filtered_in") < f.total("enumerated")


def test_worker_count_and_resume_identical(tmp_path):
    def cfg(tag, **kw):
        return HuntConfig(n_max=6, checkpoint=str(tmp_path / f"{tag}.ck"), output=str(tmp_path / f"{tag}.json"),
                          checkpoint_every=7, **kw)

    run_hunt(cfg("one", workers=1))
    run_hunt(cfg("two", workers=2))
    c = cfg("kill")
    with pytest.raises(HuntInterrupted):
        run_hunt(c, halt_after=20)
    assert not (tmp_path / "kill.json").exists()
    run_hunt(c, resume=True)
    texts = [strip_run((tmp_path / f"{t}.json").read_text()) for t in ("one", "two", "kill")]
    assert texts[0] == texts[1] == texts[2]
    assert json.loads((tmp_path / "kill.json").read_text())["run"]["resumed"]


def test_resume_rejects_foreign_checkpoint(tmp_path):
    ck = str(tmp_path / "c.ck")
    run_hunt(HuntConfig(n_max=4, checkpoint=ck))
    with pytest.raises(HuntError):
        run_hunt(HuntConfig(n_max=5, checkpoint=ck), resume=True)


def test_budget_exhausted_goes_to_retry(tmp_path):
    retry = tmp_path / "retry.g6"
    r = run_hunt(HuntConfig(n_min=7, n_max=7, predicate="equiv", budget=1, retry=str(retry)))
    assert r.total("budget-exhausted") == len(r.retries) > 0
    assert len(retry.read_text().split()) == len(r.retries)


def test_violations_recorded_with_witness(tmp_path):
    # hypothesis-free target on non-alpha<=2 input: the subdivided K_4 fails h_d >= ceil(n/2)
    from domhad.graph import subdivide_once

    p = tmp_path / "in.g6"
    p.write_text(to_graph6(complement(subdivide_once(catalog("K_4")))) + "\n")
    r = run_hunt(HuntConfig(n_min=10, n_max=10, predicate="target:half", input=str(p), input_complement=True))
    # the complement flag restores the subdivision, which has alpha > 2 and is rejected
    assert r.ingest_rejected == 1 and r.total("enumerated") == 0
