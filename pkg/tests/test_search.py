import json

import pytest

from gaussabund.divfunc import abundancy, are_friendly
from gaussabund.errors import CheckpointError, DomainError
from gaussabund.gint import GaussianInt as G, parse_gaussian
from gaussabund.search import (
    SearchTask,
    enumerate_canonical,
    records_to_jsonl,
    run_search,
    search_friendly,
    search_norm_perfect,
    search_tau_perfect,
    verify_record,
)
from gaussabund.solitary import greening_check
from tests import oracles


def test_enumerate_examples():
    assert list(enumerate_canonical(1, 2)) == [G(1), G(1, 1)]
    assert list(enumerate_canonical(5, 5)) == [G(2, 1), G(1, 2)]


@pytest.mark.parametrize("n", [1, 2, 10, 999, 1000, 1001, 2500])
def test_enumerate_count_matches_r2(n):
    assert sum(1 for _ in enumerate_canonical(1, n)) == sum(oracles.r2(m) for m in range(1, n + 1)) // 4


def test_enumerate_is_the_canonical_lattice():
    got = [(z.re, z.im) for z in enumerate_canonical(900, 2100)]
    assert sorted(got) == sorted(oracles.canonical_lattice(900, 2100))
    keys = [(a * a + b * b, b) for a, b in got]
    assert keys == sorted(keys)


@pytest.mark.parametrize(
    "task",
    [
        SearchTask("bogus", 1, 1, 10),
        SearchTask("friendly", 0, 1, 10),
        SearchTask("friendly", 1, 0, 10),
        SearchTask("friendly", 1, 10, 5),
        SearchTask("tau_perfect", 1, 1, 10, tau=G(0, 1)),
        SearchTask("norm_perfect", 1, 1, 10, t=1),
        SearchTask("friendly", 1, 1, 10, t=2),
    ],
)
def test_invalid_tasks(task):
    with pytest.raises(DomainError):
        run_search(task)


def test_norm_perfect_witness():
    recs = search_norm_perfect(SearchTask("norm_perfect", 1, 1, 10, t=2))
    assert "2+i" in [r["eta"] for r in recs]
    assert "1-2i" not in [r["eta"] for r in recs]
    assert all(verify_record(r) for r in recs)
    with pytest.raises(DomainError):
        search_tau_perfect(SearchTask("norm_perfect", 1, 1, 10))


def test_units_only_range():
    assert search_tau_perfect(SearchTask("tau_perfect", 1, 1, 1)) == []
    assert search_friendly(SearchTask("friendly", 1, 1, 1)) == []


def test_k1_hits_reverify_independently():
    tau = run_search(SearchTask("tau_perfect", 1, 1, 3000))
    norm = run_search(SearchTask("norm_perfect", 1, 1, 3000))
    assert tau.records and norm.records
    for r in tau.records + norm.records:
        assert verify_record(r)
        z = parse_gaussian(r["eta"])
        index = abundancy(z, 1)
        if r["kind"] == "tau_perfect":
            # tau * eta == sigma_1 up to a unit: check with the float oracle
            assert parse_gaussian(r["tau"]) == index.to_gaussian_int()
        else:
            assert index.norm() == r["t"]


def test_tampered_record_fails_verification():
    rec = run_search(SearchTask("norm_perfect", 1, 1, 10, t=2)).records[0]
    bad = dict(rec, t=3)
    assert not verify_record(bad)


def test_k2_empty_and_max_reported():
    res = run_search(SearchTask("norm_perfect", 2, 1, 2000))
    assert res.records == [] and not res.inconsistent
    assert res.max_norm == abundancy(res.argmax, 2).norm()


def test_friendly_groups():
    res = run_search(SearchTask("friendly", 1, 1, 2500))
    assert res.records
    certified = set()
    for r in res.records:
        assert verify_record(r)
        members = [parse_gaussian(r["eta"])] + [parse_gaussian(p) for p in r["partners"]]
        for a in members:
            if greening_check(a, 1).certified:
                certified.add(a)
            for b in members:
                if a != b:
                    f = are_friendly(a, b, 1)
                    assert f.friendly and not f.associates
    # the gcd criterion does not imply solitarity here: 2+2i passes it yet
    # shares its index with 24+24i
    assert certified == {G(2, 2)}


def test_resume_is_byte_identical(tmp_path):
    task = SearchTask("norm_perfect", 1, 1, 4500)
    straight = records_to_jsonl(run_search(task).records)
    path = str(tmp_path / "s.jsonl")
    part = run_search(task, path, max_blocks=1)
    assert not part.complete and part.blocks_done == 1
    with open(path, "a") as fh:
        fh.write('{"type":"record","eta":"2')
    resumed = run_search(task, path)
    assert resumed.complete
    assert records_to_jsonl(resumed.records) == straight


def test_parallel_matches_serial():
    task = SearchTask("friendly", 1, 1, 4000)
    serial = records_to_jsonl(run_search(task).records)
    assert records_to_jsonl(run_search(task, workers=3).records) == serial


def test_checkpoint_errors(tmp_path):
    task = SearchTask("norm_perfect", 1, 1, 1500)
    path = tmp_path / "s.jsonl"
    run_search(task, str(path), max_blocks=1)
    with pytest.raises(CheckpointError):
        run_search(SearchTask("norm_perfect", 1, 1, 1600), str(path))
    lines = path.read_text().splitlines()
    path.write_text(lines[0] + "\nnot json\n")
    with pytest.raises(CheckpointError):
        run_search(task, str(path))
    path.write_text(json.dumps({"type": "block", "lo": 1}) + "\n")
    with pytest.raises(CheckpointError):
        run_search(task, str(path))


def test_empty_state_file_starts_fresh(tmp_path):
    path = tmp_path / "s.jsonl"
    path.write_text("")
    task = SearchTask("norm_perfect", 1, 1, 50)
    assert run_search(task, str(path)).complete
    header = json.loads(path.read_text().splitlines()[0])
    assert header["type"] == "header" and header["fingerprint"] == task.fingerprint()


def test_task_json_round_trip():
    task = SearchTask("tau_perfect", 1, 5, 100, tau=G(2, -1))
    assert SearchTask.from_json(task.to_json()) == task
    assert task.fingerprint() != SearchTask("tau_perfect", 1, 5, 101, tau=G(2, -1)).fingerprint()
