import json
import logging

import pytest

from sbpart.errors import LimitExceeded
from sbpart.qseries import QPolynomial, stirling_B_q
from sbpart.verify import CLAIMS, DistributionCache, DistributionKey, check, distribution, dualmaj_scan, replay
from sbpart.verify.cache import key_checksum
from sbpart.verify.claims import COUNTEREXAMPLE, INDETERMINATE, VERIFIED, format_scan
from sbpart.verify.distribution import compute
from sbpart.verify.oracles import dowling, fubini


def test_oracles():
    assert [dowling(n) for n in range(6)] == [1, 2, 6, 24, 116, 648]
    assert [fubini(n) for n in range(6)] == [1, 1, 3, 13, 75, 541]


def test_distribution_examples():
    assert distribution(DistributionKey("standard", "inv", 2, 1)) == QPolynomial([2, 1, 1])
    assert distribution(DistributionKey("standard", "inv", 4, 0)) == QPolynomial([1])
    assert distribution(DistributionKey("ordered", "los_b'", 1, 1)) == QPolynomial([0, 1, 1])


def test_unknown_statistic():
    with pytest.raises(ValueError, match="not defined"):
        DistributionKey("ordered", "maj", 2, 1)
    with pytest.raises(ValueError):
        DistributionKey("sideways", "inv", 2, 1)


def test_limit(caplog):
    with pytest.raises(LimitExceeded, match="n <= 5"):
        distribution(DistributionKey("ordered", "inv", 6, 1))
    with caplog.at_level(logging.WARNING):
        distribution(DistributionKey("ordered", "inv", 6, 6), limit=6)
    assert "raised" in caplog.text


def test_parallel_matches_serial():
    key = DistributionKey("standard", "los'", 6, 3)
    assert compute(key, workers=3) == compute(key, workers=1) == stirling_B_q(6, 3).shift(12)


def test_cache_roundtrip(tmp_path):
    cache = DistributionCache(tmp_path)
    key = DistributionKey("standard", "rcb", 4, 2)
    first = distribution(key, cache=cache)
    doc = json.loads(cache.path(key).read_text())
    assert doc["checksum"] == key_checksum(key)
    assert doc["key"] == key.to_json()
    assert cache.get(key) == first
    assert distribution(key, cache=cache) == first


def test_cache_rejects_tampering(tmp_path):
    cache = DistributionCache(tmp_path)
    key = DistributionKey("standard", "inv", 3, 1)
    distribution(key, cache=cache)
    path = cache.path(key)
    doc = json.loads(path.read_text())
    doc["checksum"] = "0" * 64
    doc["coeffs"] = [99]
    path.write_text(json.dumps(doc))
    assert cache.get(key) is None
    assert distribution(key, cache=cache) == stirling_B_q(3, 1)
    path.write_text("{not json")
    assert cache.get(key) is None


def test_claim_ids():
    assert set(CLAIMS) == {
        "thmA-ros", "ss-inv-std", "ss-inv-ord", "thm-los-std", "thm-los-ord", "lemma-lob", "cor-lob",
        "equidist-ros-rcb", "equidist-rob-rcs", "lemma-f-involution", "conj-rcb-f", "srgf-bijection",
        "vector-sums", "foata-interchange", "matrix-maj", "dualmaj-scan", "count-recurrence"}


@pytest.mark.parametrize("cid", ["lemma-f-involution", "ss-inv-std", "thm-los-ord", "matrix-maj"])
def test_verified_claims(cid):
    rep = check(cid, 4, 4)
    assert rep.verdict == VERIFIED
    assert rep.witness is None
    assert len(rep.range) == 15


def test_count_recurrence_n5():
    rep = check("count-recurrence", 5, 5)
    assert rep.verdict == VERIFIED
    assert (5, 5) in rep.range


def test_rcb_shift_counterexample_replays():
    rep = check("conj-rcb-f", 4, 4)
    assert rep.verdict == COUNTEREXAMPLE
    w = rep.witness
    assert (w["n"], w["k"]) == (3, 1)
    assert w["lhs"] != w["rhs"]
    assert replay(rep)
    assert replay(json.loads(json.dumps(rep.to_json())))
    # the generating-function form survives
    assert all(rep.observed["generating_function_identity"].values())


def test_report_schema():
    doc = check("lemma-lob", 2).to_json()
    assert {"claim", "range", "verdict", "witness", "ms"} <= set(doc)
    assert doc["range"][0] == [0, 0]
    assert isinstance(doc["ms"], float)


def test_cor_lob_reports_data():
    rep = check("cor-lob", 4)
    assert rep.verdict == INDETERMINATE
    rows = rep.observed["rows"]
    # lob' is constantly k, so the standard sum is the integer count times q^k
    assert all(r["standard_matches_q^k_S_B(n,k)"] for r in rows)
    assert all(r["ordered_matches_(1+q)S_B(n,1)"] for r in rows if r["k"] == 1)
    # the general ordered formula does not hold beyond trivial rows
    assert not all(r["ordered_matches_S_B[n,k]"] for r in rows)


def test_dualmaj_scan_deterministic():
    a = dualmaj_scan(3)
    b = dualmaj_scan(3, workers=2)
    assert a.verdict == INDETERMINATE
    assert a.observed == b.observed
    assert "weak-signed-shifted-standard" in a.observed["matching_variants"]
    assert format_scan(a) == format_scan(b)


def test_dualmaj_scan_small_cases():
    zero = dualmaj_scan(0)
    assert len(zero.observed["matching_variants"]) == 16
    one = dualmaj_scan(1)
    row = [r for r in one.observed["table"]["strict-signed-shifted-ordered"] if (r["n"], r["k"]) == (1, 1)][0]
    assert row["enumerated"] == "1 + q"
    assert row["recurrence"] == "q^2"


def test_unknown_claim():
    with pytest.raises(KeyError):
        check("nope", 2)
