import pytest

from cbu._exceptions import InvalidOptionError
from cbu._selftest import SelftestReport, connected_graphs, random_corpus, selftest


QUICK_CHECKS = {
    "oracle equivalence",
    "triangles are not CBU",
    "bipartite graphs are CBU",
    "shift graph representation",
    "grid representation",
    "double subdivision representation",
    "labeling to representation",
    "homomorphism transfer",
    "fractional bound on members",
    "fractional bound on shift graphs",
}


def test_connected_graphs():
    # 1, 1, 2 and 6 connected graphs on 1 .. 4 vertices
    assert len(list(connected_graphs(4))) == 10
    assert all(g.is_connected() for g in connected_graphs(5))


def test_random_corpus_is_deterministic():
    first = random_corpus(10, seed=7)
    assert first == random_corpus(10, seed=7)
    assert first != random_corpus(10, seed=8)
    assert all(3 <= g.n <= 8 for g in first)


def test_report():
    report = SelftestReport("quick", 1, checks={"a": 2})
    assert report.ok and report
    report.failures.append("a: C4: broken")
    assert not report
    assert report.to_dict() == {
        "level": "quick",
        "seed": 1,
        "ok": False,
        "checks": {"a": 2},
        "failures": ["a: C4: broken"],
    }


def test_quick_selftest():
    report = selftest("quick", seed=3)
    assert report.failures == []
    assert set(report.checks) == QUICK_CHECKS
    assert report.checks["shift graph representation"] == 4
    assert report.checks["oracle equivalence"] == 31


def test_invalid_level():
    with pytest.raises(InvalidOptionError, match="selftest level"):
        selftest("thorough")


@pytest.mark.slow
def test_full_selftest():
    report = selftest("full")
    assert report.ok, report.failures
    assert report.checks["G3 is not CBU"] == 1
