import json

import pytest

from detideals.graphs import (
    DisconnectedGraphError,
    Graph,
    canonical_graph,
    complete_graph,
    cycle_graph,
    star_graph,
    write_graph6,
)
from detideals.suites import fig2_graphs
from detideals.survey import (
    CSV_HEADER,
    cross_check,
    invariant_key,
    run_survey,
    verify_determined_by,
)

KINDS = ("adjacency", "laplacian", "distance", "distlap")


# ---------------------------------------------------------------------------
# keys


def test_fig2_keys():
    g1, g2 = fig2_graphs()
    kq1 = invariant_key(g1, "adjacency", "codet-Q")
    kq2 = invariant_key(g2, "adjacency", "codet-Q")
    assert kq1 == kq2
    kz1 = invariant_key(g1, "adjacency", "codet-Z")
    kz2 = invariant_key(g2, "adjacency", "codet-Z")
    assert kz1 != kz2
    assert invariant_key(g1, "adjacency", "cospectral") == invariant_key(
        g2, "adjacency", "cospectral"
    )


def test_distinct_spectra_distinct_keys():
    k4, c4 = complete_graph(4), cycle_graph(4)
    for mode in ("cospectral", "coinvariant", "codet-Q", "codet-Z"):
        assert invariant_key(k4, "adjacency", mode) != invariant_key(c4, "adjacency", mode)
    # distinct codet-Z keys come from genuinely different ideals at some k
    from detideals.profiles import determinantal_ideals

    pk = determinantal_ideals(k4, "adjacency", "Zx")
    pc = determinantal_ideals(c4, "adjacency", "Zx")
    assert any(not a.equal(b) for a, b in zip(pk.ideals, pc.ideals))


def test_keys_are_label_invariant():
    g1, _ = fig2_graphs()
    relabeled = canonical_graph(g1)
    for mode in ("cospectral", "coinvariant", "codet-Q", "codet-Z"):
        assert invariant_key(g1, "adjacency", mode) == invariant_key(
            relabeled, "adjacency", mode
        )


# ---------------------------------------------------------------------------
# surveys


def test_survey_n5_all_zero(corpus5):
    for kind in KINDS:
        for mode in ("cospectral", "codet-Q", "codet-Z"):
            report = run_survey(corpus5, kind, mode, workers=1)
            assert report.with_mate == 0
            assert report.buckets == ()
            assert report.total == 21


def test_survey_n6_adjacency_bucket_is_fig2_pair(corpus6):
    report = run_survey(corpus6, "adjacency", "codet-Q", workers=1)
    assert report.with_mate == 2
    assert len(report.buckets) == 1
    (_, members) = report.buckets[0]
    g1, g2 = fig2_graphs()
    expected = {write_graph6(canonical_graph(g1)), write_graph6(canonical_graph(g2))}
    assert set(members) == expected


def test_survey_n6_laplacian_codet_z(corpus6):
    report = run_survey(corpus6, "laplacian", "codet-Z", workers=1)
    assert report.with_mate == 2


def test_survey_determinism_across_workers(corpus6):
    a = run_survey(corpus6, "laplacian", "cospectral", workers=1)
    b = run_survey(corpus6, "laplacian", "cospectral", workers=2)
    assert a == b


def test_survey_csv_row(corpus5):
    report = run_survey(corpus5, "adjacency", "cospectral", workers=1)
    assert CSV_HEADER == "n,matrix,mode,total,with_mate"
    assert report.csv_row() == "5,adjacency,cospectral,21,0"


def test_survey_rejects_mixed_or_disconnected():
    with pytest.raises(ValueError):
        run_survey([complete_graph(4), complete_graph(5)], "adjacency", "cospectral", workers=1)
    with pytest.raises(DisconnectedGraphError):
        run_survey([Graph(2, (0, 0))], "adjacency", "cospectral", workers=1)


def test_survey_checkpoint(tmp_path, corpus5):
    path = tmp_path / "keys.jsonl"
    run_survey(corpus5, "adjacency", "coinvariant", workers=1,
               checkpoint_path=str(path), checkpoint_every=5)
    lines = path.read_text().strip().splitlines()
    assert len(lines) == 21
    rec = json.loads(lines[0])
    assert set(rec) == {"graph", "key_digest_input"}
    assert rec["key_digest_input"].startswith("snf:")


# ---------------------------------------------------------------------------
# determined-by


def test_determined_by_n6(corpus6):
    k6 = complete_graph(6)
    assert verify_determined_by(corpus6, k6, "distlap", "coinvariant", workers=1)
    assert verify_determined_by(corpus6, k6, "laplacian", "coinvariant", workers=1)
    assert verify_determined_by(corpus6, star_graph(6), "distlap", "coinvariant", workers=1)
    # adjacency SNF does not determine K_6 inside the n=6 corpus
    assert not verify_determined_by(corpus6, cycle_graph(6), "adjacency", "coinvariant", workers=1)


def test_determined_by_target_must_be_in_corpus(corpus5):
    with pytest.raises(ValueError):
        verify_determined_by(corpus5, complete_graph(6), "laplacian", "coinvariant", workers=1)


# ---------------------------------------------------------------------------
# cross-check diagnostics


def test_cross_check_small_all_kinds():
    from detideals.graphs import enumerate_connected

    for n in (4, 5):
        corpus = enumerate_connected(n)
        for kind in KINDS:
            report = cross_check(corpus, kind)
            assert report.ok, (n, kind, report)


def test_cross_check_n6(corpus6):
    for kind in ("adjacency", "distlap"):
        report = cross_check(corpus6, kind)
        assert report.ok, report
        if kind == "adjacency":
            assert report.cospectral_with_mate == 2
            assert report.codet_q_with_mate == 2
            assert report.codet_z_with_mate == 0
            assert report.coinvariant_with_mate == 112
