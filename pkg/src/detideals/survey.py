"""Corpus-scale classification of cospectral / coinvariant / codeterminantal mates.

Keys are canonical text renderings (never hashes), bucketing is exact key
equality, and the worker-pool map keeps input order so reports are
byte-identical regardless of worker count.
"""

from __future__ import annotations

import json
import multiprocessing
import os
from dataclasses import dataclass
from typing import Iterable, Sequence

from . import graphs
from .polyring import poly_str
from .profiles import determinantal_ideals, evaluate_profile, variety
from .smith import char_poly, snf_integer, snf_poly_q

MODES = ("cospectral", "coinvariant", "codet-Q", "codet-Z")

LARGE_CORPUS_THRESHOLD = 20000  # anything n >= 9 sized needs the explicit flag


@dataclass(frozen=True)
class InvariantKey:
    mode: str
    kind: str
    text: str


@dataclass(frozen=True)
class SurveyReport:
    n: int
    kind: str
    mode: str
    total: int
    with_mate: int
    buckets: tuple[tuple[str, tuple[str, ...]], ...]  # only buckets of size >= 2

    def csv_row(self) -> str:
        return f"{self.n},{self.kind},{self.mode},{self.total},{self.with_mate}"

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "matrix": self.kind,
            "mode": self.mode,
            "total": self.total,
            "with_mate": self.with_mate,
            "buckets": [{"key": k, "graphs": list(gs)} for k, gs in self.buckets],
        }


CSV_HEADER = "n,matrix,mode,total,with_mate"


def _key_text(g: graphs.Graph, kind: str, mode: str) -> str:
    if mode == "cospectral":
        p = char_poly(graphs.build_matrix(g, kind))
        return "charpoly:" + ",".join(str(c) for c in p.coeffs)
    if mode == "coinvariant":
        snf = snf_integer(graphs.build_matrix(g, kind))
        return "snf:" + ",".join(str(f) for f in snf.diagonal())
    if mode == "codet-Q":
        snf = snf_poly_q(graphs.char_matrix(g, kind, "Q"))
        return "deltaQ:" + ";".join(poly_str(snf.delta(k)) for k in range(1, g.n + 1))
    if mode == "codet-Z":
        profile = determinantal_ideals(g, kind, "Zx")
        parts = []
        for k, ideal in enumerate(profile.ideals, start=1):
            parts.append(f"k={k}:[" + ",".join(ideal.basis_strings()) + "]")
        return "idealsZ:" + ";".join(parts)
    raise ValueError(f"unknown survey mode {mode!r}")


def invariant_key(g: graphs.Graph, kind: str, mode: str) -> InvariantKey:
    return InvariantKey(mode, kind, _key_text(g, kind, mode))


def _worker(args: tuple[str, str, str]) -> str:
    g6, kind, mode = args
    return _key_text(graphs.parse_graph6(g6), kind, mode)


def default_workers() -> int:
    env = os.environ.get("DETIDEALS_WORKERS")
    if env:
        return max(1, int(env))
    return os.cpu_count() or 1


def _compute_keys(
    g6s: Sequence[str],
    kind: str,
    mode: str,
    workers: int,
    checkpoint_path: str | None = None,
    checkpoint_every: int = 1000,
) -> list[str]:
    """Keys for every graph, in input order; optionally streamed to a JSONL
    checkpoint file as they are computed."""
    tasks = [(g6, kind, mode) for g6 in g6s]
    if workers <= 1 or len(tasks) < 4:
        stream = map(_worker, tasks)
        pool = None
    else:
        pool = multiprocessing.Pool(workers)
        stream = pool.imap(_worker, tasks, chunksize=max(1, len(tasks) // (workers * 8)))
    keys: list[str] = []
    try:
        if checkpoint_path:
            with open(checkpoint_path, "w", encoding="utf-8") as fh:
                for g6, key in zip(g6s, stream):
                    keys.append(key)
                    fh.write(json.dumps({"graph": g6, "key_digest_input": key}) + "\n")
                    if len(keys) % checkpoint_every == 0:
                        fh.flush()
        else:
            keys.extend(stream)
    finally:
        if pool is not None:
            pool.close()
            pool.join()
    return keys


def _validate_corpus(corpus: Sequence[graphs.Graph]) -> int:
    if not corpus:
        raise ValueError("empty corpus")
    n = corpus[0].n
    for g in corpus:
        if g.n != n:
            raise ValueError("corpus mixes vertex counts")
        if not graphs.is_connected(g):
            raise graphs.DisconnectedGraphError(
                f"disconnected graph in corpus: {graphs.write_graph6(g)}"
            )
    return n


def run_survey(
    corpus: Iterable[graphs.Graph],
    kind: str,
    mode: str,
    workers: int | None = None,
    checkpoint_path: str | None = None,
    checkpoint_every: int = 1000,
) -> SurveyReport:
    corpus = list(corpus)
    n = _validate_corpus(corpus)
    if workers is None:
        workers = default_workers()
    g6s = [graphs.write_graph6(g) for g in corpus]
    keys = _compute_keys(g6s, kind, mode, workers,
                         checkpoint_path=checkpoint_path,
                         checkpoint_every=checkpoint_every)

    buckets: dict[str, list[str]] = {}
    for g6, key in zip(g6s, keys):
        buckets.setdefault(key, []).append(g6)
    mates = {k: v for k, v in buckets.items() if len(v) >= 2}

    if mode == "codet-Z":
        _confirm_ideal_buckets(mates, kind)

    with_mate = sum(len(v) for v in mates.values())
    ordered = tuple(sorted((k, tuple(v)) for k, v in mates.items()))
    return SurveyReport(n, kind, mode, len(corpus), with_mate, ordered)


def _confirm_ideal_buckets(buckets: dict[str, list[str]], kind: str):
    """Guard against rendering collisions: all pairs in a codet-Z bucket must
    be ideal-equal for every k."""
    for key, members in buckets.items():
        profiles = [
            determinantal_ideals(graphs.parse_graph6(g6), kind, "Zx") for g6 in members
        ]
        for i in range(len(profiles)):
            for j in range(i + 1, len(profiles)):
                for a, b in zip(profiles[i].ideals, profiles[j].ideals):
                    if not a.equal(b):
                        raise AssertionError(
                            f"key collision without ideal equality in bucket {key!r}: "
                            f"{members[i]} vs {members[j]}"
                        )


def verify_determined_by(
    corpus: Iterable[graphs.Graph], target: graphs.Graph, kind: str, mode: str,
    workers: int | None = None,
) -> bool:
    """True iff the target's invariant bucket inside the corpus is a singleton."""
    corpus = list(corpus)
    _validate_corpus(corpus)
    key = _key_text(target, kind, mode)
    keys = _compute_keys([graphs.write_graph6(g) for g in corpus], kind, mode,
                         workers if workers is not None else default_workers())
    matches = sum(1 for k in keys if k == key)
    if matches == 0:
        raise ValueError("target graph is not in the corpus class")
    return matches == 1


# ---------------------------------------------------------------------------
# full-corpus consistency diagnostics


@dataclass(frozen=True)
class CrossCheckReport:
    n: int
    kind: str
    total: int
    cospectral_with_mate: int
    coinvariant_with_mate: int
    codet_q_with_mate: int
    codet_z_with_mate: int
    cospectral_equals_codet_q: bool
    coinvariant_equals_eval0: bool
    codet_z_refines_all: bool
    codet_q_equals_varieties: bool
    witness: str | None

    @property
    def ok(self) -> bool:
        return (
            self.cospectral_equals_codet_q
            and self.coinvariant_equals_eval0
            and self.codet_z_refines_all
            and self.codet_q_equals_varieties
        )


def _partition_ids(keys: Sequence[str]) -> list[tuple[int, ...]]:
    buckets: dict[str, list[int]] = {}
    for i, k in enumerate(keys):
        buckets.setdefault(k, []).append(i)
    return [tuple(buckets[k]) for k in keys]


def _with_mate(keys: Sequence[str]) -> int:
    counts: dict[str, int] = {}
    for k in keys:
        counts[k] = counts.get(k, 0) + 1
    return sum(c for c in counts.values() if c >= 2)


def cross_check(corpus: Iterable[graphs.Graph], kind: str,
                workers: int | None = None) -> CrossCheckReport:
    """Assert the partition relations the theory demands on a whole corpus:
    cospectral == codet-Q, coinvariant == eval-at-0 of codet-Z, codet-Z refines
    both, and codet-Q == equal-per-k-varieties."""
    corpus = list(corpus)
    n = _validate_corpus(corpus)
    g6s = [graphs.write_graph6(g) for g in corpus]
    spectrum = []
    coinv = []
    qkeys = []
    varkeys = []
    zkeys = []
    eval0 = []
    for g in corpus:
        spectrum.append(_key_text(g, kind, "cospectral"))
        coinv.append(_key_text(g, kind, "coinvariant"))
        qprofile = determinantal_ideals(g, kind, "Qx")
        qkeys.append(
            ";".join(",".join(i.basis_strings()) for i in qprofile.ideals)
        )
        vparts = []
        for k in range(1, g.n + 1):
            v = variety(qprofile, k)
            vparts.append(v.status if v.status != "roots" else poly_str(v.squarefree))
        varkeys.append(";".join(vparts))
        zprofile = determinantal_ideals(g, kind, "Zx")
        zkeys.append(
            ";".join(",".join(i.basis_strings()) for i in zprofile.ideals)
        )
        eval0.append(",".join(str(d) for d in evaluate_profile(zprofile, 0)))

    witness = None

    def partitions_equal(a, b):
        nonlocal witness
        pa, pb = _partition_ids(a), _partition_ids(b)
        for i, (x, y) in enumerate(zip(pa, pb)):
            if x != y:
                other = next(j for j in set(x) ^ set(y))
                witness = witness or f"{g6s[i]} vs {g6s[other]}"
                return False
        return True

    def refines(fine, coarse):
        nonlocal witness
        pf, pc = _partition_ids(fine), _partition_ids(coarse)
        for i, (f, c) in enumerate(zip(pf, pc)):
            if not set(f) <= set(c):
                other = next(j for j in set(f) - set(c))
                witness = witness or f"{g6s[i]} vs {g6s[other]}"
                return False
        return True

    a = partitions_equal(spectrum, qkeys)
    b = partitions_equal(coinv, eval0)
    c = refines(zkeys, spectrum) and refines(zkeys, coinv)
    d = partitions_equal(qkeys, varkeys)
    return CrossCheckReport(
        n=n,
        kind=kind,
        total=len(corpus),
        cospectral_with_mate=_with_mate(spectrum),
        coinvariant_with_mate=_with_mate(coinv),
        codet_q_with_mate=_with_mate(qkeys),
        codet_z_with_mate=_with_mate(zkeys),
        cospectral_equals_codet_q=a,
        coinvariant_equals_eval0=b,
        codet_z_refines_all=c,
        codet_q_equals_varieties=d,
        witness=witness,
    )
