"""Shared corpus for the acceptance suite."""
from __future__ import annotations

import time

import pytest

from reebound import GenParams, assign_all, essential_subgraph, random_reeb, validate

CORPUS_SIZE = 1000
MAX_SADDLES = 50


@pytest.fixture(scope="session")
def corpus():
    """1000 deterministic random graphs with up to 50 saddles, validated,
    with their essential subgraphs."""
    out = []
    for seed in range(CORPUS_SIZE):
        params = GenParams(seed=seed,
                           saddle_count=seed % (MAX_SADDLES + 1),
                           parallel_edge_bias=(seed % 5) / 4.0,
                           inessential_bias=(seed % 7) / 6.0)
        g = random_reeb(params)
        report = validate(g)
        assert report.ok, (seed, report.violations)
        out.append((g, essential_subgraph(g, prevalidated=True)))
    return out


@pytest.fixture(scope="session")
def corpus_assignments(corpus):
    """Checked sweep over the whole corpus; returns (assignments, seconds)."""
    t0 = time.perf_counter()
    ps = [assign_all(sub, check=True) for _, sub in corpus]
    elapsed = time.perf_counter() - t0
    return ps, elapsed
