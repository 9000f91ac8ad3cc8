"""Shared session fixtures.

The expensive artifacts (a full replay of every bundled lemma at its
declared chain depth, and a catalog reproduction) are computed once per
session and shared by the module tests and the acceptance suite.
"""

import pytest

from lctdv import fixtures


@pytest.fixture(scope="session")
def all_surface_names():
    names = sorted(fixtures.list_surfaces())
    assert names, "no bundled surface fixtures found"
    return names


@pytest.fixture(scope="session")
def full_replay(all_surface_names):
    """name -> (cfg, script, upper, witness, report), full chain depth."""
    from lctdv.blowup import global_lct_upper
    from lctdv.certify import replay_lemma

    out = {}
    for name in all_surface_names:
        cfg = fixtures.load_surface_fixture(name)
        script = fixtures.load_lemma_fixture(name)
        upper, witness = global_lct_upper(cfg)
        report = replay_lemma(script, cfg)
        out[name] = (cfg, script, upper, witness, report)
    return out


@pytest.fixture(scope="session")
def tables_report():
    """The bundled catalog reproduced at chain depth 1.

    Depth 1 keeps the run fast; the full-depth verification of every
    lemma is exercised separately by the ``full_replay`` fixture.
    """
    from lctdv.harness import reproduce_tables

    return reproduce_tables(chain_depth=1)
