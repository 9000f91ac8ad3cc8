"""Lemma scripts: parsing, case analysis, inductive chains, replay."""

import dataclasses
from fractions import Fraction

import pytest

from lctdv import fixtures
from lctdv.certify import (ScriptError, adjunction_cases, check_case,
                           parse_lemma_script, replay_lemma)
from lctdv.polytope import (ConstraintSystem, LinForm, ge, gt,
                            verify_certificate)


@pytest.fixture(scope="module")
def a3_script():
    return fixtures.load_lemma_fixture("A3.deg1")


@pytest.fixture(scope="module")
def a3_cfg():
    return fixtures.load_surface_fixture("A3.deg1")


class TestParsing:
    def test_script_fields(self, a3_script):
        assert a3_script.surface == "A3.deg1"
        assert a3_script.target_t == 1
        assert a3_script.chains
        assert all(ch.depth_max == 12 for ch in a3_script.chains)

    def test_malformed_script_rejected(self):
        with pytest.raises(ScriptError):
            parse_lemma_script("[lemma] surface=A3.deg1\n")  # no target
        with pytest.raises(ScriptError):
            parse_lemma_script("[chain] depth=3\n")


class TestCheckCase:
    def test_infeasible_case_yields_certificates(self):
        base = ConstraintSystem(
            ["x"], [ge(LinForm({"x": 1})), ge(LinForm({"x": -1}, 1))])
        r = check_case(base, [gt(LinForm({"x": 1}, -2))])  # x > 2
        assert r.status == "infeasible"
        assert r.discharged
        assert r.certificates

    def test_feasible_case_is_a_gap_with_witness(self):
        base = ConstraintSystem(["x"], [ge(LinForm({"x": 1}))])
        r = check_case(base, [gt(LinForm({"x": 1}, -2))])
        assert r.status == "gap"
        assert not r.discharged
        assert r.witness["x"] > 2


class TestAdjunctionCases:
    def test_one_case_per_curve_and_edge(self, a3_cfg):
        cases = adjunction_cases(a3_cfg, Fraction(1))
        names = [name for name, _c in cases]
        assert len(names) == len(set(names))
        # [TRIVIAL] a point of the extremal divisor sits on one curve or
        # on one of the chain intersections: 3 curves + 2 edges.
        assert len(names) == 5


class TestReplay:
    def test_core_lemma_passes_at_small_depth(self, a3_script, a3_cfg):
        report = replay_lemma(a3_script, a3_cfg, chain_depth=2)
        assert report.passed
        assert all(ch.depth == 2 for ch in report.chains)
        assert "result: PASS" in report.render()

    def test_certificates_reverify_and_chain_invariants(self, a3_script,
                                                        a3_cfg):
        report = replay_lemma(a3_script, a3_cfg, chain_depth=2,
                              collect_systems=True)
        for case in report.cases:
            assert case.discharged, case.name
        for ch in report.chains:
            assert ch.base_claim_ok
            assert ch.monotone_ok
            for step in ch.steps:
                assert step.side_ok
                assert step.passed

    def test_overstated_target_fails_honestly(self):
        # Negative control: claiming a threshold above the certified one
        # must produce a gap (with a concrete witness), never a pass.
        script = fixtures.load_lemma_fixture("A4.deg1")
        cfg = fixtures.load_surface_fixture("A4.deg1")
        stronger = dataclasses.replace(script, target_t=Fraction(1),
                                       override=None)
        report = replay_lemma(stronger, cfg, chain_depth=2)
        assert not report.passed
        gaps = [c for c in report.cases if c.status == "gap"]
        failed_chains = [ch for ch in report.chains if not ch.passed]
        assert gaps or failed_chains
        assert "result: FAIL" in report.render()

    def test_collected_system_certificates_reverify(self, a3_cfg):
        # Round-trip: re-verify each emitted certificate against the
        # dumped system it claims to refute.
        script = fixtures.load_lemma_fixture("A3.deg1")
        report = replay_lemma(script, a3_cfg, chain_depth=1,
                              collect_systems=True)
        checked = 0
        for case in report.cases:
            if case.status != "infeasible" or case.system_dump is None:
                continue
            system = ConstraintSystem.parse(case.system_dump)
            for cert in case.certificates:
                assert verify_certificate(system, cert), case.name
                checked += 1
        assert checked > 0
